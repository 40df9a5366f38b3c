#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace eaqmds {

using Residue = std::int64_t;

/// Modulus n and field parameter q for q^2-cyclotomic cosets mod n.
class CycContext {
public:
    CycContext(PrimePower q, Residue n) : q_(q), n_(n) {
        if (n < 1) throw std::invalid_argument("modulus n must be positive");
        if (std::gcd(static_cast<std::uint64_t>(n), q.q) != 1) {
            throw std::invalid_argument("gcd(n, q) must be 1 (n = " + std::to_string(n) +
                                        ", q = " + std::to_string(q.q) + ")");
        }
        multiplier_ = static_cast<Residue>(nt::mulmod(q.q % n, q.q % n, static_cast<std::uint64_t>(n)));
        q_mod_n_ = static_cast<Residue>(q.q % static_cast<std::uint64_t>(n));
        family_length_ = 5 * static_cast<unsigned __int128>(n) == static_cast<unsigned __int128>(q.q) * q.q + 1;
        if (family_length_ && n > 1 && multiplier_ != n - 1) {
            throw std::logic_error("q^2 is not -1 mod (q^2+1)/5");
        }
    }

    /// The length n = (q^2 + 1)/5; throws when 5 does not divide q^2 + 1.
    static CycContext family(PrimePower q) {
        const unsigned __int128 v = static_cast<unsigned __int128>(q.q) * q.q + 1;
        if (v % 5 != 0) {
            throw std::invalid_argument("(q^2+1) not divisible by 5 for q = " + std::to_string(q.q) +
                                        "; need q = +-2 mod 5");
        }
        return CycContext(q, static_cast<Residue>(v / 5));
    }

    Residue n() const { return n_; }
    const PrimePower& q() const { return q_; }
    /// q^2 mod n
    Residue multiplier() const { return multiplier_; }
    /// (-q * x) mod n
    Residue neg_q(Residue x) const {
        const auto prod = nt::mulmod(static_cast<std::uint64_t>(q_mod_n_), static_cast<std::uint64_t>(x),
                                     static_cast<std::uint64_t>(n_));
        return prod == 0 ? 0 : n_ - static_cast<Residue>(prod);
    }
    bool is_family_length() const { return family_length_; }

    friend bool operator==(const CycContext& a, const CycContext& b) { return a.q_ == b.q_ && a.n_ == b.n_; }

private:
    PrimePower q_;
    Residue n_;
    Residue multiplier_ = 0;
    Residue q_mod_n_ = 0;
    bool family_length_ = false;
};

/// Orbit of a residue under multiplication by q^2 mod n.
struct CycCoset {
    Residue rep = 0;                 // smallest member
    std::vector<Residue> elements;  // sorted
};

inline CycCoset coset(const CycContext& ctx, Residue i) {
    if (i < 0 || i >= ctx.n()) throw std::out_of_range("coset index outside [0, n)");
    CycCoset c;
    Residue x = i;
    do {
        c.elements.push_back(x);
        x = static_cast<Residue>(nt::mulmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(ctx.multiplier()),
                                            static_cast<std::uint64_t>(ctx.n())));
    } while (x != i);
    std::sort(c.elements.begin(), c.elements.end());
    c.rep = c.elements.front();
    return c;
}

/// Partition of Z_n into cosets, ordered by representative.
inline std::vector<CycCoset> all_cosets(const CycContext& ctx) {
    std::vector<CycCoset> out;
    std::vector<bool> seen(static_cast<std::size_t>(ctx.n()), false);
    for (Residue i = 0; i < ctx.n(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        auto c = coset(ctx, i);
        for (Residue e : c.elements) seen[static_cast<std::size_t>(e)] = true;
        out.push_back(std::move(c));
    }
    return out;
}

/// A union of whole cosets, stored as a sorted residue list.
class DefiningSet {
public:
    explicit DefiningSet(CycContext ctx) : ctx_(std::move(ctx)) {}

    /// Validates range and closure under multiplication by q^2.
    static DefiningSet from_members(CycContext ctx, std::vector<Residue> members) {
        normalize(ctx, members);
        for (Residue z : members) {
            const auto next = static_cast<Residue>(nt::mulmod(static_cast<std::uint64_t>(z),
                                                              static_cast<std::uint64_t>(ctx.multiplier()),
                                                              static_cast<std::uint64_t>(ctx.n())));
            if (!std::binary_search(members.begin(), members.end(), next)) {
                throw std::invalid_argument("residue set is not a union of q^2-cyclotomic cosets (" +
                                            std::to_string(z) + " present, " + std::to_string(next) + " missing)");
            }
        }
        return DefiningSet(std::move(ctx), std::move(members));
    }

    /// Smallest coset-closed set containing the given residues.
    static DefiningSet closure(CycContext ctx, std::span<const Residue> residues) {
        std::vector<Residue> members;
        for (Residue r : residues) {
            auto c = coset(ctx, nt::mod(r, ctx.n()));
            members.insert(members.end(), c.elements.begin(), c.elements.end());
        }
        normalize(ctx, members);
        return DefiningSet(std::move(ctx), std::move(members));
    }

    static DefiningSet of_coset(const CycContext& ctx, const CycCoset& c) { return DefiningSet(ctx, c.elements); }

    /// Already sorted, unique and coset-closed; no checks.
    static DefiningSet unchecked(CycContext ctx, std::vector<Residue> members) {
        return DefiningSet(std::move(ctx), std::move(members));
    }

    const CycContext& ctx() const { return ctx_; }
    const std::vector<Residue>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Residue z) const { return std::binary_search(members_.begin(), members_.end(), z); }

    friend bool operator==(const DefiningSet& a, const DefiningSet& b) {
        return a.ctx_ == b.ctx_ && a.members_ == b.members_;
    }

private:
    DefiningSet(CycContext ctx, std::vector<Residue> members) : ctx_(std::move(ctx)), members_(std::move(members)) {}

    static void normalize(const CycContext& ctx, std::vector<Residue>& members) {
        for (Residue z : members) {
            if (z < 0 || z >= ctx.n()) throw std::out_of_range("residue " + std::to_string(z) + " outside [0, n)");
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    CycContext ctx_;
    std::vector<Residue> members_;
};

/// {(n - q x) mod n : x in S}
inline DefiningSet neg_q_map(const DefiningSet& s) {
    std::vector<Residue> out;
    out.reserve(s.size());
    for (Residue x : s.members()) out.push_back(s.ctx().neg_q(x));
    std::sort(out.begin(), out.end());
    return DefiningSet::unchecked(s.ctx(), std::move(out));
}

namespace detail {
inline void require_same_ctx(const DefiningSet& a, const DefiningSet& b) {
    if (!(a.ctx() == b.ctx())) throw std::invalid_argument("defining sets have different contexts");
}
}  // namespace detail

inline DefiningSet set_union(const DefiningSet& a, const DefiningSet& b) {
    detail::require_same_ctx(a, b);
    std::vector<Residue> out;
    std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                   std::back_inserter(out));
    return DefiningSet::unchecked(a.ctx(), std::move(out));
}

inline DefiningSet set_intersect(const DefiningSet& a, const DefiningSet& b) {
    detail::require_same_ctx(a, b);
    std::vector<Residue> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return DefiningSet::unchecked(a.ctx(), std::move(out));
}

inline DefiningSet set_difference(const DefiningSet& a, const DefiningSet& b) {
    detail::require_same_ctx(a, b);
    std::vector<Residue> out;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
    return DefiningSet::unchecked(a.ctx(), std::move(out));
}

/// Union of the cosets C_lo, C_{lo+1}, ..., C_hi (indices reduced mod n).
inline DefiningSet coset_range(const CycContext& ctx, Residue lo, Residue hi) {
    std::vector<Residue> reps;
    for (Residue i = lo; i <= hi; ++i) reps.push_back(i);
    return DefiningSet::closure(ctx, reps);
}

/// -q C_a == C_b, with both indices reduced mod n.
inline bool neg_q_maps_coset(const CycContext& ctx, Residue from, Residue to) {
    const auto lhs = neg_q_map(DefiningSet::of_coset(ctx, coset(ctx, nt::mod(from, ctx.n()))));
    const auto rhs = DefiningSet::of_coset(ctx, coset(ctx, nt::mod(to, ctx.n())));
    return lhs == rhs;
}

}  // namespace eaqmds
