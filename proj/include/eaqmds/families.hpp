#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "cosets.hpp"
#include "eaqecc.hpp"
#include "numtheory.hpp"
#include "published.hpp"

namespace eaqmds {

enum class FamilyId { Q10K3, Q10K7, E1MOD4, E3MOD4 };

inline constexpr FamilyId kAllFamilies[] = {FamilyId::Q10K3, FamilyId::Q10K7, FamilyId::E1MOD4, FamilyId::E3MOD4};

inline std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::Q10K3: return "Q10K3";
        case FamilyId::Q10K7: return "Q10K7";
        case FamilyId::E1MOD4: return "E1MOD4";
        case FamilyId::E3MOD4: return "E3MOD4";
    }
    return "?";
}

/// Case-insensitive.
inline std::optional<FamilyId> parse_family_id(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (FamilyId id : kAllFamilies) {
        if (to_string(id) == s) return id;
    }
    return std::nullopt;
}

struct FamilySpec {
    FamilyId id;
    PrimePower q;
    std::int64_t n;
    std::int64_t m_max;

    CycContext ctx() const { return CycContext(q, n); }
    std::int64_t qv() const { return static_cast<std::int64_t>(q.q); }
};

struct Classification {
    std::optional<FamilySpec> spec;
    std::string reason;  // empty when classified
};

inline Classification classify(std::uint64_t qv) {
    if (!PrimePower::is_prime_power(qv)) return {std::nullopt, std::to_string(qv) + " is not a prime power"};
    const PrimePower q = PrimePower::from_value(qv);
    if ((qv % 5 != 2) && (qv % 5 != 3)) {
        return {std::nullopt, "5 does not divide q^2+1 (need q = +-2 mod 5)"};
    }
    const auto n = static_cast<std::int64_t>((qv * qv + 1) / 5);
    const auto qi = static_cast<std::int64_t>(qv);
    if (q.p != 2) {
        if (qv % 10 == 3) {
            if (qv < 23) return {std::nullopt, "q = 10k+3 requires k >= 2"};
            return {FamilySpec{FamilyId::Q10K3, q, n, (qi - 3) / 10}, ""};
        }
        if (qv < 27) return {std::nullopt, "q = 10k+7 requires k >= 2"};
        return {FamilySpec{FamilyId::Q10K7, q, n, (qi - 7) / 10}, ""};
    }
    if (q.e % 4 == 1) {
        if (q.e == 1) return {std::nullopt, "q = 2^e requires e > 1"};
        return {FamilySpec{FamilyId::E1MOD4, q, n, (qi - 2) / 10}, ""};
    }
    return {FamilySpec{FamilyId::E3MOD4, q, n, (qi - 8) / 10}, ""};
}

/// Thrown for m outside the family's valid interval.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// m = 1 is accepted only when allow_degenerate is set.
inline void require_m(const FamilySpec& spec, std::int64_t m, bool allow_degenerate) {
    if (allow_degenerate && m == 1) return;
    if (m < 2 || m > spec.m_max) {
        throw RangeError("m = " + std::to_string(m) + " out of range for q = " + std::to_string(spec.q.q) +
                         "; valid m: 2.." + std::to_string(spec.m_max));
    }
}

/// Inclusive integer interval; empty when lo > hi.
struct IndexRange {
    std::int64_t lo;
    std::int64_t hi;
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    bool empty() const { return lo > hi; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// One window of cosets: C_{outer*q + inner} (PlusInner) or
/// C_{outer*q - inner} (MinusInner) for all outer, inner in range.
struct CosetWindow {
    enum class Kind { PlusInner, MinusInner };
    Kind kind;
    IndexRange outer;
    IndexRange inner;
    friend bool operator==(const CosetWindow&, const CosetWindow&) = default;
};

/// The five family-dependent boundaries used by every window:
/// A = (q+2)/5, B = (q-3)/5, C = (2q+4)/5, D = (2q-1)/5, E = (3q+1)/5 for
/// q = 3 mod 5, and A = (q+3)/5, B = (q-2)/5, C = (2q+1)/5, D = (2q-4)/5,
/// E = (3q+4)/5 for q = 2 mod 5.
struct WindowBounds {
    std::int64_t a, b, c, d, e;
};

inline WindowBounds window_bounds(const FamilySpec& spec) {
    const std::int64_t q = spec.qv();
    if (spec.id == FamilyId::Q10K3 || spec.id == FamilyId::E3MOD4) {
        return {(q + 2) / 5, (q - 3) / 5, (2 * q + 4) / 5, (2 * q - 1) / 5, (3 * q + 1) / 5};
    }
    return {(q + 3) / 5, (q - 2) / 5, (2 * q + 1) / 5, (2 * q - 4) / 5, (3 * q + 4) / 5};
}

/// Windows of Z1, in the order i1, i2, i3, j1, j2.
inline std::vector<CosetWindow> z1_windows(const FamilySpec& spec, std::int64_t m) {
    require_m(spec, m, false);
    const auto w = window_bounds(spec);
    const IndexRange s{0, m - 2};
    const IndexRange t{1, m - 1};
    using K = CosetWindow::Kind;
    return {
        {K::PlusInner, s, {m, w.a - m}},
        {K::PlusInner, s, {w.b + m, w.c - m}},
        {K::PlusInner, s, {w.d + m, w.e - m}},
        {K::MinusInner, t, {w.b + m, w.c - m}},
        {K::MinusInner, t, {m - 1, w.a - m}},
    };
}

/// Windows of the complementary set Z1' (the part of Z fixed by -q).
inline std::vector<CosetWindow> z1_prime_windows(const FamilySpec& spec, std::int64_t m) {
    require_m(spec, m, false);
    const auto w = window_bounds(spec);
    const IndexRange s{0, m - 2};
    const IndexRange t{1, m - 1};
    using K = CosetWindow::Kind;
    return {
        {K::PlusInner, s, {0, m - 1}},
        {K::PlusInner, s, {w.a - m + 1, w.b + m - 1}},
        {K::PlusInner, s, {w.c - m + 1, w.d + m - 1}},
        {K::MinusInner, t, {0, m - 2}},
        {K::MinusInner, t, {w.a - m + 1, w.b + m - 1}},
        {K::MinusInner, t, {w.c - m + 1, w.d + m - 1}},
    };
}

inline DefiningSet union_of_windows(const CycContext& ctx, const std::vector<CosetWindow>& windows) {
    const auto q = static_cast<std::int64_t>(ctx.q().q);
    std::vector<Residue> reps;
    for (const auto& w : windows) {
        for (std::int64_t o = w.outer.lo; o <= w.outer.hi; ++o) {
            for (std::int64_t i = w.inner.lo; i <= w.inner.hi; ++i) {
                reps.push_back(nt::mod(w.kind == CosetWindow::Kind::PlusInner ? o * q + i : o * q - i, ctx.n()));
            }
        }
    }
    return DefiningSet::closure(ctx, reps);
}

/// Z = C_0 ∪ C_1 ∪ ... ∪ C_{(m-1)q}; m = 1 gives the degenerate Z = {0}.
inline DefiningSet build_defining_set(const FamilySpec& spec, std::int64_t m) {
    require_m(spec, m, true);
    return coset_range(spec.ctx(), 0, (m - 1) * spec.qv());
}

inline DefiningSet build_z1(const FamilySpec& spec, std::int64_t m) {
    return union_of_windows(spec.ctx(), z1_windows(spec, m));
}

inline DefiningSet build_z1_prime(const FamilySpec& spec, std::int64_t m) {
    return union_of_windows(spec.ctx(), z1_prime_windows(spec, m));
}

/// Predicted parameters with the sign-consistent dimension
/// n - 4(m-1)(q - 5(m-1)) - 1.
inline EaqeccParams predicted_params(const FamilySpec& spec, std::int64_t m) {
    require_m(spec, m, true);
    const std::int64_t q = spec.qv();
    EaqeccParams p;
    p.n = spec.n;
    p.k = spec.n - 4 * (m - 1) * (q - 5 * (m - 1)) - 1;
    p.d = 2 * (m - 1) * q + 2;
    p.c = 20 * (m - 1) * (m - 1) + 1;
    p.in_theorem_range = m >= 2 && m <= spec.m_max;
    p.d_is_exact = true;
    return with_flags(p);
}

/// The dimension as the theorem statements print it, n - 4(m-1)(5m-q-5) - 1.
inline std::int64_t printed_theorem_dimension(const FamilySpec& spec, std::int64_t m) {
    return spec.n - 4 * (m - 1) * (5 * m - spec.qv() - 5) - 1;
}

struct FamilyCode {
    FamilySpec spec;
    std::int64_t m = 0;
    DefiningSet z;
    std::optional<DefiningSet> z1;
    std::optional<DefiningSet> z1_prime;
    std::int64_t predicted_c = 0;
    EaqeccParams predicted;
    EaqeccParams verified;
    std::int64_t bch_run = 0;
    std::int64_t printed_theorem_k = 0;
    std::vector<std::string> errata_flags;
    std::vector<std::string> discrepancies;  // empty means every check agreed

    bool ok() const { return discrepancies.empty(); }
};

/// Builds Z, recomputes everything from first principles and compares it
/// with the predicted parameters. Mismatches are collected, never thrown.
inline FamilyCode verify_family_code(const FamilySpec& spec, std::int64_t m, bool allow_degenerate = false) {
    require_m(spec, m, allow_degenerate);
    FamilyCode fc{spec, m, build_defining_set(spec, m), std::nullopt, std::nullopt, 0, {}, {}, 0, 0, {}, {}};
    auto fail = [&](std::string msg) { fc.discrepancies.push_back(std::move(msg)); };

    fc.predicted = predicted_params(spec, m);
    fc.predicted_c = fc.predicted.c;
    fc.printed_theorem_k = printed_theorem_dimension(spec, m);
    const auto dec = decompose(fc.z);
    fc.verified = eaqecc_params(fc.z);
    fc.verified.in_theorem_range = fc.predicted.in_theorem_range;
    fc.bch_run = longest_circular_run(fc.z);

    if (static_cast<std::int64_t>(fc.z.size()) != 2 * (m - 1) * spec.qv() + 1) fail("|Z| != 2(m-1)q+1");
    if (fc.bch_run != static_cast<std::int64_t>(fc.z.size())) {
        fail("defining set is not one circular run (run " + std::to_string(fc.bch_run) + ", |Z| " +
             std::to_string(fc.z.size()) + ")");
    }
    if (!fc.verified.d_is_exact) fail("classical code is not certified MDS");
    if (fc.verified.c != fc.predicted.c) {
        fail("ebits " + std::to_string(fc.verified.c) + " != 20(m-1)^2+1 = " + std::to_string(fc.predicted.c));
    }
    if (fc.verified.n != fc.predicted.n || fc.verified.k != fc.predicted.k || fc.verified.d != fc.predicted.d) {
        fail("computed " + format_params(fc.verified) + " != predicted " + format_params(fc.predicted));
    }
    if (!fc.verified.singleton_equality) fail("Singleton equality n+c-k = 2(d-1) fails");

    if (m >= 2) {
        fc.z1 = build_z1(spec, m);
        fc.z1_prime = build_z1_prime(spec, m);
        const auto& z1 = *fc.z1;
        const auto& z1p = *fc.z1_prime;
        if (!set_intersect(z1, neg_q_map(z1)).empty()) fail("Z1 meets -qZ1");
        if (!set_intersect(z1, z1p).empty()) fail("Z1 and Z1' overlap");
        if (!(set_union(z1, z1p) == fc.z)) fail("Z1 ∪ Z1' != Z");
        if (!(neg_q_map(z1p) == z1p)) fail("-qZ1' != Z1'");
        if (!(dec.z2 == z1p)) fail("Z2 != Z1'");
    } else {
        fc.errata_flags.push_back("degenerate-m");
    }

    if (!fc.verified.distance_precondition_ok) fc.errata_flags.push_back("distance-precondition-violated");
    if (auto pub = find_published_code(spec.q.q, m); pub && pub->k != fc.verified.k) {
        fc.errata_flags.push_back("published-dimension-mismatch(" + std::to_string(pub->k) + ")");
    }
    return fc;
}

/// All classified q <= q_max of one family, ascending.
inline std::vector<FamilySpec> family_members(FamilyId id, std::uint64_t q_max) {
    std::vector<FamilySpec> out;
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        auto cls = classify(q);
        if (cls.spec && cls.spec->id == id) out.push_back(*cls.spec);
    }
    return out;
}

/// Every (q, m) grid point with q <= q_max, q ascending then m ascending.
inline std::vector<FamilyCode> enumerate_family(FamilyId id, std::uint64_t q_max) {
    std::vector<FamilyCode> out;
    for (const auto& spec : family_members(id, q_max)) {
        for (std::int64_t m = 2; m <= spec.m_max; ++m) out.push_back(verify_family_code(spec, m));
    }
    return out;
}

// Coset-map identities -qC_{sq+i} = C_{iq-s} and -qC_{tq-j} = C_{jq+t}.

enum class IdentityCheck { Holds, Fails, UntestedRange };

inline std::string to_string(IdentityCheck c) {
    switch (c) {
        case IdentityCheck::Holds: return "holds";
        case IdentityCheck::Fails: return "fails";
        case IdentityCheck::UntestedRange: return "untested range";
    }
    return "?";
}

/// first ranges over s (or j), second over i (or t).
struct IdentityWindow {
    IndexRange first;
    IndexRange second;
    bool contains(std::int64_t f, std::int64_t s) const { return first.contains(f) && second.contains(s); }
};

namespace detail {

/// Even q: the index pairs the Z1 / Z1' constructions actually use, over all
/// valid m. PlusInner windows feed the forward identity, MinusInner the inverse.
inline std::vector<IdentityWindow> usage_windows(const FamilySpec& spec, CosetWindow::Kind kind) {
    std::vector<IdentityWindow> out;
    for (std::int64_t m = 2; m <= spec.m_max; ++m) {
        auto ws = z1_windows(spec, m);
        auto wp = z1_prime_windows(spec, m);
        ws.insert(ws.end(), wp.begin(), wp.end());
        for (const auto& w : ws) {
            if (w.kind != kind || w.inner.empty()) continue;
            if (kind == CosetWindow::Kind::PlusInner) {
                out.push_back({w.outer, w.inner});  // (s, i)
            } else {
                out.push_back({w.inner, w.outer});  // (j, t)
            }
        }
    }
    return out;
}

}  // namespace detail

/// Windows for (s, i) in -qC_{sq+i} = C_{iq-s}.
inline std::vector<IdentityWindow> forward_identity_windows(const FamilySpec& spec) {
    const std::int64_t q = spec.qv();
    switch (spec.id) {
        case FamilyId::Q10K3: {
            const std::int64_t top = (q - 3) / 10;
            return {{{0, top - 1}, {1, (3 * q - 9) / 10}},
                    {{0, top - 1}, {(2 * q + 4) / 5, (3 * q - 4) / 5}},
                    {{top, top}, {1, (3 * q - 9) / 10}}};
        }
        case FamilyId::Q10K7: {
            const IndexRange s{0, (q - 7) / 10};
            return {{s, {1, (q - 2) / 5}}, {s, {(3 * q + 9) / 10, (2 * q - 4) / 5}}, {s, {(q + 1) / 2, (7 * q - 9) / 10}}};
        }
        default: return detail::usage_windows(spec, CosetWindow::Kind::PlusInner);
    }
}

/// Windows for (j, t) in -qC_{tq-j} = C_{jq+t}. For q = 10k+3 the lower end
/// of the second t-interval is (2q+4)/5 + offset; the derivation from the
/// forward identity suggests offset 0, the printed statement uses 2.
inline std::vector<IdentityWindow> inverse_identity_windows(const FamilySpec& spec, std::int64_t offset = 0) {
    const std::int64_t q = spec.qv();
    switch (spec.id) {
        case FamilyId::Q10K3: {
            const std::int64_t top = (q - 3) / 10;
            return {{{0, top - 1}, {1, (3 * q - 9) / 10}},
                    {{0, top - 1}, {(2 * q + 4) / 5 + offset, (3 * q - 4) / 5}},
                    {{top, top}, {1, (3 * q - 9) / 10}}};
        }
        case FamilyId::Q10K7: {
            const IndexRange j{0, (q - 7) / 10};
            return {{j, {1, (q - 2) / 5}}, {j, {(3 * q + 9) / 10, (2 * q - 4) / 5}}, {j, {(q + 1) / 2, (7 * q - 9) / 10}}};
        }
        default: return detail::usage_windows(spec, CosetWindow::Kind::MinusInner);
    }
}

namespace detail {
inline bool in_windows(const std::vector<IdentityWindow>& ws, std::int64_t a, std::int64_t b) {
    for (const auto& w : ws) {
        if (w.contains(a, b)) return true;
    }
    return false;
}
}  // namespace detail

inline IdentityCheck coset_map_identity_check(const FamilySpec& spec, std::int64_t s, std::int64_t i) {
    if (!detail::in_windows(forward_identity_windows(spec), s, i)) return IdentityCheck::UntestedRange;
    const std::int64_t q = spec.qv();
    return neg_q_maps_coset(spec.ctx(), s * q + i, i * q - s) ? IdentityCheck::Holds : IdentityCheck::Fails;
}

inline IdentityCheck inverse_identity_check(const FamilySpec& spec, std::int64_t j, std::int64_t t,
                                            std::int64_t offset = 0) {
    if (!detail::in_windows(inverse_identity_windows(spec, offset), j, t)) return IdentityCheck::UntestedRange;
    const std::int64_t q = spec.qv();
    return neg_q_maps_coset(spec.ctx(), t * q - j, j * q + t) ? IdentityCheck::Holds : IdentityCheck::Fails;
}

}  // namespace eaqmds
