#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cosets.hpp"
#include "poly.hpp"
#include "tower.hpp"

namespace eaqmds {

/// Classical parameters of the cyclic code with a given defining set.
struct ClassicalParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d_bch = 0;  // designed distance, a lower bound on d
    bool is_mds = false;
};

inline std::int64_t dimension(const DefiningSet& z) {
    return z.ctx().n() - static_cast<std::int64_t>(z.size());
}

/// Longest run of consecutive residues of Z taken circularly mod n.
inline std::int64_t longest_circular_run(const DefiningSet& z) {
    const std::int64_t n = z.ctx().n();
    if (static_cast<std::int64_t>(z.size()) == n) return n;
    if (z.empty()) return 0;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (Residue r : z.members()) in[static_cast<std::size_t>(r)] = true;
    std::int64_t start = 0;
    while (in[static_cast<std::size_t>(start)]) ++start;
    std::int64_t best = 0;
    std::int64_t run = 0;
    for (std::int64_t step = 1; step <= n; ++step) {
        if (in[static_cast<std::size_t>((start + step) % n)]) {
            best = std::max(best, ++run);
        } else {
            run = 0;
        }
    }
    return best;
}

/// BCH bound: one more than the longest circular run; 1 for the empty set.
inline std::int64_t bch_bound(const DefiningSet& z) { return longest_circular_run(z) + 1; }

inline ClassicalParams mds_certificate(const DefiningSet& z) {
    ClassicalParams out;
    out.n = z.ctx().n();
    out.k = dimension(z);
    out.d_bch = bch_bound(z);
    out.is_mds = out.d_bch == out.n - out.k + 1;
    return out;
}

/// The code contains its Hermitian dual iff Z and -qZ are disjoint.
inline bool hermitian_dual_containing(const DefiningSet& z) {
    return set_intersect(z, neg_q_map(z)).empty();
}

/// Groups the members of a coset-closed set into their cosets (by rep).
inline std::vector<CycCoset> cosets_of(const DefiningSet& z) {
    std::vector<CycCoset> out;
    std::vector<bool> covered(static_cast<std::size_t>(z.ctx().n()), false);
    for (Residue r : z.members()) {
        if (covered[static_cast<std::size_t>(r)]) continue;
        auto c = coset(z.ctx(), r);
        for (Residue e : c.elements) covered[static_cast<std::size_t>(e)] = true;
        out.push_back(std::move(c));
    }
    return out;
}

/// g(x) = prod_{z in Z} (x - lam^z) over F_{q^2}, built coset by coset from
/// minimal polynomials. lam is the tower's canonical element of order n.
inline gf::DensePoly generator_polynomial(const DefiningSet& z, const gf::FieldTower& tower) {
    if (!(tower.q() == z.ctx().q())) throw std::invalid_argument("field tower built for a different q");
    const auto lam = tower.root_of_unity(static_cast<std::uint64_t>(z.ctx().n()));
    gf::DensePoly g(tower.small(), {1});
    for (const auto& c : cosets_of(z)) {
        g = g * gf::minimal_poly_over_subfield(tower, lam, c.elements);
    }
    return g;
}

}  // namespace eaqmds
