#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "codes.hpp"
#include "cosets.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "tower.hpp"

namespace eaqmds {

using gf::MatrixGF;

/// Rows are the cyclic shifts x^i g(x), i = 0..k-1.
inline MatrixGF build_generator_matrix(const DefiningSet& z, const gf::FieldTower& tower) {
    const auto n = static_cast<std::size_t>(z.ctx().n());
    if (z.size() >= n) throw std::invalid_argument("defining set covers all residues; the code is {0}");
    const auto g = generator_polynomial(z, tower);
    const std::size_t k = n - static_cast<std::size_t>(g.degree());
    MatrixGF out(tower.small(), k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) out(i, i + j) = g.coeffs()[j];
    }
    return out;
}

/// Euclidean parity-check matrix: shifts of the reversed check polynomial
/// h(x) = (x^n - 1)/g(x).
inline MatrixGF build_euclidean_parity_check_matrix(const DefiningSet& z, const gf::FieldTower& tower) {
    const auto n = static_cast<std::size_t>(z.ctx().n());
    const auto g = generator_polynomial(z, tower);
    const auto [h, rem] = gf::DensePoly::x_pow_minus_one(tower.small(), n).divmod(g);
    if (!rem.is_zero()) throw std::logic_error("generator polynomial does not divide x^n - 1");
    const std::size_t k = static_cast<std::size_t>(h.degree());
    const std::size_t r = n - k;
    MatrixGF out(tower.small(), r, n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j <= k; ++j) out(i, i + j) = h.coeffs()[k - j];
    }
    return out;
}

/// Parity-check matrix for the Hermitian inner product: its rows span the
/// Hermitian dual, so G H^dagger = 0. Obtained from the Euclidean one by the
/// entry-wise q-power.
inline MatrixGF build_parity_check_matrix(const DefiningSet& z, const gf::FieldTower& tower) {
    auto h = gf::entrywise_pow(build_euclidean_parity_check_matrix(z, tower), tower.q().q);
    if (gf::rank(h) != h.rows()) throw std::logic_error("parity-check matrix is rank deficient");
    return h;
}

/// rank(H H^dagger) over F_{q^2}.
inline std::int64_t rank_hh_dagger(const MatrixGF& h, std::uint64_t q) {
    if (h.rows() == 0) return 0;
    return static_cast<std::int64_t>(gf::rank(gf::multiply(h, gf::conjugate_transpose(h, q))));
}

/// Sum u_i^q v_i.
inline gf::Code hermitian_inner(const MatrixGF& a, std::size_t row_a, const MatrixGF& b, std::size_t row_b,
                                std::uint64_t q) {
    const auto& f = a.field();
    gf::Code acc = 0;
    for (std::size_t i = 0; i < a.cols(); ++i) acc = f.add(acc, f.mul(f.pow(a(row_a, i), q), b(row_b, i)));
    return acc;
}

/// Residues z with poly(lam^z) = 0, where poly has coefficients in F_{q^2}
/// (the given row) and lam is the tower's element of order n.
inline std::vector<Residue> zeros_of_row(const MatrixGF& m, std::size_t row, const gf::FieldTower& tower,
                                         std::int64_t n) {
    const auto& big = *tower.big();
    const auto lam = tower.root_of_unity(static_cast<std::uint64_t>(n));
    std::vector<gf::Code> coeffs(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) coeffs[j] = tower.embed(m(row, j));
    std::vector<Residue> out;
    gf::Code x = 1;
    for (std::int64_t z = 0; z < n; ++z) {
        gf::Code acc = 0;
        for (std::size_t j = coeffs.size(); j-- > 0;) acc = big.add(big.mul(acc, x), coeffs[j]);
        if (acc == 0) out.push_back(z);
        x = big.mul(x, lam.code());
    }
    return out;
}

/// Result of a minimum-distance search.
struct DistanceSearch {
    enum class Status { Exact, NoneUpToLimit, BudgetExceeded };
    Status status = Status::BudgetExceeded;
    std::int64_t distance = 0;   // valid for Exact
    std::uint64_t work = 0;      // codewords or supports examined
};

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Smallest w <= max_weight such that some w columns of the check matrix are
/// dependent, which is the minimum weight of the code it annihilates.
inline DistanceSearch support_search(const MatrixGF& check, std::int64_t max_weight, std::uint64_t budget) {
    DistanceSearch out;
    const std::size_t n = check.cols();
    for (std::int64_t w = 1; w <= max_weight && static_cast<std::size_t>(w) <= n; ++w) {
        if (static_cast<std::size_t>(w) > check.rows()) {
            out.status = DistanceSearch::Status::Exact;
            out.distance = w;
            return out;
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(w));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        do {
            if (++out.work > budget) {
                out.status = DistanceSearch::Status::BudgetExceeded;
                return out;
            }
            MatrixGF sub(check.field_ptr(), check.rows(), idx.size());
            for (std::size_t r = 0; r < check.rows(); ++r) {
                for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = check(r, idx[c]);
            }
            if (gf::rank(sub) < idx.size()) {
                out.status = DistanceSearch::Status::Exact;
                out.distance = w;
                return out;
            }
        } while (next_combination(idx, n));
    }
    out.status = DistanceSearch::Status::NoneUpToLimit;
    return out;
}

}  // namespace detail

/// Minimum weight by enumerating every message whose first nonzero symbol is
/// 1 (scalar multiples share a weight). Needs ((Q^k - 1)/(Q - 1)) <= budget.
inline DistanceSearch message_enumeration_distance(const MatrixGF& g, std::uint64_t budget) {
    DistanceSearch out;
    const auto& f = g.field();
    const std::uint64_t Q = f.order();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (k == 0) throw std::invalid_argument("code has no nonzero codewords");
    unsigned __int128 total = 0;
    unsigned __int128 pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total += pw;
        pw *= Q;
        if (total > budget) {
            out.status = DistanceSearch::Status::BudgetExceeded;
            return out;
        }
    }
    std::int64_t best = static_cast<std::int64_t>(n) + 1;
    std::vector<gf::Code> msg(k, 0);
    std::vector<gf::Code> word(n);
    for (std::size_t lead = 0; lead < k; ++lead) {
        // msg[lead] = 1, msg[<lead] = 0, msg[>lead] free.
        std::fill(msg.begin(), msg.end(), 0);
        msg[lead] = 1;
        while (true) {
            ++out.work;
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t r = lead; r < k; ++r) {
                if (msg[r] == 0) continue;
                for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(msg[r], g(r, c)));
            }
            std::int64_t wt = 0;
            for (auto v : word) wt += v != 0;
            if (wt > 0 && wt < best) best = wt;
            std::size_t pos = k;
            while (pos-- > lead + 1) {
                if (++msg[pos] < Q) break;
                msg[pos] = 0;
            }
            if (pos == lead) break;
        }
    }
    out.status = DistanceSearch::Status::Exact;
    out.distance = best;
    return out;
}

/// Exact minimum distance of the code generated by the rows of g. Uses
/// message enumeration when it fits in the budget, otherwise searches
/// supports of the dual's columns in order of increasing weight.
inline DistanceSearch exhaustive_min_distance(const MatrixGF& g, std::uint64_t budget) {
    if (gf::rank(g) == 0) throw std::invalid_argument("code has no nonzero codewords");
    auto by_message = message_enumeration_distance(g, budget);
    if (by_message.status == DistanceSearch::Status::Exact) return by_message;
    return detail::support_search(gf::null_space(g), static_cast<std::int64_t>(g.cols()), budget);
}

/// Looks only for codewords of weight <= max_weight. NoneUpToLimit means
/// the search finished and every nonzero codeword is heavier.
inline DistanceSearch bounded_min_distance(const MatrixGF& g, std::int64_t max_weight, std::uint64_t budget) {
    return detail::support_search(gf::null_space(g), max_weight, budget);
}

}  // namespace eaqmds

namespace eaqmds {

/// Both routes to the ebit count for one defining set, plus the structural
/// checks on the matrices behind the rank route.
struct OracleCheck {
    std::int64_t ebits = 0;
    std::int64_t rank = 0;
    bool hermitian_orthogonal = true;  // G H^dagger = 0
    bool ranks_complementary = true;   // rank G + rank H = n

    bool ok() const { return ebits == rank && hermitian_orthogonal && ranks_complementary; }
};

inline OracleCheck check_rank_oracle(const DefiningSet& z, const gf::FieldTower& tower) {
    OracleCheck out;
    const std::uint64_t q = tower.q().q;
    out.ebits = ebits(z);
    const auto h = build_parity_check_matrix(z, tower);
    out.rank = rank_hh_dagger(h, q);
    const auto n = static_cast<std::size_t>(z.ctx().n());
    if (z.size() < n) {
        const auto g = build_generator_matrix(z, tower);
        out.hermitian_orthogonal = h.rows() == 0 || gf::multiply(g, gf::conjugate_transpose(h, q)).is_zero();
        out.ranks_complementary = gf::rank(g) + gf::rank(h) == n;
    } else {
        out.ranks_complementary = gf::rank(h) == n;
    }
    return out;
}

}  // namespace eaqmds
