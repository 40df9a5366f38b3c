#include <gtest/gtest.h>

#include <random>

#include "eaqmds/codes.hpp"
#include "eaqmds/poly.hpp"
#include "eaqmds/tower.hpp"

using namespace eaqmds;

namespace {

CycContext ctx7() { return CycContext::family(PrimePower::from_value(7)); }

// Longest run of consecutive residues (cyclically) by checking every start.
std::int64_t brute_run(const DefiningSet& z) {
    const auto n = z.ctx().n();
    std::int64_t best = 0;
    for (std::int64_t s = 0; s < n; ++s) {
        std::int64_t len = 0;
        while (len < n && z.contains((s + len) % n)) ++len;
        best = std::max(best, len);
    }
    return best;
}

}  // namespace

TEST(Classical, DimensionAndBch) {
    const auto ctx = ctx7();
    const auto zero = DefiningSet::closure(ctx, std::vector<Residue>{0});
    EXPECT_EQ(dimension(zero), 9);
    EXPECT_EQ(bch_bound(zero), 2);
    const auto c01 = coset_range(ctx, 0, 1);
    EXPECT_EQ(longest_circular_run(c01), 3);  // 9, 0, 1
    EXPECT_EQ(bch_bound(c01), 4);
    EXPECT_EQ(bch_bound(DefiningSet(ctx)), 1);
    EXPECT_EQ(bch_bound(coset_range(ctx, 0, 5)), 11);
}

TEST(Classical, RunMatchesBruteForce) {
    std::mt19937_64 rng(17);
    for (std::uint64_t q : {7ULL, 23ULL, 32ULL}) {
        const auto ctx = CycContext::family(PrimePower::from_value(q));
        for (int it = 0; it < 200; ++it) {
            std::vector<Residue> pick;
            const int count = 1 + static_cast<int>(rng() % 8);
            const Residue start = static_cast<Residue>(rng() % ctx.n());
            for (int j = 0; j < count; ++j) pick.push_back((start + (rng() % 2 ? j : 3 * j)) % ctx.n());
            const auto z = DefiningSet::closure(ctx, pick);
            EXPECT_EQ(longest_circular_run(z), brute_run(z));
        }
    }
}

TEST(Classical, MdsCertificate) {
    const auto ctx = CycContext::family(PrimePower::from_value(23));
    const auto z = coset_range(ctx, 0, 23);  // C_0..C_q: one run of length 2q+1
    const auto cert = mds_certificate(z);
    EXPECT_EQ(cert.n, 106);
    EXPECT_EQ(cert.k, 106 - 47);
    EXPECT_EQ(cert.d_bch, 48);
    EXPECT_TRUE(cert.is_mds);
    const auto gap = set_union(coset_range(ctx, 0, 1), coset_range(ctx, 3, 3));
    EXPECT_FALSE(mds_certificate(gap).is_mds);
}

TEST(Classical, HermitianDualContaining) {
    const auto ctx = ctx7();
    EXPECT_FALSE(hermitian_dual_containing(coset_range(ctx, 0, 0)));  // -q*0 = 0
    EXPECT_TRUE(hermitian_dual_containing(coset_range(ctx, 1, 1)));   // -7*1 = 3
}

TEST(Classical, GeneratorPolynomialDividesXnMinusOne) {
    for (std::uint64_t qv : {7ULL, 8ULL}) {
        const auto q = PrimePower::from_value(qv);
        const auto ctx = CycContext::family(q);
        gf::FieldTower tower(q);
        std::mt19937_64 rng(qv);
        for (int it = 0; it < 20; ++it) {
            std::vector<Residue> members;
            for (const auto& c : all_cosets(ctx))
                if (rng() & 1U) members.insert(members.end(), c.elements.begin(), c.elements.end());
            const auto z = DefiningSet::from_members(ctx, members);
            const auto g = generator_polynomial(z, tower);
            EXPECT_EQ(g.degree(), static_cast<long>(z.size()));
            EXPECT_TRUE(g.is_monic());
            auto [h, rem] = gf::DensePoly::x_pow_minus_one(tower.small(), static_cast<std::size_t>(ctx.n())).divmod(g);
            EXPECT_TRUE(rem.is_zero());
            // Roots of g are exactly lam^z for z in Z.
            const auto lam = tower.root_of_unity(static_cast<std::uint64_t>(ctx.n()));
            for (Residue r = 0; r < ctx.n(); ++r) {
                gf::Code acc = 0, pw = 1;
                const auto x = lam.pow(static_cast<std::uint64_t>(r)).code();
                for (long i = 0; i <= g.degree(); ++i) {
                    acc = tower.big()->add(acc, tower.big()->mul(tower.embed(g.coeff(static_cast<std::size_t>(i))), pw));
                    pw = tower.big()->mul(pw, x);
                }
                EXPECT_EQ(acc == 0, z.contains(r)) << "q=" << qv << " r=" << r;
            }
        }
    }
    const auto other = CycContext::family(PrimePower::from_value(23));
    gf::FieldTower t7(PrimePower::from_value(7));
    EXPECT_THROW(generator_polynomial(coset_range(other, 0, 0), t7), std::invalid_argument);
}
