#include <gtest/gtest.h>

#include <random>

#include "eaqmds/eaqecc.hpp"
#include "eaqmds/families.hpp"
#include "eaqmds/oracle.hpp"
#include "eaqmds/verify.hpp"

using namespace eaqmds;
using Status = DistanceSearch::Status;

namespace {

const gf::FieldTower& tower(std::uint64_t q) {
    static std::map<std::uint64_t, std::unique_ptr<gf::FieldTower>> cache;
    auto& slot = cache[q];
    if (!slot) slot = std::make_unique<gf::FieldTower>(PrimePower::from_value(q));
    return *slot;
}

CycContext family_ctx(std::uint64_t q) { return CycContext::family(PrimePower::from_value(q)); }

// Every subset of the cosets of ctx.
std::vector<DefiningSet> all_defining_sets(const CycContext& ctx) {
    const auto cosets = all_cosets(ctx);
    std::vector<DefiningSet> out;
    for (std::uint32_t mask = 0; mask < (1U << cosets.size()); ++mask) {
        std::vector<Residue> members;
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (mask >> i & 1U) members.insert(members.end(), cosets[i].elements.begin(), cosets[i].elements.end());
        out.push_back(DefiningSet::from_members(ctx, members));
    }
    return out;
}

}  // namespace

TEST(Matrices, ToyShapesAndOrthogonality) {
    const auto ctx = family_ctx(7);
    const auto& t = tower(7);
    const auto z = coset_range(ctx, 0, 1);
    const auto g = build_generator_matrix(z, t);
    const auto he = build_euclidean_parity_check_matrix(z, t);
    const auto h = build_parity_check_matrix(z, t);
    EXPECT_EQ(g.rows(), 7u);
    EXPECT_EQ(h.rows(), 3u);
    EXPECT_TRUE(gf::multiply(g, gf::transpose(he)).is_zero());
    EXPECT_TRUE(gf::multiply(g, gf::conjugate_transpose(h, 7)).is_zero());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < h.rows(); ++j) EXPECT_EQ(hermitian_inner(h, j, g, i, 7), 0u);
    // Rows of G vanish exactly on Z.
    EXPECT_EQ(zeros_of_row(g, 0, t, 10), z.members());
    EXPECT_THROW(build_generator_matrix(coset_range(ctx, 0, 5), t), std::invalid_argument);
}

TEST(Matrices, HermitianCheckRowsVanishOnDualDefiningSet) {
    // The Hermitian dual has defining set Z_n minus -qZ.
    for (std::uint64_t q : {7ULL, 8ULL}) {
        const auto ctx = family_ctx(q);
        const auto& t = tower(q);
        std::mt19937_64 rng(q);
        for (int it = 0; it < 10; ++it) {
            const auto z = random_defining_set(ctx, rng);
            if (z.size() == static_cast<std::size_t>(ctx.n()) || z.empty()) continue;
            const auto h = build_parity_check_matrix(z, t);
            std::vector<Residue> all(static_cast<std::size_t>(ctx.n()));
            for (Residue r = 0; r < ctx.n(); ++r) all[static_cast<std::size_t>(r)] = r;
            const auto dual = set_difference(DefiningSet::from_members(ctx, all), neg_q_map(z));
            EXPECT_EQ(zeros_of_row(h, 0, t, ctx.n()), dual.members());
        }
    }
}

TEST(RankOracle, ToyValue) {
    const auto ctx = family_ctx(7);
    const auto z = coset_range(ctx, 0, 1);
    const auto h = build_parity_check_matrix(z, tower(7));
    EXPECT_EQ(rank_hh_dagger(h, 7), 1);
    EXPECT_EQ(ebits(z), 1);
}

TEST(RankOracle, EveryDefiningSetQ7) {
    const auto ctx = family_ctx(7);
    for (const auto& z : all_defining_sets(ctx)) {
        const auto oc = check_rank_oracle(z, tower(7));
        EXPECT_TRUE(oc.ok()) << "rank " << oc.rank << " ebits " << oc.ebits;
    }
}

TEST(RankOracle, GenericLengths) {
    // q = 2, n = 5 (cosets {0}, {1,4}, {2,3}) and q = 3, n = 8 (q^2 = 1 mod 8).
    for (auto [q, n] : {std::pair{2ULL, 5LL}, std::pair{3ULL, 8LL}}) {
        const CycContext ctx(PrimePower::from_value(q), n);
        for (const auto& z : all_defining_sets(ctx)) {
            const auto oc = check_rank_oracle(z, tower(q));
            EXPECT_TRUE(oc.ok()) << "q=" << q << " |Z|=" << z.size();
        }
    }
}

TEST(RankOracle, FamilyCodesQ23) {
    const auto spec = *classify(23).spec;
    const auto z = build_defining_set(spec, 2);
    const auto oc = check_rank_oracle(z, tower(23));
    EXPECT_TRUE(oc.ok());
    EXPECT_EQ(oc.rank, 21);
}

TEST(RankOracle, SuiteSmall) {
    const auto r = run_rank_oracle_suite({23, 10, 99, false});
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.checks, 1u + 20u);
}

TEST(Distance, ToyExhaustive) {
    const auto ctx = family_ctx(7);
    const auto& t = tower(7);
    const auto z0 = DefiningSet::closure(ctx, std::vector<Residue>{0});
    const auto d0 = exhaustive_min_distance(build_generator_matrix(z0, t), 1'000'000);
    ASSERT_EQ(d0.status, Status::Exact);
    EXPECT_EQ(d0.distance, 2);
    EXPECT_EQ(d0.distance, bch_bound(z0));

    const auto z01 = coset_range(ctx, 0, 1);
    const auto g = build_generator_matrix(z01, t);
    const auto bounded = bounded_min_distance(g, 3, 1'000'000);
    EXPECT_EQ(bounded.status, Status::NoneUpToLimit);
    const auto exact = exhaustive_min_distance(g, 1'000'000);
    ASSERT_EQ(exact.status, Status::Exact);
    EXPECT_EQ(exact.distance, 4);
    EXPECT_EQ(bounded_min_distance(g, 3, 5).status, Status::BudgetExceeded);
}

TEST(Distance, MessageAndSupportSearchAgree) {
    for (auto [q, n] : {std::pair{2ULL, 5LL}, std::pair{3ULL, 8LL}}) {
        const CycContext ctx(PrimePower::from_value(q), n);
        for (const auto& z : all_defining_sets(ctx)) {
            // Skip empty Z and very large k to keep message enumeration short.
            if (z.size() == static_cast<std::size_t>(n) || static_cast<std::int64_t>(z.size()) < n - 6) continue;
            const auto g = build_generator_matrix(z, tower(q));
            const auto by_msg = message_enumeration_distance(g, 10'000'000);
            const auto by_support = detail::support_search(gf::null_space(g), n, 10'000'000);
            ASSERT_EQ(by_msg.status, Status::Exact);
            ASSERT_EQ(by_support.status, Status::Exact);
            EXPECT_EQ(by_msg.distance, by_support.distance) << "q=" << q << " |Z|=" << z.size();
            EXPECT_GE(by_msg.distance, bch_bound(z));
        }
    }
}

TEST(Distance, MessageEnumerationRespectsBudget) {
    const auto ctx = family_ctx(7);
    const auto g = build_generator_matrix(DefiningSet::closure(ctx, std::vector<Residue>{0}), tower(7));
    EXPECT_EQ(message_enumeration_distance(g, 1000).status, Status::BudgetExceeded);
}
