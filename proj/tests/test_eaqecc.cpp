#include <gtest/gtest.h>

#include <random>

#include "eaqmds/eaqecc.hpp"

using namespace eaqmds;

namespace {

CycContext family_ctx(std::uint64_t q) { return CycContext::family(PrimePower::from_value(q)); }

}  // namespace

TEST(Decompose, ToyExamples) {
    const auto ctx = family_ctx(7);
    const auto d = decompose(coset_range(ctx, 0, 1));  // {0,1,9}; -7{0,1,9} = {0,3,7}
    EXPECT_EQ(d.z2.members(), (std::vector<Residue>{0}));
    EXPECT_EQ(d.z1.members(), (std::vector<Residue>{1, 9}));
    EXPECT_EQ(ebits(coset_range(ctx, 0, 1)), 1);
    EXPECT_EQ(ebits(DefiningSet(ctx)), 0);
    EXPECT_EQ(ebits(coset_range(ctx, 0, 5)), 10);
}

TEST(Decompose, RandomPartition) {
    std::mt19937_64 rng(23);
    for (std::uint64_t q : {7ULL, 23ULL, 32ULL}) {
        const auto ctx = family_ctx(q);
        const auto cosets = all_cosets(ctx);
        for (int it = 0; it < 500; ++it) {
            std::vector<Residue> members;
            for (const auto& c : cosets)
                if (rng() & 1U) members.insert(members.end(), c.elements.begin(), c.elements.end());
            const auto z = DefiningSet::from_members(ctx, members);
            const auto d = decompose(z);
            EXPECT_EQ(set_union(d.z1, d.z2), z);
            EXPECT_TRUE(set_intersect(d.z1, d.z2).empty());
            EXPECT_EQ(neg_q_map(d.z2), d.z2);
            EXPECT_EQ(d.z2, set_intersect(z, neg_q_map(z)));
            const auto p = eaqecc_params(z);
            EXPECT_EQ(p.c, static_cast<std::int64_t>(d.z2.size()));
            EXPECT_EQ(p.k, 2 * (ctx.n() - static_cast<std::int64_t>(z.size())) - ctx.n() + p.c);
            EXPECT_GE(p.c, 0);
            EXPECT_LE(p.c, static_cast<std::int64_t>(z.size()));
        }
    }
}

TEST(EaqeccParams, FamilyPointQ23M2) {
    const auto ctx = family_ctx(23);
    const auto z = coset_range(ctx, 0, 23);
    const auto p = eaqecc_params(z);
    EXPECT_EQ(p.n, 106);
    EXPECT_EQ(p.k, 33);
    EXPECT_EQ(p.d, 48);
    EXPECT_EQ(p.c, 21);
    EXPECT_TRUE(p.singleton_equality);
    EXPECT_TRUE(p.distance_precondition_ok);
    EXPECT_EQ(format_params(p), "[[106,33,48;21]]");
    EXPECT_EQ(eaqmds_status(p), EaqmdsStatus::Eaqmds);
    EXPECT_TRUE(eaqmds_check(p));
}

TEST(EaqeccParams, StatusValues) {
    // q = 43, Z = C_0..C_{3q}: d = 260 > (370+2)/2.
    const auto big = eaqecc_params(coset_range(family_ctx(43), 0, 129));
    EXPECT_TRUE(big.singleton_equality);
    EXPECT_FALSE(big.distance_precondition_ok);
    EXPECT_EQ(eaqmds_status(big), EaqmdsStatus::EqualityWithoutPrecondition);
    EXPECT_FALSE(eaqmds_check(big));

    // A gap in Z makes the BCH bound too small for equality.
    const auto ctx = family_ctx(23);
    const auto gap = eaqecc_params(set_union(coset_range(ctx, 0, 1), coset_range(ctx, 3, 4)));
    EXPECT_FALSE(gap.singleton_equality);
    EXPECT_EQ(eaqmds_status(gap), EaqmdsStatus::NotEaqmds);
    EXPECT_EQ(to_string(EaqmdsStatus::EqualityWithoutPrecondition), "equality-without-precondition");
}
