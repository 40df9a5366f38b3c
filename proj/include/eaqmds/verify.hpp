#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "codes.hpp"
#include "cosets.hpp"
#include "eaqecc.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "tower.hpp"

namespace eaqmds {

struct SuiteResult {
    std::string level;
    std::size_t checks = 0;
    std::vector<std::string> failures;  // first entry is the smallest counterexample
    std::vector<std::string> info;

    bool passed() const { return failures.empty(); }
};

/// Family specs with q <= q_max over all four families, q ascending.
inline std::vector<FamilySpec> all_family_specs(std::uint64_t q_max) {
    std::vector<FamilySpec> out;
    for (std::uint64_t q = 2; q <= q_max; ++q) {
        if (auto cls = classify(q); cls.spec) out.push_back(*cls.spec);
    }
    return out;
}

namespace detail {

inline std::string point(const FamilySpec& spec, std::int64_t m) {
    return to_string(spec.id) + " q=" + std::to_string(spec.q.q) + " m=" + std::to_string(m);
}

struct IdentityTally {
    std::size_t holds = 0;
    std::size_t fails = 0;
};

template <typename Check>
IdentityTally tally_windows(const std::vector<IdentityWindow>& windows, Check check,
                            std::vector<std::string>& failures, const std::string& label) {
    IdentityTally t;
    for (const auto& w : windows) {
        for (std::int64_t a = w.first.lo; a <= w.first.hi; ++a) {
            for (std::int64_t b = w.second.lo; b <= w.second.hi; ++b) {
                if (check(a, b) == IdentityCheck::Holds) {
                    ++t.holds;
                } else {
                    ++t.fails;
                    failures.push_back(label + " (" + std::to_string(a) + "," + std::to_string(b) + ")");
                }
            }
        }
    }
    return t;
}

}  // namespace detail

/// Coset structure for n = (q^2+1)/5 and the coset-map identities over
/// their windows.
inline SuiteResult run_coset_suite(std::uint64_t q_max) {
    SuiteResult r{"coset", 0, {}, {}};
    std::size_t inverse_plain = 0;
    std::size_t inverse_shifted = 0;
    std::size_t shifted_fail = 0;
    for (const auto& spec : all_family_specs(q_max)) {
        const auto ctx = spec.ctx();
        const std::string where = to_string(spec.id) + " q=" + std::to_string(spec.q.q);
        const auto cosets = all_cosets(ctx);
        std::vector<int> hits(static_cast<std::size_t>(ctx.n()), 0);
        for (const auto& c : cosets) {
            for (Residue e : c.elements) ++hits[static_cast<std::size_t>(e)];
            const Residue other = (ctx.n() - c.rep) % ctx.n();
            const std::vector<Residue> expect =
                other == c.rep ? std::vector<Residue>{c.rep} : std::vector<Residue>{c.rep, other};
            ++r.checks;
            if (c.elements != expect) r.failures.push_back(where + ": C_" + std::to_string(c.rep) + " != {i, n-i}");
        }
        ++r.checks;
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
            r.failures.push_back(where + ": cosets do not partition Z_n");
        }

        auto fwd = detail::tally_windows(
            forward_identity_windows(spec), [&](auto s, auto i) { return coset_map_identity_check(spec, s, i); },
            r.failures, where + " -qC_{sq+i} = C_{iq-s}");
        auto inv = detail::tally_windows(
            inverse_identity_windows(spec, 0), [&](auto j, auto t) { return inverse_identity_check(spec, j, t, 0); },
            r.failures, where + " -qC_{tq-j} = C_{jq+t}");
        r.checks += fwd.holds + fwd.fails + inv.holds + inv.fails;
        inverse_plain += inv.holds;
        if (spec.id == FamilyId::Q10K3) {
            std::vector<std::string> ignored;
            auto shifted = detail::tally_windows(
                inverse_identity_windows(spec, 2),
                [&](auto j, auto t) { return inverse_identity_check(spec, j, t, 2); }, ignored, "");
            inverse_shifted += shifted.holds;
            shifted_fail += shifted.fails;
        }
    }
    r.info.push_back("inverse identity -qC_{tq-j} = C_{jq+t}: holds on " + std::to_string(inverse_plain) +
                     " pairs over all families");
    r.info.push_back("q=10k+3 second window started at (2q+4)/5+2 instead: holds on " +
                     std::to_string(inverse_shifted) + " pairs, fails on " + std::to_string(shifted_fail));
    return r;
}

/// Z1 ∩ -qZ1 = ∅, Z = Z1 ⊔ Z1', -qZ1' = Z1' for every grid point.
inline SuiteResult run_lemma_suite(std::uint64_t q_max) {
    SuiteResult r{"lemma", 0, {}, {}};
    std::size_t points = 0;
    for (const auto& spec : all_family_specs(q_max)) {
        for (std::int64_t m = 2; m <= spec.m_max; ++m) {
            ++points;
            const auto z = build_defining_set(spec, m);
            const auto z1 = build_z1(spec, m);
            const auto z1p = build_z1_prime(spec, m);
            const std::string at = detail::point(spec, m);
            r.checks += 4;
            if (!set_intersect(z1, neg_q_map(z1)).empty()) r.failures.push_back(at + ": Z1 meets -qZ1");
            if (!set_intersect(z1, z1p).empty()) r.failures.push_back(at + ": Z1 and Z1' overlap");
            if (!(set_union(z1, z1p) == z)) r.failures.push_back(at + ": Z1 ∪ Z1' != Z");
            if (!(neg_q_map(z1p) == z1p)) r.failures.push_back(at + ": -qZ1' != Z1'");
        }
    }
    r.info.push_back(std::to_string(points) + " (q, m) points");
    return r;
}

/// |Z2| = 20(m-1)^2+1, Singleton equality, MDS run, predicted == computed.
inline SuiteResult run_theorem_suite(std::uint64_t q_max) {
    SuiteResult r{"theorem", 0, {}, {}};
    std::size_t points = 0;
    for (const auto& spec : all_family_specs(q_max)) {
        for (std::int64_t m = 2; m <= spec.m_max; ++m) {
            ++points;
            ++r.checks;
            const auto fc = verify_family_code(spec, m);
            for (const auto& d : fc.discrepancies) r.failures.push_back(detail::point(spec, m) + ": " + d);
        }
    }
    r.info.push_back(std::to_string(points) + " (q, m) points checked");
    return r;
}

struct RankOracleOptions {
    std::uint64_t q_max = 32;
    std::size_t samples = 50;
    std::uint64_t seed = 20240501;
    bool allow_large = false;
};

inline constexpr std::uint64_t kOracleDefaultCap = 32;

/// A random union of cosets: each coset kept with probability 1/2.
/// Uses raw mt19937_64 output so the stream is identical across platforms.
inline DefiningSet random_defining_set(const CycContext& ctx, std::mt19937_64& rng) {
    std::vector<Residue> members;
    for (const auto& c : all_cosets(ctx)) {
        if (rng() & 1U) members.insert(members.end(), c.elements.begin(), c.elements.end());
    }
    return DefiningSet::from_members(ctx, std::move(members));
}

/// rank(HH^dagger) = |Z2| on family codes and random defining sets.
inline SuiteResult run_rank_oracle_suite(const RankOracleOptions& opt) {
    SuiteResult r{"rank-oracle", 0, {}, {}};
    const std::uint64_t cap = opt.allow_large ? opt.q_max : std::min(opt.q_max, kOracleDefaultCap);
    std::map<std::uint64_t, std::shared_ptr<gf::FieldTower>> towers;
    auto tower_for = [&](const PrimePower& q) -> const gf::FieldTower& {
        auto& slot = towers[q.q];
        if (!slot) slot = std::make_shared<gf::FieldTower>(q);
        return *slot;
    };
    auto record = [&](const std::string& at, const OracleCheck& oc) {
        ++r.checks;
        if (!oc.ok()) {
            r.failures.push_back(at + ": rank(HH^dagger) = " + std::to_string(oc.rank) + ", |Z2| = " +
                                 std::to_string(oc.ebits) + (oc.hermitian_orthogonal ? "" : ", G H^dagger != 0") +
                                 (oc.ranks_complementary ? "" : ", rank G + rank H != n"));
        }
    };

    std::size_t family_points = 0;
    for (const auto& spec : all_family_specs(cap)) {
        for (std::int64_t m = 2; m <= spec.m_max; ++m) {
            ++family_points;
            record(detail::point(spec, m), check_rank_oracle(build_defining_set(spec, m), tower_for(spec.q)));
        }
    }

    std::mt19937_64 rng(opt.seed);
    std::size_t random_sets = 0;
    for (std::uint64_t qv : {7ULL, 23ULL}) {
        if (qv > opt.q_max) continue;
        const auto q = PrimePower::from_value(qv);
        const auto ctx = CycContext::family(q);
        for (std::size_t i = 0; i < opt.samples; ++i) {
            ++random_sets;
            const auto z = random_defining_set(ctx, rng);
            record("random q=" + std::to_string(qv) + " sample " + std::to_string(i), check_rank_oracle(z, tower_for(q)));
        }
    }
    r.info.push_back(std::to_string(family_points) + " family codes with q <= " + std::to_string(cap) + ", " +
                     std::to_string(random_sets) + " random defining sets");
    if (cap < opt.q_max) {
        r.info.push_back("family codes above q = " + std::to_string(cap) + " skipped (pass --allow-large)");
    }
    return r;
}

}  // namespace eaqmds
