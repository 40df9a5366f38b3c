#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "codes.hpp"
#include "cosets.hpp"

namespace eaqmds {

/// Z = Z1 ⊔ Z2 with Z2 = Z ∩ (-qZ).
struct Decomposition {
    DefiningSet z;
    DefiningSet z1;
    DefiningSet z2;
};

/// Splits Z and checks the decomposition invariants; a violation throws
/// std::logic_error since it can only come from a non-closed input or a bug.
inline Decomposition decompose(const DefiningSet& z) {
    const DefiningSet image = neg_q_map(z);
    Decomposition d{z, DefiningSet(z.ctx()), set_intersect(z, image)};
    d.z1 = set_difference(z, d.z2);
    if (!(set_union(d.z1, d.z2) == z) || !set_intersect(d.z1, d.z2).empty()) {
        throw std::logic_error("decomposition does not partition Z");
    }
    if (!(neg_q_map(d.z2) == d.z2)) throw std::logic_error("Z2 is not -q invariant");
    if (!set_intersect(d.z1, neg_q_map(d.z1)).empty()) throw std::logic_error("Z1 meets -qZ1");
    return d;
}

/// Number of pre-shared entangled pairs, c = |Z2|.
inline std::int64_t ebits(const DefiningSet& z) {
    return static_cast<std::int64_t>(set_intersect(z, neg_q_map(z)).size());
}

/// [[n, k, d; c]] together with the Singleton bookkeeping.
struct EaqeccParams {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t d = 0;
    std::int64_t c = 0;
    bool singleton_equality = false;
    bool distance_precondition_ok = false;  // 2d <= n + 2
    bool in_theorem_range = false;
    bool d_is_exact = false;                // classical code is MDS, so d_bch is the true distance

    bool valid() const { return k >= 0; }

    friend bool operator==(const EaqeccParams&, const EaqeccParams&) = default;
};

/// Fills in the two Singleton flags from n, k, d, c.
inline EaqeccParams with_flags(EaqeccParams p) {
    p.singleton_equality = p.n + p.c - p.k == 2 * (p.d - 1);
    p.distance_precondition_ok = 2 * p.d <= p.n + 2;
    return p;
}

/// Parameters of the EAQECC from the cyclic code with defining set Z:
/// k = 2(n - |Z|) - n + c, d = BCH bound, c = ebits(Z).
inline EaqeccParams eaqecc_params(const DefiningSet& z) {
    const ClassicalParams cls = mds_certificate(z);
    EaqeccParams p;
    p.n = cls.n;
    p.c = ebits(z);
    p.k = 2 * cls.k - cls.n + p.c;
    p.d = cls.d_bch;
    p.d_is_exact = cls.is_mds;
    return with_flags(p);
}

enum class EaqmdsStatus { Eaqmds, EqualityWithoutPrecondition, NotEaqmds };

inline EaqmdsStatus eaqmds_status(const EaqeccParams& p) {
    if (!p.singleton_equality) return EaqmdsStatus::NotEaqmds;
    return p.distance_precondition_ok ? EaqmdsStatus::Eaqmds : EaqmdsStatus::EqualityWithoutPrecondition;
}

inline bool eaqmds_check(const EaqeccParams& p) { return eaqmds_status(p) == EaqmdsStatus::Eaqmds; }

inline std::string to_string(EaqmdsStatus s) {
    switch (s) {
        case EaqmdsStatus::Eaqmds: return "eaqmds";
        case EaqmdsStatus::EqualityWithoutPrecondition: return "equality-without-precondition";
        case EaqmdsStatus::NotEaqmds: return "not-eaqmds";
    }
    return "unknown";
}

inline std::string format_params(const EaqeccParams& p) {
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + ";" +
           std::to_string(p.c) + "]]";
}

}  // namespace eaqmds
