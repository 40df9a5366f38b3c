#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gf.hpp"
#include "numtheory.hpp"
#include "poly.hpp"

namespace eaqmds::gf {

/// The pair F_{q^2} ⊂ F_{q^4} used for cyclic codes of length n | q^4 - 1.
/// Both fields are built independently over F_p (degrees 2e and 4e); the
/// embedding sends the defining root of the small modulus to its smallest
/// root inside the subfield of the large field.
class FieldTower {
public:
    explicit FieldTower(PrimePower q) : q_(q) {
        small_ = build_field(q.p, 2 * q.e);
        big_ = build_field(q.p, 4 * q.e);
        q2_ = q.q * q.q;

        const Field& big = *big_;
        const Code beta = big.pow(big.generator_code(), q2_ + 1);  // generates the subfield's group
        Code theta = 0;
        bool found = false;
        Code x = 1;
        for (std::uint64_t i = 0; i + 1 < q2_; ++i) {
            if (eval_small_modulus(x) == 0 && (!found || x < theta)) {
                theta = x;
                found = true;
            }
            x = big.mul(x, beta);
        }
        if (!found) throw std::logic_error("no root of the F_{q^2} modulus inside F_{q^4}");

        std::vector<Code> theta_pows(small_->degree());
        Code t = 1;
        for (auto& tp : theta_pows) {
            tp = t;
            t = big.mul(t, theta);
        }
        embed_.resize(q2_);
        for (Code c = 0; c < q2_; ++c) {
            const auto digits = small_->coeffs(c);
            Code acc = 0;
            for (std::size_t i = 0; i < digits.size(); ++i) {
                acc = big.add(acc, big.mul(scalar(digits[i]), theta_pows[i]));
            }
            embed_[c] = acc;
            restrict_.emplace(acc, c);
        }
        if (restrict_.size() != q2_) throw std::logic_error("subfield embedding is not injective");
    }

    const PrimePower& q() const { return q_; }
    const std::shared_ptr<const Field>& small() const { return small_; }
    const std::shared_ptr<const Field>& big() const { return big_; }

    Code embed(Code small_code) const { return embed_.at(small_code); }

    bool in_subfield(Code big_code) const { return big_->pow(big_code, q2_) == big_code; }

    /// Inverse of embed; throws when the element is not fixed by x -> x^{q^2}.
    Code restrict(Code big_code) const {
        auto it = restrict_.find(big_code);
        if (it == restrict_.end() || !in_subfield(big_code)) {
            throw std::logic_error("element of F_{q^4} is not fixed by the q^2-power map");
        }
        return it->second;
    }

    /// Element of exact order n in F_{q^4}.
    Element root_of_unity(std::uint64_t n) const {
        if ((big_->order() - 1) % n != 0) {
            throw std::invalid_argument("n = " + std::to_string(n) + " does not divide q^4 - 1");
        }
        return find_element_of_order(*big_, n);
    }

private:
    // Prime-field scalars are the codes 0..p-1 in any extension.
    static Code scalar(std::uint64_t v) { return static_cast<Code>(v); }

    Code eval_small_modulus(Code x) const {
        const Field& big = *big_;
        const auto& m = small_->modulus();
        Code acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, x), scalar(m[i]));
        return acc;
    }

    PrimePower q_;
    std::uint64_t q2_ = 0;
    std::shared_ptr<const Field> small_;
    std::shared_ptr<const Field> big_;
    std::vector<Code> embed_;
    std::unordered_map<Code, Code> restrict_;
};

/// prod_{j in exponents} (x - lam^j), computed in F_{q^4} and re-expressed over
/// F_{q^2}. Throws std::logic_error if any coefficient falls outside the
/// subfield, which means the exponent set is not a union of q^2-cosets.
inline DensePoly minimal_poly_over_subfield(const FieldTower& tower, const Element& lam,
                                            std::span<const std::int64_t> exponents) {
    const Field& big = *tower.big();
    if (&lam.field() != &big) throw std::invalid_argument("root must live in the tower's F_{q^4}");
    DensePoly prod(tower.big(), {1});
    for (std::int64_t j : exponents) {
        prod = prod * DensePoly::linear(tower.big(), lam.pow(static_cast<std::uint64_t>(j)).code());
    }
    std::vector<Code> down;
    down.reserve(prod.coeffs().size());
    for (Code c : prod.coeffs()) down.push_back(tower.restrict(c));
    return DensePoly(tower.small(), std::move(down));
}

}  // namespace eaqmds::gf
