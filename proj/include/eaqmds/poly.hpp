#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace eaqmds::gf {

/// Dense univariate polynomial over one field, constant term first, with no
/// trailing zero coefficients (the zero polynomial has no coefficients).
class DensePoly {
public:
    explicit DensePoly(std::shared_ptr<const Field> field, std::vector<Code> coeffs = {})
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        for (Code c : coeffs_) {
            if (c >= field_->order()) throw std::invalid_argument("polynomial coefficient outside field");
        }
        trim();
    }

    static DensePoly monomial(std::shared_ptr<const Field> field, std::size_t degree, Code coeff = 1) {
        std::vector<Code> c(degree + 1, 0);
        c[degree] = coeff;
        return DensePoly(std::move(field), std::move(c));
    }

    /// x - root
    static DensePoly linear(std::shared_ptr<const Field> field, Code root) {
        const Code neg_root = field->neg(root);
        return DensePoly(std::move(field), {neg_root, 1});
    }

    /// x^n - 1
    static DensePoly x_pow_minus_one(std::shared_ptr<const Field> field, std::size_t n) {
        std::vector<Code> c(n + 1, 0);
        c[0] = field->neg(1);
        c[n] = field->add(c[n], 1);
        return DensePoly(std::move(field), std::move(c));
    }

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    const std::vector<Code>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    Element evaluate(const Element& x) const {
        if (&x.field() != field_.get()) throw std::invalid_argument("evaluation point in a different field");
        Code acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x.code()), coeffs_[i]);
        return field_->element(acc);
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        check_same(a, b);
        std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->add(a.coeff(i), b.coeff(i));
        return DensePoly(a.field_, std::move(out));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        check_same(a, b);
        std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_->sub(a.coeff(i), b.coeff(i));
        return DensePoly(a.field_, std::move(out));
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return DensePoly(a.field_);
        const Field& f = *a.field_;
        std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
            }
        }
        return DensePoly(a.field_, std::move(out));
    }

    /// Euclidean division; throws on division by zero.
    std::pair<DensePoly, DensePoly> divmod(const DensePoly& divisor) const {
        check_same(*this, divisor);
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        const Field& f = *field_;
        std::vector<Code> rem = coeffs_;
        const std::size_t dd = divisor.coeffs_.size() - 1;
        if (rem.size() <= dd) return {DensePoly(field_), *this};
        std::vector<Code> quot(rem.size() - dd, 0);
        const Code lead_inv = f.inv(divisor.leading());
        for (std::size_t k = rem.size(); k-- > dd;) {
            const Code c = f.mul(rem[k], lead_inv);
            if (c == 0) continue;
            quot[k - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) {
                rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(c, divisor.coeffs_[j]));
            }
        }
        return {DensePoly(field_, std::move(quot)), DensePoly(field_, std::move(rem))};
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        return a.field_.get() == b.field_.get() && a.coeffs_ == b.coeffs_;
    }

private:
    static void check_same(const DensePoly& a, const DensePoly& b) {
        if (a.field_.get() != b.field_.get()) throw std::invalid_argument("polynomials over different fields");
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::shared_ptr<const Field> field_;
    std::vector<Code> coeffs_;
};

}  // namespace eaqmds::gf
