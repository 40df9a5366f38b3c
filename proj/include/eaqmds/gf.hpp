#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace eaqmds::gf {

/// Packed element representation: the coefficient vector (constant term
/// first) read as a base-p integer. Code order is the canonical element
/// order, so "smallest" always means smallest code.
using Code = std::uint64_t;

namespace detail {

using Poly = std::vector<std::uint64_t>;  // over F_p, constant term first

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = nt::powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = nt::mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t j = 0; j <= dm; ++j) {
            a[shift + j] = (a[shift + j] + p - nt::mulmod(c, m[j], p)) % p;
        }
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + nt::mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

inline Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1U) result = poly_mod(poly_mul(result, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        exp >>= 1U;
    }
    return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or irreducibility test for a monic polynomial over F_p.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    Poly h{0, 1};
    for (std::size_t i = 1; i <= deg / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;  // x^{p^i} = x mod f
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

}  // namespace detail

class Element;

/// A finite field F_{p^degree} represented as F_p[x]/(modulus). Immutable
/// once built; share it through std::shared_ptr. Bounds: p < 2^32 and
/// p^degree < 2^63.
class Field {
public:
    static constexpr std::uint64_t kTableLimit = 1ULL << 16;

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    /// Monic, constant term first, size degree + 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    Code generator_code() const { return generator_; }

    Element zero() const;
    Element one() const;
    Element element(Code c) const;
    Element from_coeffs(std::span<const std::uint64_t> coeffs) const;
    Element generator() const;

    std::vector<std::uint64_t> coeffs(Code c) const {
        std::vector<std::uint64_t> out(degree_);
        for (unsigned i = 0; i < degree_; ++i) {
            out[i] = c % p_;
            c /= p_;
        }
        return out;
    }

    Code encode(std::span<const std::uint64_t> coeffs) const {
        if (coeffs.size() > degree_) throw std::invalid_argument("too many coefficients for field degree");
        Code c = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
            c = c * p_ + coeffs[i];
        }
        return c;
    }

    Code add(Code a, Code b) const {
        if (p_ == 2) return a ^ b;
        if (degree_ == 1) return (a + b) % p_;
        Code out = 0;
        for (unsigned i = 0; i < degree_; ++i) {
            out += ((a % p_ + b % p_) % p_) * pow_p_[i];
            a /= p_;
            b /= p_;
        }
        return out;
    }

    Code neg(Code a) const {
        if (p_ == 2) return a;
        if (degree_ == 1) return (p_ - a) % p_;
        Code out = 0;
        for (unsigned i = 0; i < degree_; ++i) {
            out += ((p_ - a % p_) % p_) * pow_p_[i];
            a /= p_;
        }
        return out;
    }

    Code sub(Code a, Code b) const { return add(a, neg(b)); }

    Code mul(Code a, Code b) const {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) {
            return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (order_ - 1)];
        }
        if (degree_ == 1) return nt::mulmod(a, b, p_);
        return mul_slow(a, b);
    }

    Code pow(Code a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (!log_.empty()) {
            const std::uint64_t k = nt::mulmod(log_[a], e % (order_ - 1), order_ - 1);
            return exp_[k];
        }
        Code result = 1;
        while (e > 0) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    Code inv(Code a) const {
        if (a == 0) throw std::domain_error("inversion of zero");
        if (!log_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
        return pow(a, order_ - 2);
    }

    /// Exact multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Code a) const {
        if (a == 0) throw std::domain_error("zero has no multiplicative order");
        std::uint64_t ord = order_ - 1;
        for (auto r : nt::prime_divisors(order_ - 1)) {
            while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
        }
        return ord;
    }

private:
    friend std::shared_ptr<const Field> build_field(std::uint64_t p, unsigned degree);

    Field(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modulus)
        : p_(p), degree_(degree), modulus_(std::move(modulus)) {
        order_ = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            pow_p_.push_back(order_);
            order_ *= p_;
        }
        generator_ = find_generator();
        if (order_ <= kTableLimit && order_ > 2) build_tables();
    }

    Code mul_slow(Code a, Code b) const {
        std::array<std::uint64_t, 64> da{};
        std::array<std::uint64_t, 64> db{};
        std::array<std::uint64_t, 128> prod{};
        for (unsigned i = 0; i < degree_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (unsigned i = 0; i < degree_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < degree_; ++j) {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            }
        }
        for (unsigned k = 2 * degree_ - 2; k >= degree_; --k) {
            const std::uint64_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (unsigned j = 0; j < degree_; ++j) {
                prod[k - degree_ + j] = (prod[k - degree_ + j] + (p_ - c) * modulus_[j]) % p_;
            }
        }
        Code out = 0;
        for (unsigned i = degree_; i-- > 0;) out = out * p_ + prod[i];
        return out;
    }

    Code find_generator() const {
        if (order_ == 2) return 1;
        const auto primes = nt::prime_divisors(order_ - 1);
        for (Code g = 1; g < order_; ++g) {
            bool ok = true;
            for (auto r : primes) {
                if (pow(g, (order_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
        throw std::logic_error("no generator found; modulus is not irreducible");
    }

    void build_tables() {
        exp_.assign(order_ - 1, 0);
        log_.assign(order_, 0);
        Code x = 1;
        for (std::uint64_t i = 0; i < order_ - 1; ++i) {
            exp_[i] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(i);
            x = degree_ == 1 ? nt::mulmod(x, generator_, p_) : mul_slow(x, generator_);
        }
    }

    std::uint64_t p_;
    unsigned degree_;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t order_ = 0;
    std::vector<std::uint64_t> pow_p_;
    Code generator_ = 1;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// A field element bound to its field. The field must outlive the element.
class Element {
public:
    Element(const Field& field, Code code) : field_(&field), code_(code) {
        if (code >= field.order()) throw std::invalid_argument("element code out of range");
    }

    const Field& field() const { return *field_; }
    Code code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    std::vector<std::uint64_t> coeffs() const { return field_->coeffs(code_); }

    Element pow(std::uint64_t e) const { return {*field_, field_->pow(code_, e)}; }
    Element inverse() const { return {*field_, field_->inv(code_)}; }

    friend Element operator+(const Element& a, const Element& b) {
        check_same(a, b);
        return {*a.field_, a.field_->add(a.code_, b.code_)};
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_same(a, b);
        return {*a.field_, a.field_->sub(a.code_, b.code_)};
    }
    friend Element operator-(const Element& a) { return {*a.field_, a.field_->neg(a.code_)}; }
    friend Element operator*(const Element& a, const Element& b) {
        check_same(a, b);
        return {*a.field_, a.field_->mul(a.code_, b.code_)};
    }
    friend Element operator/(const Element& a, const Element& b) {
        check_same(a, b);
        return {*a.field_, a.field_->mul(a.code_, a.field_->inv(b.code_))};
    }
    friend bool operator==(const Element& a, const Element& b) {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }

private:
    static void check_same(const Element& a, const Element& b) {
        if (a.field_ != b.field_) throw std::invalid_argument("operands belong to different fields");
    }

    const Field* field_;
    Code code_;
};

inline Element Field::zero() const { return {*this, 0}; }
inline Element Field::one() const { return {*this, 1}; }
inline Element Field::element(Code c) const { return {*this, c}; }
inline Element Field::from_coeffs(std::span<const std::uint64_t> coeffs) const { return {*this, encode(coeffs)}; }
inline Element Field::generator() const { return {*this, generator_}; }

/// Builds F_{p^degree} with the lexicographically smallest monic irreducible
/// modulus (lower coefficients compared as a base-p integer, constant term
/// least significant).
inline std::shared_ptr<const Field> build_field(std::uint64_t p, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("field degree must be positive");
    if (!nt::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 32)) throw std::invalid_argument("characteristic must be below 2^32");
    if (degree > 63) throw std::invalid_argument("field order exceeds 2^63");
    std::uint64_t lower_count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (lower_count > (1ULL << 63) / p) throw std::invalid_argument("field order exceeds 2^63");
        lower_count *= p;
    }
    for (std::uint64_t c = 0; c < lower_count; ++c) {
        detail::Poly f(degree + 1, 0);
        std::uint64_t rest = c;
        for (unsigned i = 0; i < degree; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        f[degree] = 1;
        if (detail::is_irreducible(f, p)) {
            return std::shared_ptr<const Field>(new Field(p, degree, std::move(f)));
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

/// a^q for an element of a field of order q^2.
inline Element conjugate(const Element& a, std::uint64_t q) {
    if (q == 0 || a.field().order() / q != q || a.field().order() % q != 0) {
        throw std::invalid_argument("conjugate: field order is not q^2");
    }
    return a.pow(q);
}

/// g^((|F|-1)/n) for the smallest generator g; the order is re-verified.
inline Element find_element_of_order(const Field& f, std::uint64_t n) {
    const std::uint64_t group = f.order() - 1;
    if (n == 0 || group % n != 0) {
        throw std::invalid_argument("n = " + std::to_string(n) + " does not divide the multiplicative group order");
    }
    Element lam = f.generator().pow(group / n);
    if (f.multiplicative_order(lam.code()) != n) throw std::logic_error("element order verification failed");
    return lam;
}

}  // namespace eaqmds::gf
