#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace eaqmds::gf {

/// Dense row-major matrix over a finite field.
class MatrixGF {
public:
    MatrixGF(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Code operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Code& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (Code v : data_) {
            if (v != 0) return false;
        }
        return true;
    }

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
        return a.field_.get() == b.field_.get() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::shared_ptr<const Field> field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> data_;
};

inline MatrixGF multiply(const MatrixGF& a, const MatrixGF& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("matrices over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not agree");
    const Field& f = a.field();
    MatrixGF out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Code x = a(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    }
    return out;
}

inline MatrixGF transpose(const MatrixGF& a) {
    MatrixGF out(a.field_ptr(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

/// Entry-wise x -> x^e.
inline MatrixGF entrywise_pow(const MatrixGF& a, std::uint64_t e) {
    MatrixGF out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().pow(a(i, j), e);
    }
    return out;
}

/// H^dagger: transpose with every entry raised to the q-th power.
inline MatrixGF conjugate_transpose(const MatrixGF& a, std::uint64_t q) {
    if (a.field().order() != q * q) throw std::invalid_argument("conjugate transpose needs a field of order q^2");
    return transpose(entrywise_pow(a, q));
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Pivot rule: first nonzero entry at or below the current row.
inline std::vector<std::size_t> row_reduce(MatrixGF& a) {
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
        }
        const Code inv = f.inv(a(row, col));
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Code factor = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(MatrixGF a) { return row_reduce(a).size(); }

/// Basis of {x : A x = 0}, one vector per row of the result.
inline MatrixGF null_space(const MatrixGF& a) {
    MatrixGF r = a;
    const auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    const Field& f = a.field();
    MatrixGF out(a.field_ptr(), a.cols() - pivots.size(), a.cols());
    std::size_t k = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        out(k, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out(k, pivots[i]) = f.neg(r(i, free));
        ++k;
    }
    return out;
}

}  // namespace eaqmds::gf
