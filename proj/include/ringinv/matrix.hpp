#pragma once

/// Dense exact matrices over a scalar field and the elimination toolkit used
/// by every inverse computation: reduced row echelon form, rank, kernel bases,
/// affine solving and inversion. Pivoting always selects the first nonzero
/// entry in column order, which keeps results deterministic; magnitude-based
/// pivoting is meaningless in exact arithmetic.

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ringinv {

template <class S>
concept Scalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.star() } -> std::convertible_to<S>;
    { a.zero_like() } -> std::convertible_to<S>;
    { a.one_like() } -> std::convertible_to<S>;
    { a.is_field() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

template <Scalar S>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const S& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n, const S& one) {
        Matrix m(n, n, one.zero_like());
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Matrix from_entries(std::size_t rows, std::size_t cols, std::vector<S> entries) {
        if (entries.size() != rows * cols) throw Error("entry count does not match shape");
        Matrix m(rows, cols, entries.front());
        m.e_ = std::move(entries);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    S& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const S& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<S>& entries() const { return e_; }

    S zero_scalar() const { return e_.front().zero_like(); }
    S one_scalar() const { return e_.front().one_like(); }

    Matrix zero_like() const { return Matrix(rows_, cols_, zero_scalar()); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_shape(o);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.e_) x = -x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
        Matrix r(rows_, o.cols_, zero_scalar());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& aik = at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        return r;
    }

    Matrix scaled(const S& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_scalar());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// Transpose, optionally conjugating entries (conjugate-transpose).
    Matrix starred(bool conjugate_entries) const {
        Matrix r = transpose();
        if (conjugate_entries)
            for (auto& x : r.e_) x = x.star();
        return r;
    }

    /// x^0 = I by convention; repeated squaring.
    Matrix pow(unsigned long long t) const {
        if (!square()) throw Error("power of a non-square matrix");
        Matrix acc = identity(rows_, one_scalar());
        Matrix base = *this;
        while (t > 0) {
            if (t & 1ULL) acc = acc * base;
            base = base * base;
            t >>= 1ULL;
        }
        return acc;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += at(i, j).to_string();
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void require_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<S> e_;
};

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

template <Scalar S>
struct RrefResult {
    Matrix<S> reduced;
    std::vector<std::size_t> pivots; // ascending pivot column indices
};

template <Scalar S>
RrefResult<S> rref(const Matrix<S>& m) {
    if (!m.entries().front().is_field())
        throw UnsupportedRingError("elimination requires a field scalar kind");
    Matrix<S> r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r.at(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
        S inv = *r.at(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) = inv * r.at(row, j);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            S f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

template <Scalar S>
std::size_t rank(const Matrix<S>& m) {
    return rref(m).pivots.size();
}

/// Kernel basis of m via the standard free-variable construction applied to
/// rref(m): one vector per free column, with that free coordinate set to one.
template <Scalar S>
std::vector<std::vector<S>> kernel_basis(const Matrix<S>& m) {
    auto [r, pivots] = rref(m);
    const S zero = m.zero_scalar();
    const S one = m.one_scalar();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(m.cols(), zero);
        v[f] = one;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            v[pivots[row]] = -r.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Scalar S>
struct AffineSolution {
    bool consistent = false;
    std::vector<S> particular;              // free variables set to zero
    std::vector<std::vector<S>> kernel;     // homogeneous solution basis
};

/// Full description of the solution set of m x = b.
template <Scalar S>
AffineSolution<S> solve_affine(const Matrix<S>& m, const std::vector<S>& b) {
    if (b.size() != m.rows()) throw Error("right-hand side length mismatch");
    Matrix<S> aug(m.rows(), m.cols() + 1, m.zero_scalar());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto [r, pivots] = rref(aug);
    AffineSolution<S> sol;
    if (!pivots.empty() && pivots.back() == m.cols()) return sol; // 0 = 1 row
    sol.consistent = true;
    sol.particular.assign(m.cols(), m.zero_scalar());
    for (std::size_t row = 0; row < pivots.size(); ++row)
        sol.particular[pivots[row]] = r.at(row, m.cols());
    sol.kernel = kernel_basis(m);
    return sol;
}

template <Scalar S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (!m.square()) throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n, m.zero_scalar());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.one_scalar();
    }
    auto [r, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n, m.zero_scalar());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

// ---------------------------------------------------------------------------
// Linear maps on matrix unknowns
// ---------------------------------------------------------------------------

/// Row-major flattening of an n x n matrix into a length-n^2 vector.
template <Scalar S>
std::vector<S> vec(const Matrix<S>& m) {
    return m.entries();
}

template <Scalar S>
Matrix<S> unvec(std::size_t n, const std::vector<S>& v) {
    return Matrix<S>::from_entries(n, n, v);
}

/// Materialize a linear map on n x n unknowns as an n^2 x n^2 matrix by
/// evaluating the map on each basis matrix E_ij.
template <Scalar S, class F>
Matrix<S> materialize_vec_map(std::size_t n, const S& prototype, F&& f) {
    const std::size_t nn = n * n;
    Matrix<S> big(nn, nn, prototype.zero_like());
    Matrix<S> basis(n, n, prototype.zero_like());
    for (std::size_t c = 0; c < nn; ++c) {
        basis.at(c / n, c % n) = prototype.one_like();
        Matrix<S> img = f(basis);
        const auto iv = vec(img);
        for (std::size_t r = 0; r < nn; ++r) big.at(r, c) = iv[r];
        basis.at(c / n, c % n) = prototype.zero_like();
    }
    return big;
}

/// Stack two coefficient matrices vertically (shared unknowns).
template <Scalar S>
Matrix<S> stack_rows(const Matrix<S>& top, const Matrix<S>& bottom) {
    if (top.cols() != bottom.cols()) throw Error("stack width mismatch");
    Matrix<S> r(top.rows() + bottom.rows(), top.cols(), top.zero_scalar());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j)
            r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
}

} // namespace ringinv
