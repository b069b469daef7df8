#pragma once

/// Integer linear algebra: diagonalization by unimodular row/column operations
/// (Smith-style, without the divisibility chain, which solving does not need),
/// exact solving of integer linear systems, and integer row-lattice bases.
/// This is what makes matrix rings over the integers honest: a system that is
/// solvable over the rationals need not be solvable over the integers.

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ringinv {

struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> e; // row-major

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
    // row[a] -= q * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t j = 0; j < cols; ++j) at(a, j) -= q * at(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        for (std::size_t i = 0; i < rows; ++i) at(i, a) -= q * at(i, b);
    }
};

struct IntDiagonalization {
    IntMat d; // diagonal, same shape as input
    IntMat u; // unimodular rows x rows, u * m * v = d
    IntMat v; // unimodular cols x cols
};

/// Diagonalize m by unimodular transforms. Smallest-pivot selection keeps the
/// intermediate entries from exploding on the sizes this library meets.
inline IntDiagonalization diagonalize_integer(const IntMat& m) {
    IntDiagonalization r{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
    IntMat& d = r.d;
    const std::size_t steps = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Pick the nonzero entry of smallest magnitude in the trailing block.
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < d.rows; ++i)
                for (std::size_t j = t; j < d.cols; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int a = abs(x);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return r; // trailing block all zero
            d.swap_rows(t, pi);
            r.u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            r.v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row(i, t, q);
                    r.u.add_row(i, t, q);
                }
                if (d.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col(j, t, q);
                    r.v.add_col(j, t, q);
                }
                if (d.at(t, j) != 0) clean = false;
            }
            if (clean) break; // pivot isolated, move on
        }
    }
    return r;
}

struct IntAffineSolution {
    bool consistent = false;
    std::vector<Int> particular;            // free lattice coordinates set to zero
    std::vector<std::vector<Int>> kernel;   // basis of the homogeneous solution lattice
};

/// All integer solutions of m x = b as particular + integer span of kernel.
inline IntAffineSolution solve_integer_affine(const IntMat& m, const std::vector<Int>& b) {
    if (b.size() != m.rows) throw Error("right-hand side length mismatch");
    auto [d, u, v] = diagonalize_integer(m);
    std::vector<Int> c(m.rows, Int(0));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) c[i] += u.at(i, j) * b[j];

    IntAffineSolution sol;
    const std::size_t steps = std::min(m.rows, m.cols);
    std::vector<Int> y(m.cols, Int(0));
    std::vector<std::size_t> free_coords;
    for (std::size_t j = 0; j < m.cols; ++j) {
        Int dj = j < steps ? d.at(j, j) : Int(0);
        if (dj == 0) {
            free_coords.push_back(j);
        } else {
            if (c[j] % dj != 0) return sol; // divisibility obstruction
            y[j] = c[j] / dj;
        }
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int di = i < steps ? d.at(i, i) : Int(0);
        if (di == 0 && c[i] != 0) return sol;
    }
    sol.consistent = true;
    sol.particular.assign(m.cols, Int(0));
    for (std::size_t i = 0; i < m.cols; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (y[j] != 0) sol.particular[i] += v.at(i, j) * y[j];
    for (auto f : free_coords) {
        std::vector<Int> k(m.cols, Int(0));
        for (std::size_t i = 0; i < m.cols; ++i) k[i] = v.at(i, f);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

/// Lattice basis of the integer row span of the given vectors (gcd-style row
/// echelon reduction). Empty input or all-zero rows give an empty basis.
inline std::vector<std::vector<Int>> integer_row_lattice_basis(
    std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::size_t top = 0;
    for (std::size_t col = 0; col < cols && top < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break; // column clear
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[top][col];
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) {
                ++top;
                break;
            }
        }
    }
    rows.resize(top);
    return rows;
}

} // namespace ringinv
