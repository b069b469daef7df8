#pragma once

/// Drazin inverses. Matrix rings get the exact core-nilpotent decomposition:
/// the index is where the rank sequence of powers stabilizes, a basis change
/// splits the matrix into an invertible core and a nilpotent block, and the
/// inverse is the core inverted inside that basis. Finite rings get power
/// periodicity plus exhaustive search, which doubles as the independent oracle
/// for the matrix path.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ring.hpp"

namespace ringinv {

struct DrazinResult {
    bool exists = false;
    std::optional<RingElement> inverse;
    int index = 0;
};

template <Scalar S>
struct MatrixDrazin {
    Matrix<S> inverse;
    int index;
};

/// Core-nilpotent Drazin inverse of a square matrix over a field. Always
/// exists; the index is at most the dimension.
template <Scalar S>
MatrixDrazin<S> matrix_drazin(const Matrix<S>& a) {
    const std::size_t n = a.rows();
    int k = 0;
    std::size_t rank_k = 0;
    {
        Matrix<S> p = a;                 // a^t
        std::size_t prev = rank(p);
        for (std::size_t t = 1; t <= n; ++t) {
            Matrix<S> next = p * a;      // a^{t+1}
            std::size_t cur = rank(next);
            if (cur == prev) {
                k = static_cast<int>(t);
                rank_k = prev;
                break;
            }
            p = std::move(next);
            prev = cur;
        }
    }
    if (k == 0) throw InternalError("rank sequence failed to stabilize within n");

    const Matrix<S> ak = a.pow(static_cast<unsigned long long>(k));
    const std::size_t r = rank_k;
    if (r == 0) return {a.zero_like(), k}; // nilpotent
    if (r == n) {
        auto inv = inverse(a);
        if (!inv) throw InternalError("full-rank power but singular matrix");
        return {*inv, k};
    }

    // P = [pivot columns of a^k | kernel basis of a^k]; range and kernel of
    // a^k are complementary once the rank has stabilized.
    auto rr = rref(ak);
    auto kern = kernel_basis(ak);
    Matrix<S> p(n, n, a.zero_scalar());
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i) p.at(i, c) = ak.at(i, rr.pivots[c]);
    for (std::size_t c = 0; c < kern.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) p.at(i, r + c) = kern[c][i];
    auto pinv = inverse(p);
    if (!pinv) throw InternalError("core-nilpotent basis change is singular");

    Matrix<S> b = *pinv * a * p;
    Matrix<S> core(r, r, a.zero_scalar());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) core.at(i, j) = b.at(i, j);
    auto core_inv = inverse(core);
    if (!core_inv) throw InternalError("core block is singular");

    Matrix<S> d(n, n, a.zero_scalar());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) d.at(i, j) = core_inv->at(i, j);
    return {p * d * *pinv, k};
}

/// The three defining equations at index k: x a^{k+1} = a^k, x a x = x,
/// x a = a x.
inline bool drazin_check(const RingElement& a, const RingElement& x, int k) {
    if (k < 1) return false;
    const auto aku = pow(a, static_cast<unsigned long long>(k));
    return x * (aku * a) == aku && x * a * x == x && x * a == a * x;
}

/// Matrix-ring path. Over the integers the rational Drazin inverse must
/// itself be integral, otherwise no Drazin inverse exists in that ring.
inline DrazinResult drazin_matrix(const RingElement& a) {
    if (!a.ring->is_matrix_kind())
        throw UnsupportedRingError("Drazin matrix path needs a matrix ring");
    return std::visit(
        [&](const auto& m) -> DrazinResult {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                          std::is_same_v<T, Matrix<GaussianRational>> ||
                          std::is_same_v<T, Matrix<ModularInt>>) {
                auto res = matrix_drazin(m);
                if constexpr (std::is_same_v<T, Matrix<Rational>>) {
                    if (a.ring->is_integer_matrix()) {
                        for (const auto& x : res.inverse.entries())
                            if (!x.is_integral()) return {false, std::nullopt, 0};
                    }
                }
                return {true, a.ring->wrap(res.inverse), res.index};
            } else {
                throw UnsupportedRingError("Drazin matrix path needs a matrix ring");
            }
        },
        a.payload);
}

/// Finite-ring path: the power sequence repeats, its preperiod bounds the
/// index, and the (unique) witness is found by exhaustive search, then the
/// index is minimized downward. max_k > 0 caps the index search explicitly.
inline DrazinResult drazin_finite(const RingElement& a, long long max_k = 0) {
    if (!a.ring->finite()) throw NotEnumerableError("ring is not finite");

    std::map<std::string, long long> seen;
    std::vector<RingElement> powers{a};
    seen[element_text(a)] = 1;
    long long preperiod = 0;
    for (long long t = 2;; ++t) {
        RingElement pt = powers.back() * a;
        std::string key = element_text(pt);
        auto it = seen.find(key);
        if (it != seen.end()) {
            preperiod = it->second;
            break;
        }
        seen.emplace(std::move(key), t);
        powers.push_back(std::move(pt));
    }
    if (max_k > 0 && preperiod > max_k)
        throw Error("Drazin index search exceeded the max-k bound of " +
                    std::to_string(max_k));

    int k = static_cast<int>(preperiod);
    std::optional<RingElement> found;
    a.ring->for_each_element([&](const RingElement& x) {
        if (drazin_check(a, x, k)) {
            found = x;
            return false;
        }
        return true;
    });
    if (!found)
        throw InternalError("finite ring element without a Drazin inverse");
    while (k > 1 && drazin_check(a, *found, k - 1)) --k;
    return {true, found, k};
}

/// Dispatch: matrix rings use the decomposition, other finite rings the
/// exhaustive search.
inline DrazinResult drazin(const RingElement& a, long long max_k = 0) {
    if (a.ring->is_matrix_kind()) return drazin_matrix(a);
    if (a.ring->finite()) return drazin_finite(a, max_k);
    throw UnsupportedRingError("Drazin inverse needs a matrix ring or a finite ring");
}

/// Reconstruct the Drazin inverse as x^{k+1} a^k from any (x, k) with
/// x a^{k+1} = a^k and a x^2 = x.
inline RingElement drazin_from_pair(const RingElement& a, const RingElement& x, int k) {
    if (k < 1) throw PreconditionError("index must be positive");
    const auto aku = pow(a, static_cast<unsigned long long>(k));
    if (!(x * (aku * a) == aku && a * x * x == x))
        throw PreconditionError("pair does not satisfy x a^{k+1} = a^k and a x^2 = x");
    RingElement d = pow(x, static_cast<unsigned long long>(k + 1)) * aku;
    if (!drazin_check(a, d, k))
        throw InternalError("reconstructed Drazin inverse failed verification");
    return d;
}

/// If x a^{k+1} = a^k, a x^2 = x and a^m x^n = x^n a^m, then x is the Drazin
/// inverse itself; otherwise nothing.
inline std::optional<RingElement> drazin_by_commuting_powers(const RingElement& a,
                                                             const RingElement& x,
                                                             int m, int n, int k) {
    if (m < 1 || n < 1 || k < 1) return std::nullopt;
    const auto aku = pow(a, static_cast<unsigned long long>(k));
    if (!(x * (aku * a) == aku && a * x * x == x)) return std::nullopt;
    const auto am = pow(a, static_cast<unsigned long long>(m));
    const auto xn = pow(x, static_cast<unsigned long long>(n));
    if (!(am * xn == xn * am)) return std::nullopt;
    return x;
}

} // namespace ringinv
