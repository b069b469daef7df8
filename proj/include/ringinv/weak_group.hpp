#pragma once

/// m-weak group inverses. An x is an m-weak group inverse of a at index k when
///
///   (i) x a^{k+1} = a^k,   (ii) a x^2 = x,   (iii) (a^k)* a^{m+1} x = (a^k)* a^m,
///
/// m = 0 being the pseudo core inverse and m = 1 the weak group inverse. The
/// solver returns the whole family: every solution has the form a^D + a^D z
/// with z in the corner subspace aa^D R (1 - aa^D) subject to one linear
/// condition, so on matrix rings the family is an affine solution set (a
/// lattice coset over the integers) and on finite rings an explicit list found
/// by exhaustive search. The two paths are kept independent; their agreement
/// on finite matrix rings is part of the test gate.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "diophantine.hpp"
#include "drazin.hpp"

namespace ringinv {

// ---------------------------------------------------------------------------
// Definition checkers
// ---------------------------------------------------------------------------

inline bool mwg_check(const RingElement& a, const RingElement& x, int m, int k) {
    if (k < 1 || m < 0) return false;
    const auto ak = pow(a, static_cast<unsigned long long>(k));
    if (!(x * (ak * a) == ak)) return false;
    if (!(a * x * x == x)) return false;
    const auto sak = star(ak);
    const auto am = pow(a, static_cast<unsigned long long>(m));
    return sak * (am * a) * x == sak * am;
}

/// Equivalent Hermitian form: (i), (ii) and ((a^m)* a^{m+1} x)* = (a^m)* a^{m+1} x.
inline bool mwg_check_symmetric(const RingElement& a, const RingElement& x, int m, int k) {
    if (k < 1 || m < 0) return false;
    const auto ak = pow(a, static_cast<unsigned long long>(k));
    if (!(x * (ak * a) == ak)) return false;
    if (!(a * x * x == x)) return false;
    const auto am = pow(a, static_cast<unsigned long long>(m));
    const auto h = star(am) * (am * a) * x;
    return star(h) == h;
}

struct InverseCertificate {
    RingElement element;
    RingElement witness;
    int order;  // m
    int index;  // k
    bool verified;
};

inline InverseCertificate certify(const RingElement& a, const RingElement& x, int m, int k) {
    return {a, x, m, k, mwg_check(a, x, m, k)};
}

// ---------------------------------------------------------------------------
// Solution families
// ---------------------------------------------------------------------------

enum class SolvePath { automatic, matrix, exhaustive };

struct SolutionFamily {
    bool exists = false;
    int order = 0;            // m
    int index = 0;            // Drazin index used for the defining equations
    bool via_enumeration = false;
    bool integral = false;    // lattice semantics (integer matrix ring)
    std::optional<RingElement> canonical;
    std::vector<RingElement> basis;    // perturbation basis: members are
                                       // canonical + (integer/field) combinations
    std::vector<RingElement> members;  // full list on the enumeration path

    bool unique() const {
        return exists && (via_enumeration ? members.size() == 1 : basis.empty());
    }
    std::size_t dimension() const { return basis.size(); }
};

namespace detail {

template <Scalar S>
struct MatrixFamily {
    bool exists = false;
    int index = 0;
    Matrix<S> canonical;
    std::vector<Matrix<S>> basis;

    MatrixFamily(std::size_t n, const S& zero) : canonical(n, n, zero) {}
};

/// Field path. Unknown Z ranges over n x n matrices subject to
/// Z = E Z (1 - E) and (a^k)* a^m Z = (a^k)* a^m (1 - E); members are
/// a^D + a^D Z. Free variables of the solver are set to zero for the
/// canonical member.
template <Scalar S>
MatrixFamily<S> field_mwg_family(const Matrix<S>& a, int m, bool conj) {
    const std::size_t n = a.rows();
    const S proto = a.entries().front();
    MatrixFamily<S> fam(n, proto.zero_like());

    auto dz = matrix_drazin(a);
    fam.index = dz.index;
    const Matrix<S>& ad = dz.inverse;
    const Matrix<S> one = Matrix<S>::identity(n, proto.one_like());
    const Matrix<S> e = a * ad;
    const Matrix<S> one_minus_e = one - e;
    const Matrix<S> k_map =
        a.pow(static_cast<unsigned long long>(fam.index)).starred(conj) *
        a.pow(static_cast<unsigned long long>(m));

    Matrix<S> m1 = materialize_vec_map(n, proto, [&](const Matrix<S>& z) { return k_map * z; });
    Matrix<S> m2 = materialize_vec_map(
        n, proto, [&](const Matrix<S>& z) { return z - e * z * one_minus_e; });
    Matrix<S> sys = stack_rows(m1, m2);
    std::vector<S> rhs = vec(k_map * one_minus_e);
    const std::vector<S> zeros(n * n, proto.zero_like());
    rhs.insert(rhs.end(), zeros.begin(), zeros.end());

    auto sol = solve_affine(sys, rhs);
    if (!sol.consistent) return fam;
    fam.exists = true;
    fam.canonical = ad + ad * unvec(n, sol.particular);
    for (const auto& kv : sol.kernel) {
        Matrix<S> z = unvec(n, kv);
        // a^D z is nonzero and the images stay independent: a^D is injective
        // on the corner subspace.
        fam.basis.push_back(ad * z);
    }
    return fam;
}

inline IntMat to_int_mat(const Matrix<Rational>& m) {
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& x = m.at(i, j);
            if (!x.is_integral()) throw InternalError("expected an integral matrix");
            r.at(i, j) = x.numerator();
        }
    return r;
}

inline Matrix<Rational> int_vec_to_matrix(std::size_t n, const std::vector<Int>& v) {
    std::vector<Rational> entries;
    entries.reserve(v.size());
    for (const auto& x : v) entries.emplace_back(x);
    return Matrix<Rational>::from_entries(n, n, std::move(entries));
}

/// Integer path: identical linear conditions, solved over the integers. A
/// family that is nonempty over the rationals can still be empty here; that is
/// the whole point of working in the integer matrix ring.
inline MatrixFamily<Rational> integer_mwg_family(const Matrix<Rational>& a, int m) {
    const std::size_t n = a.rows();
    MatrixFamily<Rational> fam(n, Rational());

    auto dz = matrix_drazin(a);
    fam.index = dz.index;
    for (const auto& x : dz.inverse.entries())
        if (!x.is_integral()) return fam; // no Drazin inverse in the integer ring

    const Matrix<Rational>& ad = dz.inverse;
    const Matrix<Rational> one = Matrix<Rational>::identity(n, Rational(1));
    const Matrix<Rational> e = a * ad;
    const Matrix<Rational> one_minus_e = one - e;
    const Matrix<Rational> k_map =
        a.pow(static_cast<unsigned long long>(fam.index)).starred(false) *
        a.pow(static_cast<unsigned long long>(m));

    Matrix<Rational> m1 =
        materialize_vec_map(n, Rational(), [&](const Matrix<Rational>& z) { return k_map * z; });
    Matrix<Rational> m2 = materialize_vec_map(
        n, Rational(), [&](const Matrix<Rational>& z) { return z - e * z * one_minus_e; });
    IntMat sys = to_int_mat(stack_rows(m1, m2));
    std::vector<Int> rhs;
    rhs.reserve(2 * n * n);
    for (const auto& x : vec(k_map * one_minus_e)) rhs.push_back(x.numerator());
    rhs.resize(2 * n * n, Int(0));

    auto sol = solve_integer_affine(sys, rhs);
    if (!sol.consistent) return fam;
    fam.exists = true;
    fam.canonical = ad + ad * int_vec_to_matrix(n, sol.particular);
    for (const auto& kv : sol.kernel) fam.basis.push_back(ad * int_vec_to_matrix(n, kv));
    return fam;
}

/// Affine-set membership over a field: is target in span(basis) + origin?
template <Scalar S>
bool field_affine_contains(const Matrix<S>& origin, const std::vector<Matrix<S>>& basis,
                           const Matrix<S>& target) {
    Matrix<S> diff = target - origin;
    if (diff.is_zero()) return true;
    if (basis.empty()) return false;
    const std::size_t nn = diff.rows() * diff.cols();
    Matrix<S> cols(nn, basis.size(), diff.zero_scalar());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        auto v = vec(basis[c]);
        for (std::size_t r = 0; r < nn; ++r) cols.at(r, c) = v[r];
    }
    return solve_affine(cols, vec(diff)).consistent;
}

} // namespace detail

/// Complete m-weak group inverse family of a.
inline SolutionFamily mwg_solve(const RingElement& a, int m,
                                SolvePath path = SolvePath::automatic,
                                long long max_k = 0) {
    if (m < 0) throw PreconditionError("order m must be non-negative");
    if (path == SolvePath::automatic)
        path = a.ring->is_matrix_kind() ? SolvePath::matrix : SolvePath::exhaustive;

    SolutionFamily out;
    out.order = m;
    if (path == SolvePath::matrix) {
        if (!a.ring->is_matrix_kind())
            throw UnsupportedRingError("matrix path needs a matrix ring");
        std::visit(
            [&](const auto& mat) {
                using T = std::decay_t<decltype(mat)>;
                if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                              std::is_same_v<T, Matrix<GaussianRational>> ||
                              std::is_same_v<T, Matrix<ModularInt>>) {
                    auto run = [&](const auto& fam) {
                        out.exists = fam.exists;
                        out.index = fam.index;
                        if (!fam.exists) return;
                        out.canonical = a.ring->wrap(fam.canonical);
                        for (const auto& b : fam.basis) out.basis.push_back(a.ring->wrap(b));
                    };
                    if constexpr (std::is_same_v<T, Matrix<Rational>>) {
                        if (a.ring->is_integer_matrix()) {
                            out.integral = true;
                            run(detail::integer_mwg_family(mat, m));
                            return;
                        }
                    }
                    run(detail::field_mwg_family(mat, m, a.ring->conjugating_involution()));
                } else {
                    throw UnsupportedRingError("matrix path needs a matrix ring");
                }
            },
            a.payload);
    } else {
        if (!a.ring->finite())
            throw NotEnumerableError("exhaustive path needs a finite ring");
        auto dz = drazin_finite(a, max_k);
        out.via_enumeration = true;
        out.index = dz.index;
        a.ring->for_each_element([&](const RingElement& x) {
            if (mwg_check(a, x, m, out.index)) out.members.push_back(x);
            return true;
        });
        out.exists = !out.members.empty();
        if (out.exists) out.canonical = out.members.front();
    }

    // Emission guard: the canonical member and each basis direction must
    // verify; by linearity that covers the whole affine set.
    if (out.exists && !out.via_enumeration) {
        if (!mwg_check(a, *out.canonical, m, out.index))
            throw InternalError("canonical family member failed verification");
        for (const auto& b : out.basis)
            if (!mwg_check(a, *out.canonical + b, m, out.index))
                throw InternalError("family basis direction failed verification");
    }
    return out;
}

/// Pseudo core inverse = 0-weak group inverse; at most one exists, and the
/// solver result is held to that.
inline SolutionFamily pseudo_core(const RingElement& a,
                                  SolvePath path = SolvePath::automatic,
                                  long long max_k = 0) {
    SolutionFamily f = mwg_solve(a, 0, path, max_k);
    if (f.exists && !f.unique())
        throw InternalError("pseudo core family has more than one member");
    return f;
}

/// Explicit member list. Enumeration families are returned as-is; field-path
/// families over a finite prime field are spanned coefficient-by-coefficient.
inline std::vector<RingElement> materialize_family(const SolutionFamily& f) {
    if (!f.exists) return {};
    if (f.via_enumeration) return f.members;
    if (f.integral)
        throw UnsupportedRingError("integer lattice families are infinite");
    if (f.basis.empty()) return {*f.canonical};
    const auto* proto = std::get_if<Matrix<ModularInt>>(&f.canonical->payload);
    if (!proto)
        throw UnsupportedRingError("can only materialize families over a finite field");
    const long long p = proto->entries().front().modulus();
    std::vector<RingElement> out;
    std::vector<long long> coeff(f.basis.size(), 0);
    for (;;) {
        RingElement member = *f.canonical;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            const auto& b = std::get<Matrix<ModularInt>>(f.basis[i].payload);
            member = member + f.canonical->ring->wrap(
                                  b.scaled(ModularInt(coeff[i], p)));
        }
        out.push_back(std::move(member));
        std::size_t i = coeff.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++coeff[i] < p) {
                done = false;
                break;
            }
            coeff[i] = 0;
        }
        if (done) break;
    }
    return out;
}

/// Membership in the family (affine span over the field, lattice over the
/// integers, list lookup for enumeration families).
inline bool family_contains(const SolutionFamily& f, const RingElement& x) {
    if (!f.exists) return false;
    if (f.via_enumeration)
        return std::any_of(f.members.begin(), f.members.end(),
                           [&](const RingElement& y) { return y == x; });
    if (f.integral) {
        const auto& canon = std::get<Matrix<Rational>>(f.canonical->payload);
        const auto& target = std::get<Matrix<Rational>>(x.payload);
        Matrix<Rational> diff = target - canon;
        if (diff.is_zero()) return true;
        if (f.basis.empty()) return false;
        const std::size_t nn = diff.rows() * diff.cols();
        IntMat cols(nn, f.basis.size());
        for (std::size_t c = 0; c < f.basis.size(); ++c) {
            auto v = vec(std::get<Matrix<Rational>>(f.basis[c].payload));
            for (std::size_t r = 0; r < nn; ++r) cols.at(r, c) = v[r].numerator();
        }
        std::vector<Int> rhs;
        for (const auto& d : vec(diff)) {
            if (!d.is_integral()) return false;
            rhs.push_back(d.numerator());
        }
        return solve_integer_affine(cols, rhs).consistent;
    }
    return std::visit(
        [&](const auto& canon) -> bool {
            using T = std::decay_t<decltype(canon)>;
            if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                          std::is_same_v<T, Matrix<GaussianRational>> ||
                          std::is_same_v<T, Matrix<ModularInt>>) {
                std::vector<T> basis;
                for (const auto& b : f.basis) basis.push_back(std::get<T>(b.payload));
                return detail::field_affine_contains(canon, basis, std::get<T>(x.payload));
            } else {
                throw InternalError("matrix family with non-matrix payload");
            }
        },
        f.canonical->payload);
}

// ---------------------------------------------------------------------------
// Constructive routes
// ---------------------------------------------------------------------------

/// Weak group inverse from an aligned idempotent f with f aa^D = aa^D,
/// aa^D f = f and (a^D)* a f = (a^D)* a; the witness is a^D f.
inline RingElement wg_from_idempotent(const RingElement& a, const RingElement& f) {
    if (!is_idempotent(f)) throw PreconditionError("f is not idempotent");
    auto dz = drazin(a);
    if (!dz.exists) throw PreconditionError("a has no Drazin inverse in this ring");
    const RingElement& ad = *dz.inverse;
    const RingElement e = a * ad;
    if (!(f * e == e && e * f == f))
        throw PreconditionError("f does not generate the same right ideal as aa^D");
    const RingElement sa = star(ad) * a;
    if (!(sa * f == sa))
        throw PreconditionError("f fails (a^D)* a f = (a^D)* a");
    RingElement w = ad * f;
    if (!mwg_check(a, w, 1, dz.index))
        throw InternalError("a^D f failed the weak group verification");
    return w;
}

/// For idempotents g, e with eg = g, the idempotent f = g + (1-g)e satisfies
/// f^2 = f, fe = e, ef = f and gf = g (so fR = eR and g stays aligned).
inline RingElement idempotent_align(const RingElement& g, const RingElement& e) {
    if (!is_idempotent(g) || !is_idempotent(e))
        throw PreconditionError("alignment needs idempotent inputs");
    if (!(e * g == g)) throw PreconditionError("gR is not contained in eR");
    const RingElement one = g.ring->one();
    RingElement f = g + (one - g) * e;
    if (!(is_idempotent(f) && f * e == e && e * f == f && g * f == g))
        throw InternalError("aligned idempotent failed its identities");
    return f;
}

struct CancellableSolve {
    bool exists = false;
    std::optional<RingElement> witness;
    bool verified = false;
};

/// Weak group inverse through the cancellable-idempotent criterion: solve
/// (a^D)* a = (a^D)* a^D x for x and return (a^D)^3 x. Valid when every
/// idempotent is left *-cancellable; finite rings are checked, matrix rings
/// are the caller's assertion.
inline CancellableSolve wg_via_cancellable(const RingElement& a) {
    CancellableSolve out;
    if (a.ring->is_matrix_kind()) {
        auto dz = drazin_matrix(a);
        if (!dz.exists) return out; // no Drazin inverse, hence no weak group inverse
        const int k = dz.index;
        return std::visit(
            [&](const auto& am) -> CancellableSolve {
                using T = std::decay_t<decltype(am)>;
                if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                              std::is_same_v<T, Matrix<GaussianRational>> ||
                              std::is_same_v<T, Matrix<ModularInt>>) {
                    CancellableSolve res;
                    const std::size_t n = am.rows();
                    const auto proto = am.entries().front();
                    const T ad = std::get<T>(dz.inverse->payload);
                    const bool conj = a.ring->conjugating_involution();
                    const T lhs_map = ad.starred(conj) * ad;
                    const auto rhs_mat = ad.starred(conj) * am;
                    if (a.ring->is_integer_matrix()) {
                        if constexpr (std::is_same_v<T, Matrix<Rational>>) {
                            auto sys = detail::to_int_mat(materialize_vec_map(
                                n, proto, [&](const T& x) { return lhs_map * x; }));
                            std::vector<Int> rhs;
                            for (const auto& v : vec(rhs_mat)) rhs.push_back(v.numerator());
                            auto sol = solve_integer_affine(sys, rhs);
                            if (!sol.consistent) return res;
                            res.exists = true;
                            T x0 = detail::int_vec_to_matrix(n, sol.particular);
                            res.witness = a.ring->wrap(ad * ad * ad * x0);
                        }
                    } else {
                        auto sys = materialize_vec_map(
                            n, proto, [&](const T& x) { return lhs_map * x; });
                        auto sol = solve_affine(sys, vec(rhs_mat));
                        if (!sol.consistent) return res;
                        res.exists = true;
                        T x0 = unvec(n, sol.particular);
                        res.witness = a.ring->wrap(ad * ad * ad * x0);
                    }
                    if (res.exists) res.verified = mwg_check(a, *res.witness, 1, k);
                    return res;
                } else {
                    throw UnsupportedRingError("matrix payload expected");
                }
            },
            a.payload);
    }
    if (!a.ring->finite())
        throw UnsupportedRingError("needs a matrix ring or a finite ring");
    for (const auto& e : idempotents(a.ring)) {
        if (!left_star_cancellable(e).cancellable)
            throw PreconditionError(
                "ring has a non-left-*-cancellable idempotent: " + element_text(e));
    }
    auto dz = drazin_finite(a);
    const RingElement& ad = *dz.inverse;
    const RingElement lhs = star(ad) * a;
    const RingElement sad = star(ad) * ad;
    std::optional<RingElement> x0;
    a.ring->for_each_element([&](const RingElement& x) {
        if (sad * x == lhs) {
            x0 = x;
            return false;
        }
        return true;
    });
    if (!x0) return out;
    out.exists = true;
    out.witness = ad * ad * ad * *x0;
    out.verified = mwg_check(a, *out.witness, 1, dz.index);
    if (!out.verified)
        throw InternalError("cancellable route produced an unverified witness");
    return out;
}

// ---------------------------------------------------------------------------
// Power correspondence and lifting
// ---------------------------------------------------------------------------

/// m-weak family of a obtained from the weak group family of a^m through
/// y -> a^{m-1} y. Membership is guaranteed; completeness is not claimed.
inline SolutionFamily mwg_from_power(const RingElement& a, int m,
                                     SolvePath path = SolvePath::automatic,
                                     long long max_k = 0) {
    if (m < 1) throw PreconditionError("order m must be positive");
    const RingElement am = pow(a, static_cast<unsigned long long>(m));
    SolutionFamily inner = mwg_solve(am, 1, path, max_k);

    SolutionFamily out;
    out.order = m;
    out.via_enumeration = inner.via_enumeration;
    out.integral = inner.integral;
    if (!inner.exists) return out;
    out.exists = true;
    out.index = drazin(a, max_k).index;

    const RingElement am1 = pow(a, static_cast<unsigned long long>(m - 1));
    if (inner.via_enumeration) {
        std::set<std::string> seen;
        for (const auto& y : inner.members) {
            RingElement img = am1 * y;
            if (seen.insert(element_text(img)).second) out.members.push_back(img);
        }
        out.canonical = out.members.front();
    } else {
        out.canonical = am1 * *inner.canonical;
        // The map can collapse directions; reduce the images to a basis.
        if (out.integral) {
            std::vector<std::vector<Int>> rows;
            for (const auto& b : inner.basis) {
                std::vector<Int> row;
                for (const auto& v :
                     vec(std::get<Matrix<Rational>>((am1 * b).payload)))
                    row.push_back(v.numerator());
                rows.push_back(std::move(row));
            }
            const std::size_t n = a.ring->descriptor().size;
            for (auto& row : integer_row_lattice_basis(std::move(rows)))
                out.basis.push_back(a.ring->wrap(detail::int_vec_to_matrix(n, row)));
        } else {
            std::visit(
                [&](const auto& canon) {
                    using T = std::decay_t<decltype(canon)>;
                    if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                                  std::is_same_v<T, Matrix<GaussianRational>> ||
                                  std::is_same_v<T, Matrix<ModularInt>>) {
                        std::vector<T> kept;
                        for (const auto& b : inner.basis) {
                            T img = std::get<T>((am1 * b).payload);
                            if (img.is_zero()) continue;
                            if (!detail::field_affine_contains(img.zero_like(), kept, img))
                                kept.push_back(img);
                        }
                        for (auto& b : kept) out.basis.push_back(a.ring->wrap(b));
                    }
                },
                out.canonical->payload);
        }
    }

    if (!mwg_check(a, *out.canonical, m, out.index))
        throw InternalError("power-correspondence member failed verification");
    for (const auto& b : out.basis)
        if (!mwg_check(a, *out.canonical + b, m, out.index))
            throw InternalError("power-correspondence direction failed verification");
    for (const auto& mem : out.members)
        if (!mwg_check(a, mem, m, out.index))
            throw InternalError("power-correspondence member failed verification");
    return out;
}

/// Forward direction: x^m is a weak group inverse of a^m.
inline RingElement wg_of_power(const RingElement& a, const RingElement& x, int m,
                               long long max_k = 0) {
    if (m < 1) throw PreconditionError("order m must be positive");
    auto dz = drazin(a, max_k);
    if (!dz.exists || !mwg_check(a, x, m, dz.index))
        throw PreconditionError("x is not an m-weak group inverse of a");
    RingElement y = pow(x, static_cast<unsigned long long>(m));
    const RingElement am = pow(a, static_cast<unsigned long long>(m));
    auto dzm = drazin(am, max_k);
    if (!dzm.exists || !mwg_check(am, y, 1, dzm.index))
        throw InternalError("x^m failed the weak group verification against a^m");
    return y;
}

/// Lifting: an m-weak witness x yields the (m+s)-weak witness x^{s+1} a^s.
inline RingElement mwg_lift(const RingElement& a, const RingElement& x, int m, int s,
                            long long max_k = 0) {
    if (m < 0 || s < 1) throw PreconditionError("need m >= 0 and s >= 1");
    auto dz = drazin(a, max_k);
    if (!dz.exists || !mwg_check(a, x, m, dz.index))
        throw PreconditionError("x is not an m-weak group inverse of a");
    RingElement y = pow(x, static_cast<unsigned long long>(s + 1)) *
                    pow(a, static_cast<unsigned long long>(s));
    if (!mwg_check(a, y, m + s, dz.index))
        throw InternalError("lifted witness failed verification");
    return y;
}

// ---------------------------------------------------------------------------
// Uniqueness
// ---------------------------------------------------------------------------

struct UniquenessResult {
    bool unique = true;
    std::optional<RingElement> witness; // nonzero x in aa^D R (1-aa^D) with (aa^D)* x = 0
};

/// Uniqueness criterion: the weak group inverse of a is unique exactly when
/// the corner subspace aa^D R (1-aa^D) meets ker((aa^D)* . ) trivially.
inline UniquenessResult uniqueness_test(const RingElement& a, long long max_k = 0) {
    UniquenessResult out;
    if (a.ring->is_matrix_kind()) {
        auto dz = drazin_matrix(a);
        if (!dz.exists)
            throw PreconditionError("a has no Drazin inverse in this ring");
        return std::visit(
            [&](const auto& am) -> UniquenessResult {
                using T = std::decay_t<decltype(am)>;
                if constexpr (std::is_same_v<T, Matrix<Rational>> ||
                              std::is_same_v<T, Matrix<GaussianRational>> ||
                              std::is_same_v<T, Matrix<ModularInt>>) {
                    UniquenessResult res;
                    const std::size_t n = am.rows();
                    const auto proto = am.entries().front();
                    const T ad = std::get<T>(dz.inverse->payload);
                    const T one = T::identity(n, proto.one_like());
                    const T e = am * ad;
                    const T se = e.starred(a.ring->conjugating_involution());
                    const T one_minus_e = one - e;
                    T m1 = materialize_vec_map(n, proto, [&](const T& x) { return se * x; });
                    T m2 = materialize_vec_map(
                        n, proto, [&](const T& x) { return x - e * x * one_minus_e; });
                    auto kern = kernel_basis(stack_rows(m1, m2));
                    if (kern.empty()) return res;
                    res.unique = false;
                    T w = unvec(n, kern.front());
                    if (a.ring->is_integer_matrix()) {
                        if constexpr (std::is_same_v<T, Matrix<Rational>>) {
                            // Scale the rational witness into the integer ring.
                            Int lcm_den = 1;
                            for (const auto& v : w.entries())
                                lcm_den = boost::multiprecision::lcm(lcm_den, v.denominator());
                            w = w.scaled(Rational(lcm_den));
                        }
                    }
                    res.witness = a.ring->wrap(w);
                    return res;
                } else {
                    throw UnsupportedRingError("matrix payload expected");
                }
            },
            a.payload);
    }
    if (!a.ring->finite())
        throw UnsupportedRingError("needs a matrix ring or a finite ring");
    auto dz = drazin_finite(a, max_k);
    const RingElement e = a * *dz.inverse;
    const RingElement one = a.ring->one();
    const RingElement se = star(e);
    const RingElement z = a.ring->zero();
    a.ring->for_each_element([&](const RingElement& x) {
        if (x == z) return true;
        if (x == e * x * (one - e) && se * x == z) {
            out.unique = false;
            out.witness = x;
            return false;
        }
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Group-EP decomposition
// ---------------------------------------------------------------------------

struct GroupEPDecomposition {
    RingElement part_group;      // a1: group invertible
    RingElement part_nilpotent;  // a2: nilpotent, with a1* a2 = a2 a1 = 0
    int nilpotency_index;
};

/// True when a = a1 + a2 with a1 group invertible, a2 nilpotent, and
/// a1* a2 = a2 a1 = 0.
inline bool group_ep_check(const RingElement& a, const RingElement& a1,
                           const RingElement& a2, long long max_k = 0) {
    detail::require_same_ring(a, a1);
    detail::require_same_ring(a, a2);
    if (!(a1 + a2 == a)) return false;
    const RingElement z = a.ring->zero();
    if (!(star(a1) * a2 == z && a2 * a1 == z)) return false;
    auto dz = drazin(a1, max_k);
    if (!dz.exists || dz.index != 1) return false;
    // nilpotency within the ambient Drazin index bound
    int bound = a.ring->is_matrix_kind() ? static_cast<int>(a.ring->descriptor().size)
                                         : drazin(a, max_k).index;
    RingElement p = a2;
    for (int t = 1; t <= bound; ++t) {
        if (p == z) return true;
        p = p * a2;
    }
    return p == z;
}

/// a1 = a^2 x and a2 = a - a^2 x for the unique weak group inverse x.
inline GroupEPDecomposition group_ep_decompose(const RingElement& a, long long max_k = 0) {
    SolutionFamily fam = mwg_solve(a, 1, SolvePath::automatic, max_k);
    if (!fam.exists)
        throw PreconditionError("a is not weak group invertible");
    if (!fam.unique() || !uniqueness_test(a, max_k).unique)
        throw PreconditionError("the weak group inverse of a is not unique");
    const RingElement& x = *fam.canonical;
    RingElement a1 = a * a * x;
    RingElement a2 = a - a1;

    const RingElement z = a.ring->zero();
    auto dz1 = drazin(a1, max_k);
    if (!dz1.exists || dz1.index != 1)
        throw InternalError("group part is not group invertible");
    if (!(star(a1) * a2 == z && a2 * a1 == z))
        throw InternalError("decomposition orthogonality failed");
    int nil_index = 0;
    RingElement p = a2;
    for (int t = 1; t <= fam.index; ++t) {
        if (p == z) {
            nil_index = t;
            break;
        }
        p = p * a2;
    }
    if (nil_index == 0) {
        if (!(p == z)) throw InternalError("nilpotent part exceeded the index bound");
        nil_index = fam.index;
    }
    return {std::move(a1), std::move(a2), nil_index};
}

// ---------------------------------------------------------------------------
// Coincidence with the Drazin inverse
// ---------------------------------------------------------------------------

struct CoincidenceConditions {
    bool commutes;            // x a = a x
    bool power_rule;          // the weak group inverse of a^n equals x^n
    bool higher_order_equal;  // x equals the unique n-weak group inverse
    bool equals_drazin;       // x = a^D
};

/// The four equivalent characterizations, evaluated independently for an
/// element with a unique m-weak group inverse (0 <= m < n). The theory says
/// all four agree; each is computed from scratch so tests can confirm it.
inline CoincidenceConditions drazin_coincidence_conditions(const RingElement& a, int m,
                                                           int n, long long max_k = 0) {
    if (!(0 <= m && m < n)) throw PreconditionError("need 0 <= m < n");
    SolutionFamily fam_m = mwg_solve(a, m, SolvePath::automatic, max_k);
    if (!fam_m.exists || !fam_m.unique())
        throw PreconditionError("needs a unique m-weak group inverse");
    const RingElement& x = *fam_m.canonical;

    CoincidenceConditions c{};
    c.commutes = (x * a == a * x);

    const RingElement an = pow(a, static_cast<unsigned long long>(n));
    SolutionFamily fam_power = mwg_solve(an, 1, SolvePath::automatic, max_k);
    if (!fam_power.exists || !fam_power.unique())
        throw InternalError("a^n must have a unique weak group inverse here");
    c.power_rule = (*fam_power.canonical == pow(x, static_cast<unsigned long long>(n)));

    SolutionFamily fam_n = mwg_solve(a, n, SolvePath::automatic, max_k);
    if (!fam_n.exists || !fam_n.unique())
        throw InternalError("a must have a unique n-weak group inverse here");
    c.higher_order_equal = (*fam_n.canonical == x);

    auto dz = drazin(a, max_k);
    c.equals_drazin = dz.exists && (x == *dz.inverse);
    return c;
}

} // namespace ringinv
