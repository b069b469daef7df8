#pragma once

/// Unital rings with involution: a declarative descriptor names one of the
/// concrete ring kinds (matrix ring over an exact scalar, residues mod n,
/// Klein four-group ring over F_p, or a two-fold product), together with the
/// involution. Elements are immutable tagged values; operations are pure.
///
/// Finite rings additionally expose exhaustive enumeration in a fixed
/// lexicographic order, which every brute-force search below relies on for
/// reproducibility.

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "klein.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace ringinv {

enum class RingKind { matrix, modular, group_ring, product };
enum class ScalarKind { rational, integer, gaussian_rational, modular };
enum class Involution { transpose, conjugate_transpose, identity, swap_ab, swap };

struct RingDescriptor {
    RingKind kind = RingKind::modular;
    // matrix kind
    std::size_t size = 0;
    ScalarKind base = ScalarKind::rational;
    long long base_modulus = 0;
    // modular kind
    long long modulus = 0;
    // group-ring kind
    long long p = 0;
    std::string group;
    // product kind (two identical components)
    std::shared_ptr<RingDescriptor> factor;

    Involution involution = Involution::identity;

    bool operator==(const RingDescriptor& o) const {
        if (kind != o.kind || involution != o.involution) return false;
        switch (kind) {
            case RingKind::matrix:
                return size == o.size && base == o.base && base_modulus == o.base_modulus;
            case RingKind::modular:
                return modulus == o.modulus;
            case RingKind::group_ring:
                return p == o.p && group == o.group;
            case RingKind::product:
                return (factor && o.factor) ? *factor == *o.factor : factor == o.factor;
        }
        return false;
    }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct RingElement;

/// Ordered pair living in a product ring; exactly two components.
struct ProductValue {
    std::vector<RingElement> parts;
};

using Payload = std::variant<Matrix<Rational>, Matrix<GaussianRational>,
                             Matrix<ModularInt>, ModularInt, KleinElem, ProductValue>;

struct RingElement {
    RingPtr ring;
    Payload payload;
};

bool operator==(const RingElement& a, const RingElement& b);
inline bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

class Ring : public std::enable_shared_from_this<Ring> {
public:
    /// Validate the descriptor and build a ring handle.
    static RingPtr make(RingDescriptor d) {
        RingPtr factor;
        switch (d.kind) {
            case RingKind::matrix:
                if (d.size < 1) throw DescriptorError("matrix size must be >= 1");
                if (d.involution != Involution::transpose &&
                    d.involution != Involution::conjugate_transpose)
                    throw DescriptorError("matrix rings use transpose or conjugate-transpose");
                if (d.involution == Involution::conjugate_transpose &&
                    d.base != ScalarKind::gaussian_rational)
                    throw DescriptorError(
                        "conjugate-transpose requires the gaussian-rational base");
                if (d.base == ScalarKind::modular && !is_prime(d.base_modulus))
                    throw DescriptorError("matrix base modulus must be prime");
                break;
            case RingKind::modular:
                if (d.modulus < 2) throw DescriptorError("modulus must be >= 2");
                if (d.involution != Involution::identity)
                    throw DescriptorError("residue rings use the identity involution");
                break;
            case RingKind::group_ring:
                if (!is_prime(d.p)) throw DescriptorError("coefficient modulus must be prime");
                if (d.group != "klein4")
                    throw DescriptorError("unknown group '" + d.group + "'");
                if (d.involution != Involution::swap_ab &&
                    d.involution != Involution::identity)
                    throw DescriptorError("group rings use swap_ab or identity");
                break;
            case RingKind::product:
                if (!d.factor) throw DescriptorError("product ring needs a factor");
                factor = make(*d.factor);
                if (d.involution == Involution::identity) {
                    if (!factor->commutative())
                        throw DescriptorError(
                            "identity involution needs a commutative factor");
                } else if (d.involution != Involution::swap) {
                    throw DescriptorError("product rings use swap or identity");
                }
                break;
        }
        auto r = RingPtr(new Ring(std::move(d), std::move(factor)));
        return r;
    }

    const RingDescriptor& descriptor() const { return d_; }
    RingPtr factor() const { return factor_; }

    bool commutative() const {
        switch (d_.kind) {
            case RingKind::matrix: return d_.size == 1;
            case RingKind::modular:
            case RingKind::group_ring: return true;
            case RingKind::product: return factor_->commutative();
        }
        return false;
    }

    bool finite() const {
        switch (d_.kind) {
            case RingKind::matrix: return d_.base == ScalarKind::modular;
            case RingKind::modular:
            case RingKind::group_ring: return true;
            case RingKind::product: return factor_->finite();
        }
        return false;
    }

    Int cardinality() const {
        switch (d_.kind) {
            case RingKind::matrix: {
                if (d_.base != ScalarKind::modular)
                    throw NotEnumerableError("infinite ring");
                Int c = 1;
                for (std::size_t i = 0; i < d_.size * d_.size; ++i) c *= d_.base_modulus;
                return c;
            }
            case RingKind::modular: return Int(d_.modulus);
            case RingKind::group_ring: {
                Int c = 1;
                for (int i = 0; i < 4; ++i) c *= d_.p;
                return c;
            }
            case RingKind::product: {
                Int f = factor_->cardinality();
                return f * f;
            }
        }
        throw InternalError("unreachable");
    }

    bool is_matrix_kind() const { return d_.kind == RingKind::matrix; }
    bool is_field_matrix() const {
        return is_matrix_kind() && d_.base != ScalarKind::integer;
    }
    bool is_integer_matrix() const {
        return is_matrix_kind() && d_.base == ScalarKind::integer;
    }
    bool conjugating_involution() const {
        return d_.involution == Involution::conjugate_transpose;
    }

    RingElement wrap(Payload p) const {
        if (is_integer_matrix()) {
            const auto& m = std::get<Matrix<Rational>>(p);
            for (const auto& x : m.entries())
                if (!x.is_integral())
                    throw InternalError("non-integral entry in an integer matrix ring");
        }
        return RingElement{shared_from_this(), std::move(p)};
    }

    RingElement zero() const { return constant(false); }
    RingElement one() const { return constant(true); }

    // -- enumeration --------------------------------------------------------

    /// Visit every element exactly once in lexicographic payload order. The
    /// visitor returns false to stop early.
    void for_each_element(const std::function<bool(const RingElement&)>& f) const {
        if (!finite()) throw NotEnumerableError("ring is not finite");
        switch (d_.kind) {
            case RingKind::modular: {
                for (long long v = 0; v < d_.modulus; ++v)
                    if (!f(wrap(ModularInt(v, d_.modulus)))) return;
                return;
            }
            case RingKind::group_ring: {
                std::array<long long, 4> c;
                for (c[0] = 0; c[0] < d_.p; ++c[0])
                    for (c[1] = 0; c[1] < d_.p; ++c[1])
                        for (c[2] = 0; c[2] < d_.p; ++c[2])
                            for (c[3] = 0; c[3] < d_.p; ++c[3])
                                if (!f(wrap(KleinElem(d_.p, c)))) return;
                return;
            }
            case RingKind::matrix: {
                const std::size_t nn = d_.size * d_.size;
                std::vector<long long> digits(nn, 0);
                for (;;) {
                    std::vector<ModularInt> entries;
                    entries.reserve(nn);
                    for (auto v : digits) entries.emplace_back(v, d_.base_modulus);
                    if (!f(wrap(Matrix<ModularInt>::from_entries(d_.size, d_.size,
                                                                 std::move(entries)))))
                        return;
                    std::size_t i = nn;
                    while (i > 0) {
                        --i;
                        if (++digits[i] < d_.base_modulus) break;
                        digits[i] = 0;
                        if (i == 0) return; // odometer wrapped
                    }
                }
            }
            case RingKind::product: {
                bool stop = false;
                factor_->for_each_element([&](const RingElement& u) {
                    factor_->for_each_element([&](const RingElement& v) {
                        if (!f(wrap(ProductValue{{u, v}}))) stop = true;
                        return !stop;
                    });
                    return !stop;
                });
                return;
            }
        }
    }

    std::vector<RingElement> elements() const {
        std::vector<RingElement> out;
        for_each_element([&](const RingElement& e) {
            out.push_back(e);
            return true;
        });
        return out;
    }

private:
    Ring(RingDescriptor d, RingPtr factor) : d_(std::move(d)), factor_(std::move(factor)) {}

    RingElement constant(bool unit) const {
        switch (d_.kind) {
            case RingKind::matrix: {
                switch (d_.base) {
                    case ScalarKind::rational:
                    case ScalarKind::integer: {
                        Rational one(1);
                        auto z = Matrix<Rational>(d_.size, d_.size, Rational());
                        return wrap(unit ? Matrix<Rational>::identity(d_.size, one) : z);
                    }
                    case ScalarKind::gaussian_rational: {
                        GaussianRational one(1);
                        auto z = Matrix<GaussianRational>(d_.size, d_.size, GaussianRational());
                        return wrap(unit ? Matrix<GaussianRational>::identity(d_.size, one) : z);
                    }
                    case ScalarKind::modular: {
                        ModularInt one(1, d_.base_modulus);
                        auto z = Matrix<ModularInt>(d_.size, d_.size, ModularInt(0, d_.base_modulus));
                        return wrap(unit ? Matrix<ModularInt>::identity(d_.size, one) : z);
                    }
                }
                throw InternalError("unreachable");
            }
            case RingKind::modular:
                return wrap(ModularInt(unit ? 1 : 0, d_.modulus));
            case RingKind::group_ring:
                return wrap(KleinElem(d_.p, {unit ? 1 : 0, 0, 0, 0}));
            case RingKind::product: {
                RingElement c = unit ? factor_->one() : factor_->zero();
                return wrap(ProductValue{{c, c}});
            }
        }
        throw InternalError("unreachable");
    }

    RingDescriptor d_;
    RingPtr factor_;
};

// ---------------------------------------------------------------------------
// Element operations
// ---------------------------------------------------------------------------

namespace detail {

inline void require_same_ring(const RingElement& a, const RingElement& b) {
    if (!a.ring || !b.ring || !(a.ring->descriptor() == b.ring->descriptor()))
        throw RingMismatchError("elements belong to different rings");
}

} // namespace detail

inline bool operator==(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    if (a.payload.index() != b.payload.index())
        throw InternalError("payload kind mismatch within one ring");
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                const auto& y = std::get<ProductValue>(b.payload);
                return x.parts[0] == y.parts[0] && x.parts[1] == y.parts[1];
            } else {
                return x == std::get<T>(b.payload);
            }
        },
        a.payload);
}

inline RingElement operator+(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                const auto& y = std::get<ProductValue>(b.payload);
                return a.ring->wrap(
                    ProductValue{{x.parts[0] + y.parts[0], x.parts[1] + y.parts[1]}});
            } else {
                return a.ring->wrap(x + std::get<T>(b.payload));
            }
        },
        a.payload);
}

inline RingElement operator-(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                const auto& y = std::get<ProductValue>(b.payload);
                return a.ring->wrap(
                    ProductValue{{x.parts[0] - y.parts[0], x.parts[1] - y.parts[1]}});
            } else {
                return a.ring->wrap(x - std::get<T>(b.payload));
            }
        },
        a.payload);
}

inline RingElement operator-(const RingElement& a) {
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                return a.ring->wrap(ProductValue{{-x.parts[0], -x.parts[1]}});
            } else {
                return a.ring->wrap(-x);
            }
        },
        a.payload);
}

inline RingElement operator*(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                const auto& y = std::get<ProductValue>(b.payload);
                return a.ring->wrap(
                    ProductValue{{x.parts[0] * y.parts[0], x.parts[1] * y.parts[1]}});
            } else {
                return a.ring->wrap(x * std::get<T>(b.payload));
            }
        },
        a.payload);
}

/// Apply the ring's involution.
inline RingElement star(const RingElement& a) {
    const Involution inv = a.ring->descriptor().involution;
    return std::visit(
        [&](const auto& x) -> RingElement {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                if (inv == Involution::swap)
                    return a.ring->wrap(ProductValue{{star(x.parts[1]), star(x.parts[0])}});
                return a;
            } else if constexpr (std::is_same_v<T, KleinElem>) {
                if (inv == Involution::swap_ab) return a.ring->wrap(x.swapped_ab());
                return a;
            } else if constexpr (std::is_same_v<T, ModularInt>) {
                return a;
            } else {
                return a.ring->wrap(x.starred(inv == Involution::conjugate_transpose));
            }
        },
        a.payload);
}

inline bool is_zero(const RingElement& a) { return a == a.ring->zero(); }

inline RingElement pow(const RingElement& a, unsigned long long t) {
    RingElement acc = a.ring->one();
    RingElement base = a;
    while (t > 0) {
        if (t & 1ULL) acc = acc * base;
        base = base * base;
        t >>= 1ULL;
    }
    return acc;
}

inline bool is_idempotent(const RingElement& a) { return a * a == a; }

/// Canonical display text (matrices as nested rows, residues as digits,
/// group-ring elements like "2e+a", pairs as "(x,y)").
inline std::string element_text(const RingElement& a) {
    return std::visit(
        [&](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ProductValue>) {
                return "(" + element_text(x.parts[0]) + "," + element_text(x.parts[1]) + ")";
            } else {
                return x.to_string();
            }
        },
        a.payload);
}

// ---------------------------------------------------------------------------
// Star-cancellability (exhaustive; finite rings only)
// ---------------------------------------------------------------------------

struct CancelCheck {
    bool cancellable = true;
    std::optional<RingElement> witness; // first x with a*ax = 0 and ax != 0
};

/// Left *-cancellability of a, in difference form: a*ax = 0 must force ax = 0.
inline CancelCheck left_star_cancellable(const RingElement& a) {
    CancelCheck r;
    const RingElement sa = star(a) * a;
    const RingElement z = a.ring->zero();
    a.ring->for_each_element([&](const RingElement& x) {
        if (sa * x == z && !(a * x == z)) {
            r.cancellable = false;
            r.witness = x;
            return false;
        }
        return true;
    });
    return r;
}

inline CancelCheck right_star_cancellable(const RingElement& a) {
    CancelCheck r;
    const RingElement as = a * star(a);
    const RingElement z = a.ring->zero();
    a.ring->for_each_element([&](const RingElement& x) {
        if (x * as == z && !(x * a == z)) {
            r.cancellable = false;
            r.witness = x;
            return false;
        }
        return true;
    });
    return r;
}

/// All idempotents of a finite ring, in enumeration order.
inline std::vector<RingElement> idempotents(const RingPtr& ring) {
    std::vector<RingElement> out;
    ring->for_each_element([&](const RingElement& e) {
        if (is_idempotent(e)) out.push_back(e);
        return true;
    });
    return out;
}

} // namespace ringinv
