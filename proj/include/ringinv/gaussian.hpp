#pragma once

/// Gaussian rational scalar a + bi with exact rational components. The star
/// operation is complex conjugation, which backs the conjugate-transpose
/// matrix involution.

#include <optional>
#include <string>

#include "rational.hpp"

namespace ringinv {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long long re) : re_(re) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    bool operator==(const GaussianRational& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::optional<GaussianRational> inverse() const {
        // Norm re^2 + im^2 vanishes only at zero over the rationals.
        if (is_zero()) return std::nullopt;
        Rational n = re_ * re_ + im_ * im_;
        Rational ninv = *n.inverse();
        return GaussianRational{re_ * ninv, -im_ * ninv};
    }

    GaussianRational star() const { return {re_, -im_}; }

    GaussianRational zero_like() const { return {}; }
    GaussianRational one_like() const { return {Rational(1), Rational()}; }
    bool is_field() const { return true; }

    std::string to_string() const {
        if (im_.is_zero()) return re_.to_string();
        std::string im;
        if (im_.is_one()) im = "i";
        else if (im_ == Rational(-1)) im = "-i";
        else im = im_.to_string() + "i";
        if (re_.is_zero()) return im;
        if (im.front() != '-') return re_.to_string() + "+" + im;
        return re_.to_string() + im;
    }

private:
    Rational re_;
    Rational im_;
};

} // namespace ringinv
