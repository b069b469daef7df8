#pragma once

/// Exact rational scalar. Always in lowest terms with a positive denominator;
/// zero is uniquely 0/1. Backed by an arbitrary-precision integer type so that
/// intermediate elimination entries never overflow or round.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "errors.hpp"

namespace ringinv {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    explicit Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = num;
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integral() const { return denominator() == 1; }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator-() const { return Rational(-v_); }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::optional<Rational> inverse() const {
        if (is_zero()) return std::nullopt;
        return Rational(boost::multiprecision::cpp_rational(1) / v_);
    }

    /// The involution on the base field: identity for rationals.
    Rational star() const { return *this; }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    bool is_field() const { return true; }

    std::string to_string() const {
        std::string s = numerator().str();
        if (denominator() != 1) s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}

    boost::multiprecision::cpp_rational v_; // normalized by construction
};

} // namespace ringinv
