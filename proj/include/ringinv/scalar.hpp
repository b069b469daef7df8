#pragma once

/// Tagged exact scalar (rational | gaussian rational | residue) plus the exact
/// text syntax shared by element files and the CLI:
///
///   rational          "p" or "p/q"
///   gaussian rational "a+bi", "a-bi", "bi", "a", with rational a, b ("i" for b = 1)
///   residue           decimal digits, reduced modulo the ring's modulus
///
/// Parsing is exact; malformed text raises ParseError with the byte position.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gaussian.hpp"
#include "modular.hpp"
#include "rational.hpp"

namespace ringinv {

using ExactScalar = std::variant<Rational, GaussianRational, ModularInt>;

namespace detail {

inline void require_same_kind(const ExactScalar& x, const ExactScalar& y) {
    if (x.index() != y.index())
        throw IncompatibleScalarsError("scalar kind mismatch");
}

} // namespace detail

inline ExactScalar scalar_add(const ExactScalar& x, const ExactScalar& y) {
    detail::require_same_kind(x, y);
    return std::visit(
        [&](const auto& a) -> ExactScalar {
            using T = std::decay_t<decltype(a)>;
            return a + std::get<T>(y);
        },
        x);
}

inline ExactScalar scalar_mul(const ExactScalar& x, const ExactScalar& y) {
    detail::require_same_kind(x, y);
    return std::visit(
        [&](const auto& a) -> ExactScalar {
            using T = std::decay_t<decltype(a)>;
            return a * std::get<T>(y);
        },
        x);
}

inline std::optional<ExactScalar> scalar_inverse(const ExactScalar& x) {
    return std::visit(
        [](const auto& a) -> std::optional<ExactScalar> {
            auto inv = a.inverse();
            if (!inv) return std::nullopt;
            return ExactScalar(*inv);
        },
        x);
}

inline ExactScalar scalar_conj(const ExactScalar& x) {
    return std::visit([](const auto& a) -> ExactScalar { return a.star(); }, x);
}

inline std::string scalar_to_string(const ExactScalar& x) {
    return std::visit([](const auto& a) { return a.to_string(); }, x);
}

// ---------------------------------------------------------------------------
// Text parsing
// ---------------------------------------------------------------------------

namespace detail {

inline Int scan_digits(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw ParseError("expected digits", start);
    return Int(std::string(s.substr(start, i - start)));
}

/// digits ['/' digits], no sign.
inline Rational scan_unsigned_rational(std::string_view s, std::size_t& i) {
    Int num = scan_digits(s, i);
    if (i < s.size() && s[i] == '/') {
        ++i;
        Int den = scan_digits(s, i);
        if (den == 0) throw ParseError("zero denominator", i - 1);
        return Rational(num, den);
    }
    return Rational(num);
}

} // namespace detail

inline Rational parse_rational_text(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    Rational r = detail::scan_unsigned_rational(s, i);
    if (i != s.size()) throw ParseError("trailing characters after rational", i);
    return neg ? -r : r;
}

/// Integer-only form "p" (used by matrix rings over the integers).
inline Int parse_integer_text(std::string_view s) {
    Rational r = parse_rational_text(s);
    if (!r.is_integral())
        throw ParseError("expected an integer, got " + r.to_string(), 0);
    return r.numerator();
}

inline GaussianRational parse_gaussian_text(std::string_view s) {
    std::size_t i = 0;
    std::optional<Rational> re, im;
    bool first = true;
    while (i < s.size()) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }
        Rational mag;
        bool imag_term;
        if (i < s.size() && s[i] == 'i') {
            mag = Rational(1);
            imag_term = true;
            ++i;
        } else {
            std::size_t term_start = i;
            mag = detail::scan_unsigned_rational(s, i);
            imag_term = i < s.size() && s[i] == 'i';
            if (imag_term) ++i;
            (void)term_start;
        }
        if (neg) mag = -mag;
        if (imag_term) {
            if (im) throw ParseError("duplicate imaginary term", i);
            im = mag;
        } else {
            if (re) throw ParseError("duplicate real term", i);
            re = mag;
        }
        first = false;
    }
    if (!re && !im) throw ParseError("empty gaussian rational", 0);
    return {re.value_or(Rational()), im.value_or(Rational())};
}

inline ModularInt parse_residue_text(std::string_view s, long long modulus) {
    std::size_t i = 0;
    Int v = detail::scan_digits(s, i);
    if (i != s.size()) throw ParseError("trailing characters after residue", i);
    Int r = v % modulus;
    return {static_cast<long long>(r), modulus};
}

} // namespace ringinv
