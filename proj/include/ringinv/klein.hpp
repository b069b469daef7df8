#pragma once

/// Group-ring element over the Klein four-group {e,a,b,c} with coefficients in
/// a prime field F_p. The group table is fixed: every non-identity element has
/// order two and the product of two distinct non-identity elements is the
/// third (index XOR). The star operation optionally swaps the a and b
/// coefficients (coefficientwise involution with the group automorphism a<->b).

#include <array>
#include <cstddef>
#include <string>

#include "errors.hpp"

namespace ringinv {

class KleinElem {
public:
    KleinElem(long long p, std::array<long long, 4> coeffs) : p_(p) {
        if (p < 2) throw Error("coefficient modulus must be >= 2");
        for (std::size_t i = 0; i < 4; ++i) {
            long long v = coeffs[i] % p;
            c_[i] = v < 0 ? v + p : v;
        }
    }

    long long modulus() const { return p_; }
    long long coeff(std::size_t i) const { return c_[i]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    KleinElem operator+(const KleinElem& o) const {
        check(o);
        return {p_, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]}};
    }
    KleinElem operator-(const KleinElem& o) const {
        check(o);
        return {p_, {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]}};
    }
    KleinElem operator-() const { return {p_, {-c_[0], -c_[1], -c_[2], -c_[3]}}; }

    KleinElem operator*(const KleinElem& o) const {
        check(o);
        std::array<long long, 4> r{0, 0, 0, 0};
        for (std::size_t i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) {
                if (o.c_[j] == 0) continue;
                r[i ^ j] = (r[i ^ j] + c_[i] * o.c_[j]) % p_;
            }
        }
        return {p_, r};
    }

    bool operator==(const KleinElem& o) const {
        check(o);
        return c_ == o.c_;
    }
    bool operator!=(const KleinElem& o) const { return !(*this == o); }

    KleinElem swapped_ab() const { return {p_, {c_[0], c_[2], c_[1], c_[3]}}; }

    /// Display form like "2e+a" with terms in the order e, a, b, c.
    std::string to_string() const {
        static const char* names[4] = {"e", "a", "b", "c"};
        std::string s;
        for (std::size_t i = 0; i < 4; ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (c_[i] != 1) s += std::to_string(c_[i]);
            s += names[i];
        }
        return s.empty() ? "0" : s;
    }

private:
    void check(const KleinElem& o) const {
        if (p_ != o.p_) throw IncompatibleScalarsError("coefficient modulus mismatch");
    }

    long long p_;
    std::array<long long, 4> c_{0, 0, 0, 0}; // indexed by (e, a, b, c)
};

} // namespace ringinv
