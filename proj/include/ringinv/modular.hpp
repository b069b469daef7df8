#pragma once

/// Residue scalar: an integer value reduced modulo a runtime modulus >= 2.
/// The modulus travels with the value; mixing moduli is an error. No primality
/// is assumed by the type itself -- field-only algorithms check is_field().

#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"

namespace ringinv {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class ModularInt {
public:
    ModularInt(long long value, long long modulus) : mod_(modulus) {
        if (modulus < 2) throw Error("modulus must be >= 2");
        v_ = value % modulus;
        if (v_ < 0) v_ += modulus;
    }

    long long value() const { return v_; }
    long long modulus() const { return mod_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    ModularInt operator+(const ModularInt& o) const {
        check(o);
        return {v_ + o.v_, mod_};
    }
    ModularInt operator-(const ModularInt& o) const {
        check(o);
        return {v_ - o.v_, mod_};
    }
    ModularInt operator*(const ModularInt& o) const {
        check(o);
        return {v_ * o.v_, mod_};
    }
    ModularInt operator-() const { return {-v_, mod_}; }
    bool operator==(const ModularInt& o) const {
        check(o);
        return v_ == o.v_;
    }
    bool operator!=(const ModularInt& o) const { return !(*this == o); }

    /// Multiplicative inverse via the extended Euclidean algorithm; nullopt
    /// when the value is not a unit.
    std::optional<ModularInt> inverse() const {
        long long r0 = mod_, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1;
            long long s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (r0 != 1) return std::nullopt;
        return ModularInt{s0, mod_};
    }

    ModularInt star() const { return *this; }

    ModularInt zero_like() const { return {0, mod_}; }
    ModularInt one_like() const { return {1, mod_}; }
    bool is_field() const { return is_prime(mod_); }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check(const ModularInt& o) const {
        if (mod_ != o.mod_)
            throw IncompatibleScalarsError("modulus mismatch: " + std::to_string(mod_) +
                                           " vs " + std::to_string(o.mod_));
    }

    long long v_;
    long long mod_;
};

} // namespace ringinv
