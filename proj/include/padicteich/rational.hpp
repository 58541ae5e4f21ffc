#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "padicteich/errors.hpp"

namespace padicteich {

// Exact rational on 64-bit words with 128-bit intermediates. Every value this
// library reports (Haar integrals, valuations in (1/e)Z, log-volume
// coefficients) is a small rational whose denominator is a modest prime
// power, so overflow checking beats arbitrary precision here.
class rational {
public:
    rational() = default;
    rational(std::int64_t n) : num_(n), den_(1) {}
    rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw division_by_zero();
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend rational operator+(const rational& a, const rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw division_by_zero();
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    rational operator-() const { return rational(-num_, den_); }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    // "a/b" with the denominator omitted for integers; round-trippable.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) {
        return os << r.str();
    }

    // p^k for signed k; throws on overflow.
    static rational pow_int(std::int64_t base, int exp) {
        rational r(1);
        rational b = exp >= 0 ? rational(base) : rational(1, base);
        for (int i = 0; i < (exp >= 0 ? exp : -exp); ++i) r *= b;
        return r;
    }

private:
    using i128 = __int128;

    static rational from_i128(i128 n, i128 d) {
        if (d == 0) throw division_by_zero();
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw error("rational overflow (value outside 64-bit range after reduction)");
        rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace padicteich
