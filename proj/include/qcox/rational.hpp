#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcox {

// Exact rational arithmetic on 64-bit numerator/denominator, always stored
// reduced with positive denominator. Intermediates go through __int128 and
// any result that does not fit 64 bits throws. All group-theoretic scalars
// in this project come from a fixed finite set (entries of matrices of a
// finite reflection group), so overflow indicates a logic error upstream.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    std::size_t hash() const {
        std::uint64_t h = (std::uint64_t)num_ * 0x9e3779b97f4a7c15ull;
        h ^= (std::uint64_t)den_ + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return (std::size_t)h;
    }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace qcox
