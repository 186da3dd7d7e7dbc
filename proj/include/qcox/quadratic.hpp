#pragma once

#include <string>

#include "qcox/rational.hpp"

namespace qcox {

// Element of Q(sqrt 5), stored as rational_part + surd_part * sqrt(5).
// Crystallographic root systems only ever produce surd_part == 0; the H
// types need the full field (the golden ratio is (1 + sqrt 5)/2).
class QuadraticNumber {
public:
    constexpr QuadraticNumber() = default;
    QuadraticNumber(std::int64_t n) : a_(n) {}
    QuadraticNumber(Rational a) : a_(a) {}
    QuadraticNumber(Rational a, Rational b) : a_(a), b_(b) {}

    static QuadraticNumber sqrt5() { return {Rational(0), Rational(1)}; }
    static QuadraticNumber golden() { return {Rational(1, 2), Rational(1, 2)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
        // (a + b s)(c + d s) = ac + 5bd + (ad + bc) s
        return {x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QuadraticNumber operator-() const { return {-a_, -b_}; }
    QuadraticNumber inverse() const {
        // 1/(a + b s) = (a - b s)/(a^2 - 5 b^2)
        Rational norm = a_ * a_ - Rational(5) * b_ * b_;
        if (norm.is_zero()) throw std::domain_error("QuadraticNumber: inverse of zero");
        return {a_ / norm, -b_ / norm};
    }
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x * y.inverse();
    }
    QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
    QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
    QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) {
        return !(x == y);
    }

    // Sign of the real number a + b*sqrt(5), computed exactly.
    int sign() const {
        if (b_.is_zero()) return a_.sign();
        if (a_.is_zero()) return b_.sign();
        if (a_.sign() > 0 && b_.sign() > 0) return 1;
        if (a_.sign() < 0 && b_.sign() < 0) return -1;
        // opposite signs: compare a^2 with 5 b^2
        Rational a2 = a_ * a_, b25 = Rational(5) * b_ * b_;
        if (a2 == b25) return 0;
        bool a2bigger = b25 < a2;
        return a2bigger ? a_.sign() : b_.sign();
    }
    friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
        return (x - y).sign() < 0;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = b_.str() + "*r5";
        if (a_.is_zero()) return s;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + s;
    }

    std::size_t hash() const { return a_.hash() * 1000003u + b_.hash(); }

private:
    Rational a_;
    Rational b_;
};

}  // namespace qcox
