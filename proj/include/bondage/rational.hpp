#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bondage {

// Exact fraction on int64 with 128-bit intermediates. Always reduced,
// denominator > 0. Throws on overflow instead of silently wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long num) : num_(num) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 g = std::gcd(a.den_, b.den_);
        __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                       static_cast<__int128>(b.num_) * (a.den_ / g);
        __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
        return from128(num, den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
        long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
        __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        return from128(num, den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero rational");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from128(__int128 num, __int128 den) {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        *this = from128(num_, den_);
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace bondage
