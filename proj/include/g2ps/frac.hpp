#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace g2ps {

// Exact rational number with reduced representation (den > 0).
// Magnitudes in this project stay tiny; intermediate products are
// computed in 128-bit and checked before narrowing.
class Frac {
public:
    Frac() : num_(0), den_(1) {}
    Frac(long long n) : num_(n), den_(1) {}
    Frac(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Frac operator-() const { return Frac(-num_, den_, already_reduced{}); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw std::domain_error("Frac: division by zero");
        return Frac(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Frac& a, const Frac& b) {
        i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Representative in [0,1) of this value modulo 1.
    Frac mod_one() const {
        long long r = num_ % den_;
        if (r < 0) r += den_;
        return Frac(r, den_, already_reduced{});
    }

    Frac abs() const { return num_ < 0 ? -*this : *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    struct already_reduced {};
    Frac(long long n, long long d, already_reduced) : num_(n), den_(d) {}

    static long long checked(i128 v) {
        if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
            throw std::overflow_error("Frac: value out of range");
        return static_cast<long long>(v);
    }

    void reduce() {
        if (den_ == 0) throw std::domain_error("Frac: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace g2ps
