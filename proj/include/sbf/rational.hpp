#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "sbf/bigint.hpp"

namespace sbfint {

// Exact rational with BigInt parts, always normalized: den > 0, gcd(num,den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    // r = p/q with q odd is "half-integer valued" iff den is 1 or 2.
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_nonpositive_integer() const { return is_integer() && num_.sign() <= 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-() const { Rational r = *this; r.num_ = -r.num_; return r; }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational pow_int(long long e) const {
        if (e == 0) return Rational(1);
        Rational base = e > 0 ? *this : Rational(den_, num_);
        long long k = e > 0 ? e : -e;
        Rational r(1);
        for (long long i = 0; i < k; ++i) r *= base;
        return r;
    }

    double to_double() const {
        double n = num_.to_double(), d = den_.to_double();
        if (std::isfinite(n) && std::isfinite(d)) return n / d;
        // fall back through a scaled quotient for very large parts
        BigInt q, r;
        BigInt::divmod(num_, den_, q, r);
        return q.to_double() + r.to_double() / d;
    }

    std::string to_string() const {
        if (den_ == BigInt(1)) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational with zero denominator");
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = BigInt::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
};

}  // namespace sbfint
