#pragma once

#include <array>
#include <cmath>

#include "sbf/rational.hpp"

namespace sbfint {

struct WignerTriple {
    int j1 = 0, j2 = 0, j3 = 0;
};

inline bool triangle_ok(int a, int b, int c) {
    return c >= std::abs(a - b) && c <= a + b;
}

// sign * sqrt(radicand), the closed form exact Wigner values live in.
struct SqrtRational {
    int sign = 0;            // -1, 0, +1
    Rational radicand;       // >= 0; the square of the value

    static SqrtRational zero() { return {0, Rational(0)}; }
    static SqrtRational from_rational(const Rational& q) {
        return {q.sign(), q * q};
    }
    SqrtRational operator*(const SqrtRational& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {sign * o.sign, radicand * o.radicand};
    }
    SqrtRational inverse() const {
        if (sign == 0) throw std::domain_error("SqrtRational: inverse of zero");
        return {sign, Rational(1) / radicand};
    }
    double to_double() const { return sign * std::sqrt(radicand.to_double()); }
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign == b.sign && (a.sign == 0 || a.radicand == b.radicand);
    }
};

// (j1 j2 j3; 0 0 0), exact; zero for odd total or broken triangle.
SqrtRational wigner3j_zero(const WignerTriple& t);

// {j1 j2 j3; j4 j5 j6} by the Racah single-sum formula with exact factorials;
// zero when any of the four triads is non-triangular.
SqrtRational wigner6j(const std::array<int, 6>& js);

}  // namespace sbfint
