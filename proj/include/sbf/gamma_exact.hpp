#pragma once

#include <optional>

#include "sbf/errors.hpp"
#include "sbf/rational.hpp"

namespace sbfint {

// Gamma at half-integer arguments, exactly: Gamma(m/2) = q * sqrt(pi)^s with
// q rational and s in {0,1}. Poles (m/2 a non-positive integer) are reported
// as an empty optional so reciprocals can vanish cleanly.
struct GammaHalf {
    Rational q;
    int sqrtpi = 0;  // 0 or 1

    GammaHalf operator*(const GammaHalf& o) const {
        GammaHalf r{q * o.q, sqrtpi + o.sqrtpi};
        if (r.sqrtpi == 2) {  // sqrt(pi)^2 -> pi handled by caller via pi_pow
            throw std::logic_error("GammaHalf product left un-reduced sqrt(pi)^2");
        }
        return r;
    }
};

// Gamma(twice_arg / 2); std::nullopt at poles.
inline std::optional<GammaHalf> gamma_half_exact(long long twice_arg) {
    if (twice_arg % 2 == 0) {
        long long k = twice_arg / 2;          // Gamma(k), integer argument
        if (k <= 0) return std::nullopt;      // pole
        Rational q(1);
        for (long long i = 2; i < k; ++i) q *= Rational(i);
        return GammaHalf{q, 0};
    }
    // Gamma(k + 1/2) via Gamma(1/2) = sqrt(pi) and the recurrence
    long long m = twice_arg;                  // odd
    Rational q(1);
    if (m > 1) {
        for (long long t = m - 2; t >= 1; t -= 2) q *= Rational(t, 2);
    } else if (m < 1) {
        for (long long t = m; t < 1; t += 2) q /= Rational(t, 2);
    }
    return GammaHalf{q, 1};
}

// Exact value with an explicit pi power: value = q * pi^pi_pow.
struct RationalPi {
    Rational q;
    int pi_pow = 0;
    bool is_zero() const { return q.is_zero(); }
    double to_double() const;
};

// Gamma(a/2) / (Gamma(b/2) * Gamma(c/2)) with pole-in-denominator -> exact zero.
// Poles in the numerator are rejected (never reached in this artifact: a/2 >= 1/2).
inline RationalPi gamma_half_ratio(long long a2, long long b2, long long c2) {
    auto n = gamma_half_exact(a2);
    if (!n) throw PoleAtNonpositiveInteger("gamma ratio with numerator pole");
    auto d1 = gamma_half_exact(b2);
    auto d2 = gamma_half_exact(c2);
    if (!d1 || !d2) return RationalPi{Rational(0), 0};
    int s = n->sqrtpi - d1->sqrtpi - d2->sqrtpi;
    Rational q = n->q / (d1->q * d2->q);
    // s is -2, -1, 0 or 1; odd s never occurs for the coefficient family used here
    if (s % 2 != 0) throw std::logic_error("gamma_half_ratio: stray sqrt(pi)");
    return RationalPi{q, s / 2};
}

inline double RationalPi::to_double() const {
    double v = q.to_double();
    constexpr double kPi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < pi_pow; ++i) v *= kPi;
    for (int i = 0; i > pi_pow; --i) v /= kPi;
    return v;
}

}  // namespace sbfint
