#pragma once

#include <vector>

#include "sbf/errors.hpp"
#include "sbf/gamma_exact.hpp"
#include "sbf/rational.hpp"

namespace sbfint {

// Non-negative SBF order.
struct Order {
    int value = 0;
    explicit Order(int v) : value(v) {
        if (v < 0) throw std::invalid_argument("Order must be non-negative");
    }
};

struct Hyper2F1Params {
    Rational a, b, c;
    double z = 0.0;  // in [0,1)
};

// Spherical Bessel function of the first kind j_ell(x), x >= 0.
// Upward recurrence for x > ell, downward (Miller) recurrence normalized by
// j0 for x <= ell.
double sbf(Order ell, double x);

// Large-argument form sin(x - ell*pi/2)/x; used by the oracle's
// zero partitioning.
double sbf_asymptotic(Order ell, double x);

// log |Gamma(twice_arg/2)|; throws PoleAtNonpositiveInteger at poles.
double log_gamma_half(long long twice_arg);

// 1/Gamma(twice_arg/2); exactly 0 at poles (signed elsewhere).
double recip_gamma_half(long long twice_arg);

// Gauss hypergeometric 2F1(a,b;c;z) for exact rational parameters, z in [0,1).
// Terminates exactly when a or b is a non-positive integer; above z_switch the
// 1-z connection formulas are used (logarithmic variant when c-a-b is an
// integer, which is the generic situation for this artifact's kernels).
double hyp2f1(const Hyper2F1Params& p);

// 3F2(a,b,d; c,e; z) by direct series, tail bound 1e-12, cap 1e5 terms.
double hyp3f2(const Rational& a, const Rational& b, const Rational& d,
              const Rational& c, const Rational& e, double z);

// Legendre polynomial P_ell(x), |x| <= 1, three-term recurrence.
double legendre_p(Order ell, double x);

namespace detail {
// Series/limits shared with the exact diagonal evaluation in dist_algebra.
double hyp2f1_series(double a, double b, double c, double z, int max_terms = 100000);
double digamma(double x);
// hyp2f1 with w = 1-z supplied separately; callers near z = 1 compute w
// without cancellation (e.g. from |r-r'| directly)
double hyp2f1_w(const Hyper2F1Params& p, double w);
}  // namespace detail

}  // namespace sbfint
