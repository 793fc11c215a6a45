#pragma once

#include <functional>

#include "sbf/dist_expr.hpp"
#include "sbf/double_sbf.hpp"

namespace sbfint {

struct TripleSpec {
    int ell1 = 0, ell2 = 0, ell3 = 0;
    int n = 2;
    TripleSpec(int l1, int l2, int l3, int n_) : ell1(l1), ell2(l2), ell3(l3), n(n_) {
        if (l1 < 0 || l2 < 0 || l3 < 0) throw std::invalid_argument("orders must be non-negative");
        if (n_ < 2) throw std::invalid_argument("triple reduction requires n >= 2");
    }
};

struct BetaWindow {
    double u_minus = 0.0, u_plus = 0.0;
    double r1 = 0.0, r2 = 0.0;
    double delta_of(double u) const { return (r1 * r1 + r2 * r2 - u * u) / (2 * r1 * r2); }
};
BetaWindow beta_window(double r1, double r2);

struct TripleResult {
    double value = 0.0;
    bool delta_supported = false;  // the middle integral carries delta terms
    bool triangle_ok = false;      // u- < r3 < u+
    double u_minus = 0.0, u_plus = 0.0;
    int L = 0;
    int terms_regular = 0, terms_singular = 0;
};

// smallest L with l1 + l2 + L even (spans [|l1-l2|, l1+l2] trivially)
int choose_L(int ell1, int ell2);

// Mehrem's even-sum k^2 formula for int k^2 dk j_l1(kr1) j_l2(kr2) j_L(ku),
// including the beta window factor (half-weight exactly on the edges).
// Throws OddSumUnsupported / NonTriangularOrders.
double mehrem_even_k2(int ell1, int ell2, int L, double r1, double r2, double u);

// antiderivative of z^(alpha-1) 2F1(a,b;c;z): z^alpha/alpha * 3F2(a,b,alpha;c,alpha+1;z)
struct HyperAntiderivative {
    Rational alpha, a, b, c;
    double operator()(double z) const;
};
HyperAntiderivative hyper_powerlaw_antiderivative(const Rational& alpha, const Rational& a,
                                                  const Rational& b, const Rational& c);

// delta-insertion reduction: inner Mehrem k^2 integral, middle double-SBF
// closed form, outer u quadrature over the beta window with delta handling.
TripleResult reduce_triple(const TripleSpec& spec, double r1, double r2, double r3,
                           double rel_tol = 1e-10);

// pinned closed form for (0,0,1|n=2): [A(u+)-A(u-)]/(2 r1 r2) with
// A(u) = (u/r3^2) arctanh(min(u,r3)/max(u,r3)).
double reference_001_n2(double r1, double r2, double r3);

}  // namespace sbfint
