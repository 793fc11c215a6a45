#pragma once

#include <functional>
#include <vector>

namespace sbfint {

// Gauss-Legendre nodes/weights on [-1,1], computed once per order.
struct GaussRule {
    std::vector<double> nodes, weights;
};
const GaussRule& gauss_rule(int n);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

// Adaptive bisection with an embedded GL(16)/GL(32) error estimate.
// Splits at the supplied breakpoints first. Throws NoConvergence if the
// refinement stalls above tolerance.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breakpoints = {},
                          int max_depth = 48);

// Integral over (center-h, center+h) of f with an integrable or odd
// (principal-value) singularity at `center`: geometrically graded panels of
// the symmetrized integrand f(center+t) + f(center-t).
double integrate_paired_singular(const std::function<double(double)>& f, double center,
                                 double h, double rel_tol);

// Polynomial (Neville) extrapolation of (x_i, y_i) to x = 0.
double extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys);

// Damping-ladder extrapolation on the basis {1, e ln e, e, e^2 ln e, e^2, ...}:
// rectified (even-product) integrands contribute e ln e terms that a plain
// polynomial model cannot remove.
double extrapolate_damping_ladder(const std::vector<double>& eps, const std::vector<double>& vals);

// Wynn epsilon-algorithm acceleration of a partial-sum sequence; returns the
// best diagonal estimate and a crude error gauge.
struct WynnResult {
    double value = 0.0;
    double error = 0.0;
};
WynnResult wynn_epsilon(const std::vector<double>& partial_sums);

}  // namespace sbfint
