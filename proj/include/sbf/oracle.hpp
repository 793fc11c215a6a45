#pragma once

#include <string>
#include <vector>

#include "sbf/dist_expr.hpp"  // TestFunction

namespace sbfint {

enum class Accel { PartitionEpsilon, DampingRichardson };

struct QuadratureConfig {
    double k_max = 0.0;          // 0 = automatic
    int panels_per_period = 1;   // extra subdivision of each partition panel
    Accel accel = Accel::PartitionEpsilon;
    double tolerance = 1e-6;
    std::vector<double> damping_ladder = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
    int max_panels = 600;
};

struct OracleReport {
    double value = 0.0;
    double error_estimate = 0.0;
    double scale = 0.0;  // partial-sum magnitude; resolution floor of the method
    std::string method;
    int panels = 0;
    bool diverged = false;
};

// Independent numerical value of int_0^inf k^n prod_i j_{orders[i]}(k radii[i]) dk.
// Partition-at-zeros panels accelerated with the epsilon algorithm for
// convergent integrands; damping ladder with Richardson extrapolation to
// eps -> 0 for marginal (Abel-summable) ones. Monotone partial-sum growth is
// reported as divergence, the signature of a distribution-valued integral.
OracleReport oscillatory_integral(const std::vector<int>& orders,
                                  const std::vector<double>& radii, int n,
                                  const QuadratureConfig& cfg);

// int dk k^n j_ell(kr) T_phi(k) with T_phi(k) = int dr' phi(r') j_ellp(kr'):
// the absolutely convergent reordering of the smeared double integral.
double smeared_double(int ell, int ellp, int n, double r, const TestFunction& phi);

}  // namespace sbfint
