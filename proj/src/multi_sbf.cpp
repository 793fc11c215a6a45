#include "sbf/multi_sbf.hpp"

#include <cmath>

#include "sbf/quadrature.hpp"

namespace sbfint {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

ReductionTree plan(const MultiSpec& spec) {
    ReductionTree tree;
    std::vector<int> orders = spec.orders;
    int aux_count = 0;
    while (orders.size() > 3) {
        int L = choose_L(orders[0], orders[1]);
        ReductionNode node;
        node.aux = "u" + std::to_string(++aux_count);
        node.pair_a = orders[0];
        node.pair_b = orders[1];
        node.L = L;
        tree.nodes.push_back(node);
        std::vector<int> rest(orders.begin() + 2, orders.end());
        rest.push_back(L);
        orders = std::move(rest);
    }
    tree.leaf_orders = orders;
    return tree;
}

namespace {

double eval_rec(const std::vector<int>& orders, const std::vector<double>& radii, int n,
                double rel_tol, long long& evals) {
    if (orders.size() == 3)
        return reduce_triple(TripleSpec(orders[0], orders[1], orders[2], n), radii[0], radii[1],
                             radii[2], std::max(1e-10, rel_tol * 1e-2))
            .value;
    const int L = choose_L(orders[0], orders[1]);
    std::vector<int> rest_orders(orders.begin() + 2, orders.end());
    rest_orders.push_back(L);
    std::vector<double> rest_radii(radii.begin() + 2, radii.end());
    rest_radii.push_back(0.0);  // slot for u

    BetaWindow w = beta_window(radii[0], radii[1]);
    // the child's value kinks where its delta support enters/leaves its own
    // window; for a triple child that window is set by its first radius pair
    std::vector<double> breaks;
    if (rest_radii.size() >= 2) {
        breaks.push_back(std::fabs(rest_radii[0] - rest_radii[1]));
        breaks.push_back(rest_radii[0] + rest_radii[1]);
    }
    auto f = [&](double u) {
        ++evals;
        rest_radii.back() = u;
        double mehr = mehrem_even_k2(orders[0], orders[1], L, radii[0], radii[1], u);
        if (mehr == 0.0) return 0.0;
        return 2.0 / kPi * u * u * mehr *
               eval_rec(rest_orders, rest_radii, n, rel_tol, evals);
    };
    if (!(w.u_plus > w.u_minus)) return 0.0;
    return adaptive_integrate(f, w.u_minus, w.u_plus, rel_tol, breaks);
}

}  // namespace

MultiResult evaluate_multi(const MultiSpec& spec, double rel_tol) {
    MultiResult res;
    res.tree = plan(spec);
    long long evals = 0;
    res.value = eval_rec(spec.orders, spec.radii, spec.n, rel_tol * 0.2, evals);
    long long evals2 = 0;
    double coarse = eval_rec(spec.orders, spec.radii, spec.n, rel_tol * 2.0, evals2);
    res.error_estimate = std::fabs(res.value - coarse);
    res.evaluations = evals + evals2;
    if (!(res.error_estimate <=
          rel_tol * std::max(1e-12, std::fabs(res.value)) * 50.0))
        throw NoConvergence("evaluate_multi: refinement stalled above tolerance");
    return res;
}

}  // namespace sbfint
