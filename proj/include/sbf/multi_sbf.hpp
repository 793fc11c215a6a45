#pragma once

#include <string>
#include <vector>

#include "sbf/triple_sbf.hpp"

namespace sbfint {

struct MultiSpec {
    std::vector<int> orders;
    std::vector<double> radii;
    int n = 2;
    MultiSpec(std::vector<int> o, std::vector<double> r, int n_)
        : orders(std::move(o)), radii(std::move(r)), n(n_) {
        if (orders.size() != radii.size())
            throw std::invalid_argument("orders/radii length mismatch");
        if (orders.size() < 4) throw std::invalid_argument("multi reduction needs N >= 4");
        if (orders.size() > 8) throw std::invalid_argument("N > 8 unsupported (documented cap)");
        if (n < 2) throw std::invalid_argument("multi reduction requires n >= 2");
    }
};

// one delta insertion: the auxiliary (L_i, u_i) carried by the paired factors
struct ReductionNode {
    std::string aux;      // u1, u2, ...
    int pair_a = 0, pair_b = 0;  // orders paired off at this split
    int L = 0;
};

// left-to-right pairing; exactly N-3 auxiliaries, a single triple leaf
struct ReductionTree {
    std::vector<ReductionNode> nodes;
    std::vector<int> leaf_orders;  // three orders, trailing ones auxiliary L's
};

ReductionTree plan(const MultiSpec& spec);

struct MultiResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long long evaluations = 0;
    ReductionTree tree;
};

// nested outer quadratures over the finite auxiliary supports, triple leaves
MultiResult evaluate_multi(const MultiSpec& spec, double rel_tol = 1e-6);

}  // namespace sbfint
