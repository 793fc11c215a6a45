#pragma once

#include <map>
#include <utility>

#include "sbf/dist_expr.hpp"

namespace sbfint::detail {

// Exact one-sided diagonal limit bookkeeping: value = a0 + ln2*l2 + ln(r)*lr
// + ln|r-r'|*ld, with `pole` marking a (1-z)^{-k} divergence. For the limits
// the jump extraction needs, finiteness forces l2 = lr = ld = 0.
struct DiagValue {
    Rational a0, l2, lr, ld;
    bool pole = false;

    DiagValue& operator+=(const DiagValue& o) {
        a0 += o.a0;
        l2 += o.l2;
        lr += o.lr;
        ld += o.ld;
        pole = pole || o.pole;
        return *this;
    }
    void scale(const Rational& s) {
        a0 *= s;
        l2 *= s;
        lr *= s;
        ld *= s;
    }
    bool finite_pure() const {
        return !pole && l2.is_zero() && lr.is_zero() && ld.is_zero();
    }
};

// keyed by (total monomial degree pow_r + pow_rp, pi power)
using DiagPoly = std::map<std::pair<long long, int>, DiagValue>;

// z -> 1- limit of a term list (regions ignored), exact.
DiagPoly diag_of_terms(const DistExpr& ctx, const std::vector<Term>& terms);

bool diag_finite_pure(const DiagPoly& p);

}  // namespace sbfint::detail
