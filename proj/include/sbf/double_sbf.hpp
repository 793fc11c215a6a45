#pragma once

#include "sbf/dist_expr.hpp"

namespace sbfint {

struct DoubleSpec {
    int ell = 0, ellp = 0;
    int n = 0;
    DoubleSpec(int l, int lp, int n_) : ell(l), ellp(lp), n(n_) {
        if (l < 0 || lp < 0) throw std::invalid_argument("orders must be non-negative");
    }
};

// Exact c_Gamma coefficients of the base integrals (value as q * pi^p).
RationalPi cgamma_exact(GammaTag tag, int ell, int ellp, int n);

// The two-branch Heaviside splice of the tabulated base integrals,
// valid for n_base in {0,1}.
DistExpr base_expr(int ell, int ellp, int n_base);

// Same construction at arbitrary n without the validity gate; the regular
// (Heaviside) sector of the direct formulas, used for ladder cross-checks
// and the grid command's direct column.
DistExpr gr_direct_expr(int ell, int ellp, int n);

// base at n mod 2, then (n - n_base)/2 ladder steps; memoized, and optionally
// persisted as JSON under $SBF_CACHE_DIR.
DistExpr closed_form(const DoubleSpec& spec);

struct DoubleEvaluation {
    double regular = 0.0;
    std::vector<SingularTerm> singular;
};
DoubleEvaluation evaluate(const DoubleSpec& spec, double r, double rp);

// (l,r) <-> (l',r') relabeling of an expression: swaps the Heaviside sides,
// monomial exponents and kernel orientations; delta derivatives pick up
// (-1)^m. base_expr(l,lp) == swap_vars(base_expr(lp,l)) exactly.
DistExpr swap_vars(const DistExpr& expr);

}  // namespace sbfint
