#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbf/errors.hpp"
#include "sbf/gamma_exact.hpp"
#include "sbf/rational.hpp"
#include "sbf/specfun.hpp"

namespace sbfint {

// One region factor per term: a Heaviside side or d^m/dr^m delta(r-r').
enum class RegionKind { HeavisidePrimeGreater, HeavisideGreater, DeltaDerivative };

struct RegionFactor {
    RegionKind kind = RegionKind::HeavisidePrimeGreater;
    int delta_order = 0;  // only for DeltaDerivative
};

// coefficient = q * pi^pi_pow
struct ExactCoeff {
    Rational q;
    int pi_pow = 0;
    double to_double() const { return RationalPi{q, pi_pow}.to_double(); }
};

// Primed:   2F1((l+l'+nb+x)/2, (l-l'+nb+y)/2; l + z/2;  (r/r')^2)
// Unprimed: 2F1((l+l'+nb+x)/2, (l'-l+nb+y)/2; l' + z/2; (r'/r)^2)
// Differentiation maps (x,y,z) -> (x+2,y+2,z+2).
enum class HyperOrientation { Primed, Unprimed };

struct HyperDescriptor {
    HyperOrientation orientation = HyperOrientation::Primed;
    int x = 1, y = 0, z = 3;
};

enum class GammaTag { CGammaPrimeGreater, CGammaGreater };

struct Term {
    RegionFactor region;
    ExactCoeff coeff;  // exact c_Gamma value folded in
    std::optional<GammaTag> gamma;
    int pow_r = 0, pow_rp = 0;
    std::optional<HyperDescriptor> hyper;
};

struct DistExpr {
    int ell = 0, ellp = 0;
    int base_n = 0;
    int current_n = 0;
    std::vector<Term> terms;
};

// twice the 2F1 parameters of a kernel, derived from the expression context
struct HyperTwiceParams {
    long long a2, b2, c2;
};
HyperTwiceParams hyper_twice_params(int ell, int ellp, int base_n, const HyperDescriptor& h);
Rational hyper_d_coeff(int ell, int ellp, int base_n, const HyperDescriptor& h);  // ab/c

// Appends coeff * r^pow_r * r'^pow_rp * F? under `region`, expanding
// terminating hypergeometric kernels into monomials and dropping exact zeros.
void append_term(std::vector<Term>& out, int ell, int ellp, int base_n,
                 const RegionFactor& region, const ExactCoeff& coeff,
                 std::optional<GammaTag> gamma, int pow_r, int pow_rp,
                 std::optional<HyperDescriptor> hyper);

// d/dr and d/dr' of a term's (coeff, monomial, kernel) payload; region copied.
std::vector<Term> term_derivative_r(const DistExpr& ctx, const Term& t);
std::vector<Term> term_derivative_rp(const DistExpr& ctx, const Term& t);

// Like-term merge with exact coefficient addition, zero removal and the
// deterministic ordering the JSON output relies on.
DistExpr canonicalize(const DistExpr& expr);

// One ladder step: I^[n] -> I^[n+2] via the Bessel-equation operator in r.
DistExpr apply_D(const DistExpr& expr);

// Heaviside-supported value at an off-diagonal point.
double eval_regular(const DistExpr& expr, double r, double rp);

// Delta-supported content, grouped by derivative order, coefficients
// unevaluated (kernels may only be touched at z=1 when smearing).
struct SingularTerm {
    int delta_order = 0;
    std::vector<Term> coeff_terms;  // region field ignored
};
std::vector<SingularTerm> singular_part(const DistExpr& expr);

// Reduce the singular content to diagonal-canonical form: the coefficient of
// phi^(k)(r) under integration against a test function in r', as exact
// monomials in r. Throws HypergeometricDivergesAtUnity if a kernel lacks a
// finite z=1 value. Used for exact distribution equality checks.
struct DiagMonomial {
    long long pow = 0;
    Rational q;
    int pi_pow = 0;
};
std::vector<std::vector<DiagMonomial>> singular_canonical(const DistExpr& expr);
bool singular_equal(const DistExpr& a, const DistExpr& b);

struct TestFunction {
    double center = 1.0;  // r0
    double width = 0.05;  // sigma (invariant: width < center/3)
    double value(double x) const;
    double derivative(int k, double x) const;
};

// integral over r' of phi(r') I(r, r'): adaptive quadrature of the regular
// part split (and principal-value paired) at r' = r, plus analytic delta
// contributions (d/dr')^m [c phi] at r' = r.
double smear(const DistExpr& expr, const TestFunction& phi, double r);

// Exact scalar value of a delta coefficient term list at (r, r) with kernels
// summed by Gauss's formula; throws HypergeometricDivergesAtUnity otherwise.
double eval_coeff_at_diagonal(const DistExpr& ctx, const std::vector<Term>& coeff_terms, double r);

// JSON wire format (normative field names for the CLI)
std::string dist_expr_to_json(const DistExpr& expr, bool pretty = false);
DistExpr dist_expr_from_json(const std::string& text);

}  // namespace sbfint
