#include "sbf/dist_expr.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "diag_internal.hpp"
#include "sbf/quadrature.hpp"

namespace sbfint {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr size_t kTermGuardrail = 10000;

double pow_int(double x, long long e) {
    double r = 1.0, b = e > 0 ? x : 1.0 / x;
    for (long long k = e > 0 ? e : -e; k > 0; --k) r *= b;
    return r;
}
}  // namespace

HyperTwiceParams hyper_twice_params(int ell, int ellp, int base_n, const HyperDescriptor& h) {
    if (h.orientation == HyperOrientation::Primed)
        return {ell + ellp + base_n + h.x, ell - ellp + base_n + h.y, 2ll * ell + h.z};
    return {ell + ellp + base_n + h.x, ellp - ell + base_n + h.y, 2ll * ellp + h.z};
}

Rational hyper_d_coeff(int ell, int ellp, int base_n, const HyperDescriptor& h) {
    auto p = hyper_twice_params(ell, ellp, base_n, h);
    return Rational(p.a2) * Rational(p.b2) / (Rational(2) * Rational(p.c2));
}

void append_term(std::vector<Term>& out, int ell, int ellp, int base_n,
                 const RegionFactor& region, const ExactCoeff& coeff,
                 std::optional<GammaTag> gamma, int pow_r, int pow_rp,
                 std::optional<HyperDescriptor> hyper) {
    if (coeff.q.is_zero()) return;
    if (hyper) {
        auto p = hyper_twice_params(ell, ellp, base_n, *hyper);
        const bool a_term = p.a2 <= 0 && p.a2 % 2 == 0;
        const bool b_term = p.b2 <= 0 && p.b2 % 2 == 0;
        if (a_term || b_term) {
            // terminating kernel: expand into monomials in the squared ratio
            long long jmax = -1;
            if (a_term) jmax = -p.a2 / 2;
            if (b_term && (jmax < 0 || -p.b2 / 2 < jmax)) jmax = -p.b2 / 2;
            Rational cj(1);
            for (long long j = 0; j <= jmax; ++j) {
                if (!cj.is_zero()) {
                    int dr = (hyper->orientation == HyperOrientation::Primed) ? 2 * (int)j : -2 * (int)j;
                    Term t;
                    t.region = region;
                    t.coeff = {coeff.q * cj, coeff.pi_pow};
                    t.gamma = gamma;
                    t.pow_r = pow_r + dr;
                    t.pow_rp = pow_rp - dr;
                    out.push_back(std::move(t));
                }
                cj *= Rational(p.a2 + 2 * j) * Rational(p.b2 + 2 * j) /
                      (Rational(2) * Rational(p.c2 + 2 * j) * Rational(j + 1));
            }
            return;
        }
    }
    Term t;
    t.region = region;
    t.coeff = coeff;
    t.gamma = gamma;
    t.pow_r = pow_r;
    t.pow_rp = pow_rp;
    t.hyper = hyper;
    out.push_back(std::move(t));
}

namespace {

// d/dr or d/dr' of the payload, region preserved
std::vector<Term> term_derivative(const DistExpr& ctx, const Term& t, bool wrt_r) {
    std::vector<Term> out;
    const int mono_pow = wrt_r ? t.pow_r : t.pow_rp;
    if (mono_pow != 0) {
        ExactCoeff c{t.coeff.q * Rational(mono_pow), t.coeff.pi_pow};
        append_term(out, ctx.ell, ctx.ellp, ctx.base_n, t.region, c, t.gamma,
                    t.pow_r - (wrt_r ? 1 : 0), t.pow_rp - (wrt_r ? 0 : 1), t.hyper);
    }
    if (t.hyper) {
        Rational d = hyper_d_coeff(ctx.ell, ctx.ellp, ctx.base_n, *t.hyper);
        HyperDescriptor up{t.hyper->orientation, t.hyper->x + 2, t.hyper->y + 2, t.hyper->z + 2};
        int dr, drp;
        Rational chain;
        if (t.hyper->orientation == HyperOrientation::Primed) {
            // z = (r/r')^2: dz/dr = 2 r / r'^2, dz/dr' = -2 r^2 / r'^3
            if (wrt_r) { chain = Rational(2); dr = 1; drp = -2; }
            else       { chain = Rational(-2); dr = 2; drp = -3; }
        } else {
            // w = (r'/r)^2: dw/dr = -2 r'^2 / r^3, dw/dr' = 2 r' / r^2
            if (wrt_r) { chain = Rational(-2); dr = -3; drp = 2; }
            else       { chain = Rational(2); dr = -2; drp = 1; }
        }
        ExactCoeff c{t.coeff.q * d * chain, t.coeff.pi_pow};
        append_term(out, ctx.ell, ctx.ellp, ctx.base_n, t.region, c, t.gamma,
                    t.pow_r + dr, t.pow_rp + drp, up);
    }
    return out;
}

std::tuple<int, int, long long, long long, int, int, int, int, int, int>
term_sort_key(const Term& t) {
    int region_rank = t.region.kind == RegionKind::HeavisidePrimeGreater ? 0
                    : t.region.kind == RegionKind::HeavisideGreater      ? 1
                                                                         : 2 + t.region.delta_order;
    int has_h = t.hyper ? 1 : 0;
    int orient = t.hyper && t.hyper->orientation == HyperOrientation::Unprimed ? 1 : 0;
    int hx = t.hyper ? t.hyper->x : 0, hy = t.hyper ? t.hyper->y : 0, hz = t.hyper ? t.hyper->z : 0;
    int g = t.gamma ? (*t.gamma == GammaTag::CGammaPrimeGreater ? 1 : 2) : 0;
    return {region_rank, has_h, t.pow_r, t.pow_rp, orient, hx, hy, hz, g, t.coeff.pi_pow};
}

}  // namespace

std::vector<Term> term_derivative_r(const DistExpr& ctx, const Term& t) {
    return term_derivative(ctx, t, true);
}
std::vector<Term> term_derivative_rp(const DistExpr& ctx, const Term& t) {
    return term_derivative(ctx, t, false);
}

DistExpr canonicalize(const DistExpr& expr) {
    DistExpr out = expr;
    std::sort(out.terms.begin(), out.terms.end(),
              [](const Term& a, const Term& b) { return term_sort_key(a) < term_sort_key(b); });
    std::vector<Term> merged;
    for (const Term& t : out.terms) {
        if (t.coeff.q.is_zero()) continue;
        if (!merged.empty() && term_sort_key(merged.back()) == term_sort_key(t) &&
            merged.back().gamma == t.gamma) {
            merged.back().coeff.q += t.coeff.q;
            if (merged.back().coeff.q.is_zero()) merged.pop_back();
            continue;
        }
        merged.push_back(t);
    }
    out.terms = std::move(merged);
    if (out.terms.size() > kTermGuardrail)
        throw std::runtime_error("canonicalize: term count exceeds guardrail (canonicalization failure?)");
    return out;
}

double eval_regular(const DistExpr& expr, double r, double rp) {
    if (!(r > 0) || !(rp > 0)) throw std::domain_error("eval_regular: radii must be positive");
    if (r == rp) throw DiagonalPoint("eval_regular: r = r' excluded");
    const bool prime_greater = rp > r;
    const double lo = std::min(r, rp), hi = std::max(r, rp);
    const double z = (lo / hi) * (lo / hi);
    // 1-z from the radii directly; near the diagonal the naive 1-z cancels
    const double w = (hi - lo) * (hi + lo) / (hi * hi);
    double sum = 0.0;
    for (const Term& t : expr.terms) {
        if (t.region.kind == RegionKind::DeltaDerivative) continue;
        if ((t.region.kind == RegionKind::HeavisidePrimeGreater) != prime_greater) continue;
        double v = t.coeff.to_double() * pow_int(r, t.pow_r) * pow_int(rp, t.pow_rp);
        if (t.hyper) {
            auto p = hyper_twice_params(expr.ell, expr.ellp, expr.base_n, *t.hyper);
            v *= detail::hyp2f1_w({Rational(p.a2, 2), Rational(p.b2, 2), Rational(p.c2, 2), z}, w);
        }
        sum += v;
    }
    return sum;
}

std::vector<SingularTerm> singular_part(const DistExpr& expr) {
    std::vector<SingularTerm> out;
    for (const Term& t : expr.terms) {
        if (t.region.kind != RegionKind::DeltaDerivative) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const SingularTerm& s) {
            return s.delta_order == t.region.delta_order;
        });
        if (it == out.end()) {
            out.push_back({t.region.delta_order, {}});
            it = out.end() - 1;
        }
        it->coeff_terms.push_back(t);
    }
    std::sort(out.begin(), out.end(),
              [](const SingularTerm& a, const SingularTerm& b) { return a.delta_order < b.delta_order; });
    return out;
}

namespace detail {

namespace {

// psi(m/2) + EulerGamma as q + l2 * ln2 (exact); poles never reached for the
// non-terminating kernels this is called on.
struct PsiVal {
    Rational q;
    Rational l2;
};
PsiVal psi_half_noeuler(long long twice_arg) {
    if (twice_arg % 2 == 0) {
        long long k = twice_arg / 2;
        if (k <= 0) throw std::logic_error("psi at non-positive integer");
        Rational h(0);
        for (long long j = 1; j < k; ++j) h += Rational(1, j);
        return {h, Rational(0)};
    }
    // psi(1/2) = -gamma - 2 ln 2; step with psi(x+1) = psi(x) + 1/x
    Rational q(0);
    long long m = twice_arg;
    while (m > 1) { m -= 2; q += Rational(2, m); }       // down to 1/2 from above
    while (m < 1) { q -= Rational(2, m); m += 2; }       // up to 1/2 from below
    return {q, Rational(-2)};
}

struct F1Limit {
    DiagValue v;
    int pi_pow = 0;
};

// z -> 1- limit of a (non-terminating) kernel
F1Limit kernel_limit_at_one(const HyperTwiceParams& p) {
    const long long s2 = p.c2 - p.a2 - p.b2;
    F1Limit out;
    if (s2 % 2 != 0) {  // non-integer c-a-b: never generated by the ladder family
        out.v.pole = true;
        return out;
    }
    const long long s = s2 / 2;
    if (s >= 1) {
        // Gauss: Gamma(c) Gamma(s) / (Gamma(c-a) Gamma(c-b)); denominator pole -> 0
        auto gc = gamma_half_exact(p.c2);
        auto gs = gamma_half_exact(2 * s);
        auto gca = gamma_half_exact(p.c2 - p.a2);
        auto gcb = gamma_half_exact(p.c2 - p.b2);
        if (!gc || !gs) throw std::logic_error("kernel_limit_at_one: numerator pole");
        if (!gca || !gcb) return out;  // exact zero
        int sq = gc->sqrtpi + gs->sqrtpi - gca->sqrtpi - gcb->sqrtpi;
        if (sq % 2 != 0) throw std::logic_error("kernel_limit_at_one: stray sqrt(pi)");
        out.v.a0 = gc->q * gs->q / (gca->q * gcb->q);
        out.pi_pow = sq / 2;
        return out;
    }
    if (s == 0) {
        // F ~ -L ln(1-z) + L(2 psi(1) - psi(a) - psi(b)),
        // ln(1-z) -> ln|r-r'| + ln 2 - ln r on the diagonal
        auto gc = gamma_half_exact(p.c2);
        auto ga = gamma_half_exact(p.a2);
        auto gb = gamma_half_exact(p.b2);
        if (!gc) throw std::logic_error("kernel_limit_at_one: numerator pole");
        if (!ga || !gb) throw std::logic_error("kernel_limit_at_one: terminating slipped through");
        int sq = gc->sqrtpi - ga->sqrtpi - gb->sqrtpi;
        if (sq % 2 != 0) throw std::logic_error("kernel_limit_at_one: stray sqrt(pi)");
        Rational L = gc->q / (ga->q * gb->q);
        PsiVal pa = psi_half_noeuler(p.a2);
        PsiVal pb = psi_half_noeuler(p.b2);
        out.v.a0 = L * (-(pa.q + pb.q));
        out.v.l2 = L * (-(pa.l2 + pb.l2) - Rational(1));
        out.v.lr = L;
        out.v.ld = -L;
        out.pi_pow = sq / 2;
        return out;
    }
    out.v.pole = true;  // (1-z)^{c-a-b} blow-up
    return out;
}

}  // namespace

DiagPoly diag_of_terms(const DistExpr& ctx, const std::vector<Term>& terms) {
    DiagPoly poly;
    for (const Term& t : terms) {
        DiagValue v;
        int p = t.coeff.pi_pow;
        if (t.hyper) {
            F1Limit lim = kernel_limit_at_one(hyper_twice_params(ctx.ell, ctx.ellp, ctx.base_n, *t.hyper));
            v = lim.v;
            p += lim.pi_pow;
            if (!v.pole) v.scale(t.coeff.q);
        } else {
            v.a0 = t.coeff.q;
        }
        poly[{(long long)t.pow_r + t.pow_rp, p}] += v;
    }
    // drop exact-zero buckets
    for (auto it = poly.begin(); it != poly.end();) {
        const DiagValue& v = it->second;
        if (!v.pole && v.a0.is_zero() && v.l2.is_zero() && v.lr.is_zero() && v.ld.is_zero())
            it = poly.erase(it);
        else
            ++it;
    }
    return poly;
}

bool diag_finite_pure(const DiagPoly& p) {
    for (const auto& [key, v] : p)
        if (!v.finite_pure()) return false;
    return true;
}

}  // namespace detail

double eval_coeff_at_diagonal(const DistExpr& ctx, const std::vector<Term>& coeff_terms, double r) {
    detail::DiagPoly poly = detail::diag_of_terms(ctx, coeff_terms);
    if (!detail::diag_finite_pure(poly))
        throw HypergeometricDivergesAtUnity(
            "delta coefficient has no finite z=1 value (Gauss condition fails)");
    double sum = 0.0;
    for (const auto& [key, v] : poly)
        sum += RationalPi{v.a0, key.second}.to_double() * pow_int(r, key.first);
    return sum;
}

std::vector<std::vector<DiagMonomial>> singular_canonical(const DistExpr& expr) {
    auto sing = singular_part(expr);
    int max_m = 0;
    for (const auto& s : sing) max_m = std::max(max_m, s.delta_order);
    std::vector<detail::DiagPoly> canon(max_m + 1);
    for (const auto& s : sing) {
        const int m = s.delta_order;
        // d^j/dr'^j of the coefficient, j = 0..m, feeding phi^(m-j)
        std::vector<Term> cur = s.coeff_terms;
        Rational binom(1);
        for (int j = 0; j <= m; ++j) {
            detail::DiagPoly poly = detail::diag_of_terms(expr, cur);
            if (!detail::diag_finite_pure(poly))
                throw HypergeometricDivergesAtUnity(
                    "singular_canonical: kernel diverges at z=1");
            for (auto& [key, v] : poly) {
                v.scale(binom);
                canon[m - j][key] += v;
            }
            if (j < m) {
                std::vector<Term> next;
                for (const Term& t : cur) {
                    auto d = term_derivative_rp(expr, t);
                    next.insert(next.end(), d.begin(), d.end());
                }
                cur = std::move(next);
                binom *= Rational(m - j) / Rational(j + 1);
            }
        }
    }
    std::vector<std::vector<DiagMonomial>> out(canon.size());
    for (size_t k = 0; k < canon.size(); ++k)
        for (const auto& [key, v] : canon[k])
            if (!v.a0.is_zero()) out[k].push_back({key.first, v.a0, key.second});
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

bool singular_equal(const DistExpr& a, const DistExpr& b) {
    auto ca = singular_canonical(a);
    auto cb = singular_canonical(b);
    if (ca.size() != cb.size()) return false;
    for (size_t k = 0; k < ca.size(); ++k) {
        if (ca[k].size() != cb[k].size()) return false;
        for (size_t i = 0; i < ca[k].size(); ++i)
            if (ca[k][i].pow != cb[k][i].pow || ca[k][i].pi_pow != cb[k][i].pi_pow ||
                !(ca[k][i].q == cb[k][i].q))
                return false;
    }
    return true;
}

double TestFunction::value(double x) const {
    double u = (x - center) / width;
    return std::exp(-0.5 * u * u);
}

double TestFunction::derivative(int k, double x) const {
    // phi^(k)(x) = phi(x) P_k(u) / sigma^k with P_{k+1} = P_k' - u P_k
    double u = (x - center) / width;
    std::vector<double> p{1.0};
    for (int i = 0; i < k; ++i) {
        std::vector<double> np(p.size() + 1, 0.0);
        for (size_t j = 0; j + 1 < p.size() + 1; ++j) {
            if (j + 1 < p.size()) np[j] += (j + 1) * p[j + 1];  // P'
        }
        for (size_t j = 0; j < p.size(); ++j) np[j + 1] -= p[j];  // -u P
        p = std::move(np);
    }
    double poly = 0.0;
    for (size_t j = p.size(); j-- > 0;) poly = poly * u + p[j];
    return value(x) * poly / pow_int(width, k);
}

double smear(const DistExpr& expr, const TestFunction& phi, double r) {
    if (!(r > 0)) throw std::domain_error("smear: r must be positive");
    if (!(phi.width < phi.center / 3.0))
        throw std::domain_error("smear: test function too wide (width >= center/3)");
    double total = 0.0;

    // delta-supported part: (d/dr')^m [c phi] at r' = r, Leibniz on the payload
    for (const SingularTerm& s : singular_part(expr)) {
        const int m = s.delta_order;
        std::vector<Term> cur = s.coeff_terms;
        Rational binom(1);
        for (int j = 0; j <= m; ++j) {
            double cj = eval_coeff_at_diagonal(expr, cur, r);
            total += binom.to_double() * cj * phi.derivative(m - j, r);
            if (j < m) {
                std::vector<Term> next;
                for (const Term& t : cur) {
                    auto d = term_derivative_rp(expr, t);
                    next.insert(next.end(), d.begin(), d.end());
                }
                cur = std::move(next);
                binom *= Rational(m - j) / Rational(j + 1);
            }
        }
    }

    // regular part over the test function's effective support
    bool has_regular = std::any_of(expr.terms.begin(), expr.terms.end(), [](const Term& t) {
        return t.region.kind != RegionKind::DeltaDerivative;
    });
    if (!has_regular) return total;

    const double lo = std::max(1e-8, phi.center - 8.5 * phi.width);
    const double hi = phi.center + 8.5 * phi.width;
    if (hi <= lo) return total;
    auto f = [&](double rp) { return phi.value(rp) * eval_regular(expr, r, rp); };
    const double tol = 1e-10;
    if (r > lo && r < hi) {
        double h = std::min(r - lo, hi - r);
        total += integrate_paired_singular(f, r, h, tol);
        if (r - h > lo) total += adaptive_integrate(f, lo, r - h, tol);
        if (r + h < hi) total += adaptive_integrate(f, r + h, hi, tol);
    } else {
        total += adaptive_integrate(f, lo, hi, tol);
    }
    return total;
}

}  // namespace sbfint
