#include "sbf/triple_sbf.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "sbf/jet.hpp"
#include "sbf/quadrature.hpp"
#include "sbf/wigner.hpp"

namespace sbfint {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kJetOrder = 6;
using J = Jet<kJetOrder>;

template <typename T>
T legendre_generic(int l, const T& x) {
    if (l == 0) return T::constant(1.0);
    T pm1 = T::constant(1.0), p = x;
    for (int m = 1; m < l; ++m) {
        T pp1 = (1.0 / (m + 1)) * ((2.0 * m + 1.0) * (x * p) - (double)m * pm1);
        pm1 = p;
        p = pp1;
    }
    return p;
}


// plain double wrapped in the Jet interface so the Mehrem shape is generic
struct DVal {
    double v;
    static DVal constant(double c) { return {c}; }
    DVal pow_nonneg(int e) const {
        DVal r{1.0};
        for (int i = 0; i < e; ++i) r.v *= v;
        return r;
    }
    friend DVal operator+(DVal a, DVal b) { return {a.v + b.v}; }
    friend DVal operator-(DVal a, DVal b) { return {a.v - b.v}; }
    friend DVal operator*(DVal a, DVal b) { return {a.v * b.v}; }
    friend DVal operator*(double c, DVal a) { return {c * a.v}; }
    friend DVal operator/(DVal a, DVal b) { return {a.v / b.v}; }
};

struct MehremConstants {
    double prefactor = 0.0;                 // i^(l1+l2-L) sqrt(2L+1) / 3j(l1,l2,L;000)
    std::vector<double> binom_sqrt;         // sqrt(C(2L, 2Lc)) per Lc
    std::vector<std::vector<double>> wcoef; // per Lc, per ell: (2l+1) 3j 3j 6j
    std::vector<std::vector<int>> wells;    // matching ell values
};

MehremConstants mehrem_constants_uncached(int l1, int l2, int L) {
    if ((l1 + l2 + L) % 2 != 0)
        throw OddSumUnsupported("mehrem_even_k2: l1 + l2 + L must be even");
    SqrtRational lead = wigner3j_zero({l1, l2, L});
    if (lead.sign == 0)
        throw NonTriangularOrders("mehrem_even_k2: leading 3j symbol vanishes");
    MehremConstants mc;
    int ipow = ((l1 + l2 - L) / 2) % 2 == 0 ? 1 : -1;
    mc.prefactor = ipow * std::sqrt(2.0 * L + 1.0) * lead.inverse().to_double();
    for (int Lc = 0; Lc <= L; ++Lc) {
        // C(2L, 2Lc) exactly
        Rational b(1);
        for (int i = 0; i < 2 * Lc; ++i) b *= Rational(2 * L - i, i + 1);
        mc.binom_sqrt.push_back(std::sqrt(b.to_double()));
        std::vector<double> coefs;
        std::vector<int> ells;
        int lo = std::max(std::abs(l1 - (L - Lc)), std::abs(l2 - Lc));
        int hi = std::min(l1 + (L - Lc), l2 + Lc);
        for (int l = lo; l <= hi; ++l) {
            SqrtRational a = wigner3j_zero({l1, L - Lc, l});
            if (a.sign == 0) continue;
            SqrtRational b2 = wigner3j_zero({l2, Lc, l});
            if (b2.sign == 0) continue;
            SqrtRational six = wigner6j({l1, l2, L, Lc, L - Lc, l});
            if (six.sign == 0) continue;
            coefs.push_back((2 * l + 1) * (a * b2 * six).to_double());
            ells.push_back(l);
        }
        mc.wcoef.push_back(std::move(coefs));
        mc.wells.push_back(std::move(ells));
    }
    return mc;
}

const MehremConstants& mehrem_constants(int l1, int l2, int L) {
    static std::map<std::tuple<int, int, int>, MehremConstants> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(l1, l2, L);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, mehrem_constants_uncached(l1, l2, L)).first;
    return it->second;
}

// value as a function of u (generic over Jet/double via the two evaluators)
template <typename T>
T mehrem_shape(const MehremConstants& mc, int L, double r1, double r2, const T& u) {
    // (pi / (4 r1 r2 u)) * prefactor * (r1/u)^L * sum_Lc ... P_ell(Delta(u))
    T delta = (1.0 / (2.0 * r1 * r2)) *
              (T::constant(r1 * r1 + r2 * r2) - u * u);
    T inv_u = T::constant(1.0) / u;
    T shape = T::constant(0.0);
    double ratio = r2 / r1;
    double rpow = 1.0;
    for (size_t Lc = 0; Lc < mc.binom_sqrt.size(); ++Lc) {
        T lsum = T::constant(0.0);
        for (size_t i = 0; i < mc.wcoef[Lc].size(); ++i)
            lsum = lsum + mc.wcoef[Lc][i] * legendre_generic(mc.wells[Lc][i], delta);
        shape = shape + (mc.binom_sqrt[Lc] * rpow) * lsum;
        rpow *= ratio;
    }
    T r1_over_u_L = (T::constant(r1) * inv_u).pow_nonneg(L);
    return (kPi / (4.0 * r1 * r2) * mc.prefactor) * (inv_u * r1_over_u_L * shape);
}

}  // namespace

BetaWindow beta_window(double r1, double r2) {
    return {std::fabs(r1 - r2), r1 + r2, r1, r2};
}

int choose_L(int ell1, int ell2) {
    return std::abs(ell1 - ell2);
}

double mehrem_even_k2(int ell1, int ell2, int L, double r1, double r2, double u) {
    if (!(r1 > 0) || !(r2 > 0) || !(u > 0))
        throw std::domain_error("mehrem_even_k2: arguments must be positive");
    const MehremConstants& mc = mehrem_constants(ell1, ell2, L);
    BetaWindow w = beta_window(r1, r2);
    double delta = w.delta_of(u);
    double beta;
    if (std::fabs(delta) < 1.0) beta = 1.0;
    else if (std::fabs(delta) == 1.0) beta = 0.5;  // theta-bar half value on the edge
    else return 0.0;
    return beta * mehrem_shape<DVal>(mc, L, r1, r2, DVal{u}).v;
}

double HyperAntiderivative::operator()(double z) const {
    if (z == 0.0) return 0.0;
    double za = std::pow(z, alpha.to_double());
    return za / alpha.to_double() * hyp3f2(a, b, alpha, c, alpha + Rational(1), z);
}

HyperAntiderivative hyper_powerlaw_antiderivative(const Rational& alpha, const Rational& a,
                                                  const Rational& b, const Rational& c) {
    if (alpha.is_zero()) throw std::invalid_argument("hyper_powerlaw_antiderivative: alpha = 0");
    return {alpha, a, b, c};
}

TripleResult reduce_triple(const TripleSpec& spec, double r1, double r2, double r3,
                           double rel_tol) {
    if (!(r1 > 0) || !(r2 > 0) || !(r3 > 0))
        throw std::domain_error("reduce_triple: radii must be positive");
    TripleResult res;
    res.L = choose_L(spec.ell1, spec.ell2);
    BetaWindow w = beta_window(r1, r2);
    res.u_minus = w.u_minus;
    res.u_plus = w.u_plus;
    res.triangle_ok = (r3 > w.u_minus && r3 < w.u_plus);

    const MehremConstants& mc = mehrem_constants(spec.ell1, spec.ell2, res.L);
    DistExpr mid = closed_form(DoubleSpec(spec.ell3, res.L, spec.n));
    auto sing = singular_part(mid);
    res.terms_singular = 0;
    for (const auto& s : sing) res.terms_singular += (int)s.coeff_terms.size();
    res.terms_regular = (int)mid.terms.size() - res.terms_singular;
    res.delta_supported = !sing.empty();

    // g(u) = (2/pi) u^2 Mehrem(u); the middle integral is evaluated at (r3, u)
    auto g_plain = [&](double u) {
        return 2.0 / kPi * u * u * mehrem_shape<DVal>(mc, res.L, r1, r2, DVal{u}).v;
    };

    double total = 0.0;

    // delta-supported middle content: (d/du)^m [c(r3,u) g(u)] at u = r3,
    // zero unless r3 lies inside the window
    if (res.triangle_ok && !sing.empty()) {
        J uj = J::variable(r3);
        J gj = 2.0 / kPi * (uj * uj) * mehrem_shape<J>(mc, res.L, r1, r2, uj);
        for (const auto& s : sing) {
            const int m = s.delta_order;
            if (m > kJetOrder)
                throw std::runtime_error("reduce_triple: delta order beyond jet support");
            std::vector<Term> cur = s.coeff_terms;
            Rational binom(1);
            for (int j = 0; j <= m; ++j) {
                double cj = eval_coeff_at_diagonal(mid, cur, r3);
                total += binom.to_double() * cj * gj.d[m - j];
                if (j < m) {
                    std::vector<Term> next;
                    for (const Term& t : cur) {
                        auto d = term_derivative_rp(mid, t);
                        next.insert(next.end(), d.begin(), d.end());
                    }
                    cur = std::move(next);
                    binom *= Rational(m - j) / Rational(j + 1);
                }
            }
        }
    }

    // regular middle content integrated over the window, principal-value
    // paired around the u = r3 kink
    bool has_regular = res.terms_regular > 0;
    if (has_regular && w.u_plus > w.u_minus) {
        auto f = [&](double u) { return g_plain(u) * eval_regular(mid, r3, u); };
        const double tol = rel_tol * 0.1;
        const double lo = w.u_minus, hi = w.u_plus;
        if (res.triangle_ok) {
            double h = std::min(r3 - lo, hi - r3);
            total += integrate_paired_singular(f, r3, h, tol);
            if (r3 - h > lo) total += adaptive_integrate(f, lo, r3 - h, tol);
            if (r3 + h < hi) total += adaptive_integrate(f, r3 + h, hi, tol);
        } else {
            total += adaptive_integrate(f, lo, hi, tol);
        }
    }

    res.value = total;
    return res;
}

double reference_001_n2(double r1, double r2, double r3) {
    if (!(r1 > 0) || !(r2 > 0) || !(r3 > 0))
        throw std::domain_error("reference_001_n2: radii must be positive");
    auto A = [&](double u) {
        if (u == 0.0) return 0.0;
        if (u == r3) throw std::domain_error("reference_001_n2: window endpoint hits r3");
        double m = std::min(u, r3) / std::max(u, r3);
        return u / (r3 * r3) * std::atanh(m);
    };
    BetaWindow w = beta_window(r1, r2);
    return (A(w.u_plus) - A(w.u_minus)) / (2.0 * r1 * r2);
}

}  // namespace sbfint
