#include "sbf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <limits>
#include <stdexcept>

#include "sbf/errors.hpp"

namespace sbfint {

namespace {

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    constexpr double kPi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));  // Tricomi initial guess
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(x) and derivative by recurrence
            double p0 = 1.0, p1 = x;
            for (int m = 1; m < n; ++m) {
                double p2 = ((2 * m + 1) * x * p1 - m * p0) / (m + 1);
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breakpoints,
                          int max_depth) {
    if (!(b > a)) return 0.0;
    std::vector<double> edges{a, b};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    std::sort(edges.begin(), edges.end());

    struct Seg {
        double a, b;
        int depth;
    };
    std::vector<Seg> stack;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] > edges[i]) stack.push_back({edges[i], edges[i + 1], 0});

    double total = 0.0;
    // first pass for the tolerance scale
    double scale = 0.0;
    for (const Seg& s : stack) scale += std::fabs(integrate_gl(f, s.a, s.b, 16));
    if (scale == 0.0) scale = 1e-300;

    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        double coarse = integrate_gl(f, s.a, s.b, 16);
        double fine = integrate_gl(f, s.a, s.b, 32);
        double err = std::fabs(fine - coarse);
        if (err <= rel_tol * std::max(scale, std::fabs(fine)) || (s.b - s.a) < 1e-14 * (b - a)) {
            total += fine;
            continue;
        }
        if (s.depth >= max_depth)
            throw NoConvergence("adaptive_integrate: refinement stalled");
        double mid = 0.5 * (s.a + s.b);
        stack.push_back({s.a, mid, s.depth + 1});
        stack.push_back({mid, s.b, s.depth + 1});
    }
    return total;
}

double integrate_paired_singular(const std::function<double(double)>& f, double center,
                                 double h, double rel_tol) {
    if (h <= 0) return 0.0;
    auto paired = [&](double t) { return f(center + t) + f(center - t); };
    double total = 0.0;
    double hi = h;
    // Below t_stop the rounding of center +- t desynchronizes the two sides
    // and an odd 1/t pair no longer cancels; integrate down to there and
    // close with a fitted a + b ln t tail, which is the local model of a
    // paired pole/log singularity.
    // looser tolerances can stop higher: the fitted-tail model error scales
    // like t_stop^2 |log t_stop|
    double t_rel = 1e-6;
    if (rel_tol > 1e-9) t_rel = std::min(3e-4, 0.02 * std::sqrt(rel_tol));
    const double t_stop = std::max(t_rel * std::max(1.0, std::fabs(center)),
                                   1024.0 * std::numeric_limits<double>::epsilon() *
                                       std::fabs(center));
    for (int level = 0; level < 160 && hi > t_stop; ++level) {
        double lo = std::max(hi * 0.5, t_stop);
        total += integrate_gl(paired, lo, hi, 16);
        hi = lo;
    }
    const double t1 = hi, t2 = 0.37 * hi;
    double p1 = paired(t1), p2 = paired(t2);
    double b = (p1 - p2) / std::log(t1 / t2);
    double a = p1 - b * std::log(t1);
    total += hi * (a + b * (std::log(hi) - 1.0));
    return total;
}

double extrapolate_to_zero(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> t = ys;
    const size_t n = xs.size();
    for (size_t level = 1; level < n; ++level)
        for (size_t i = 0; i + level < n; ++i)
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * xs[i + level] / (xs[i] - xs[i + level]);
    return t[0];
}

double extrapolate_damping_ladder(const std::vector<double>& eps,
                                  const std::vector<double>& vals) {
    const size_t n = eps.size();
    if (n != vals.size() || n == 0) throw std::invalid_argument("ladder size mismatch");
    if (n == 1) return vals[0];
    // basis columns: 1, e ln e, e, e^2 ln e, e^2, e^3 ln e, ...
    auto basis = [](double e, size_t j) -> double {
        if (j == 0) return 1.0;
        size_t p = (j + 1) / 2;
        double v = 1.0;
        for (size_t i = 0; i < p; ++i) v *= e;
        return (j % 2 == 1) ? v * std::log(e) : v;
    };
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = basis(eps[i], j);
        m[i][n] = vals[i];
    }
    for (size_t col = 0; col < n; ++col) {  // Gaussian elimination, partial pivot
        size_t piv = col;
        for (size_t i = col + 1; i < n; ++i)
            if (std::fabs(m[i][col]) > std::fabs(m[piv][col])) piv = i;
        std::swap(m[col], m[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m[col][col] == 0.0) continue;
            double f = m[i][col] / m[col][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return m[0][n] / m[0][0];
}

WynnResult wynn_epsilon(const std::vector<double>& partial_sums) {
    const size_t n = partial_sums.size();
    if (n == 0) return {0.0, 0.0};
    if (n == 1) return {partial_sums[0], std::fabs(partial_sums[0])};
    std::vector<double> prev2(n + 1, 0.0);  // eps_{-1}
    std::vector<double> prev1 = partial_sums;  // eps_0
    double best = partial_sums.back();
    double best_err = std::fabs(n > 1 ? partial_sums[n - 1] - partial_sums[n - 2] : best);
    for (size_t k = 1; k < n; ++k) {
        std::vector<double> cur(n - k, 0.0);
        for (size_t i = 0; i + k < n; ++i) {
            double denom = prev1[i + 1] - prev1[i];
            if (denom == 0.0) denom = 1e-300;
            cur[i] = prev2[i + 1] + 1.0 / denom;
        }
        if (k % 2 == 0 && !cur.empty()) {
            double est = cur.back();
            double err = std::fabs(est - best);
            if (err < best_err) {
                best_err = err;
                best = est;
            }
        }
        prev2 = prev1;
        prev1 = cur;
    }
    return {best, best_err};
}

}  // namespace sbfint
