#include "sbf/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "sbf/specfun.hpp"

namespace sbfint::kernels {

namespace {

// Both backends must take sin/cos from the same libm entry point for the
// bit-equivalence contract; plain sin()+cos() pairs get fused to sincos by
// the compiler in some TUs but not others.
inline void sincos_both(double x, double& s, double& c) { __builtin_sincos(x, &s, &c); }

// Upward recurrence factor; only used in its stable range x > l + 2.
// Operation order is mirrored exactly by the AVX2 variant.
inline double sbf_upward(int l, double x, double s, double c) {
    double jm = s / x;
    if (l == 0) return jm;
    double xx = x * x;
    double j = s / xx - c / x;
    for (int m = 1; m < l; ++m) {
        double t = (2 * m + 1) * j;
        t = t / x;
        double jp = t - jm;
        jm = j;
        j = jp;
    }
    return j;
}

}  // namespace

void eval_integrand_scalar(const ProductIntegrand& spec, const double* k, double* out,
                           std::size_t count) {
    const std::size_t nf = spec.orders.size();
    for (std::size_t i = 0; i < count; ++i) {
        const double ki = k[i];
        double v = 1.0;
        for (int p = 0; p < spec.power; ++p) v = v * ki;
        if (spec.damping > 0.0) v = v * std::exp(-spec.damping * ki);
        for (std::size_t j = 0; j < nf; ++j) {
            const double x = ki * spec.radii[j];
            const int l = spec.orders[j];
            double f;
            if (x > l + 2.0) {
                double s, c;
                sincos_both(x, s, c);
                f = sbf_upward(l, x, s, c);
            } else {
                f = sbf(Order(l), x);
            }
            v = v * f;
        }
        out[i] = v;
    }
}

Backend active_backend() {
    static Backend backend = [] {
        const char* env = std::getenv("SBF_KERNEL");
#if defined(SBF_HAVE_AVX2_TU)
        bool have_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
        if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (env && std::strcmp(env, "avx2") == 0 && have_avx2) return Backend::Avx2;
        if (env && std::strcmp(env, "avx2") == 0) return Backend::Scalar;  // unsupported CPU
        return have_avx2 ? Backend::Avx2 : Backend::Scalar;
#else
        (void)env;
        return Backend::Scalar;
#endif
    }();
    return backend;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void eval_integrand(const ProductIntegrand& spec, const double* k, double* out,
                    std::size_t count) {
#if defined(SBF_HAVE_AVX2_TU)
    if (active_backend() == Backend::Avx2) {
        eval_integrand_avx2(spec, k, out, count);
        return;
    }
#endif
    eval_integrand_scalar(spec, k, out, count);
}

}  // namespace sbfint::kernels
