// AVX2 variant of the product-integrand kernel. Compiled with -mavx2 -mfma in
// this translation unit only; selected at runtime behind a cpuid check.
//
// The arithmetic mirrors the scalar reference operation for operation
// (mul, div, sub in the same order; sin/cos/exp taken lane-wise from libm),
// so the two backends produce bit-identical results and the equivalence test
// can compare exactly.

#include <immintrin.h>

#include <cmath>

#include "sbf/kernels.hpp"
#include "sbf/specfun.hpp"

namespace sbfint::kernels {

namespace {

// same libm entry point as the scalar reference (see kernels.cpp)
inline void lanewise_sincos(__m256d x, __m256d& s, __m256d& c) {
    alignas(32) double v[4], sv[4], cv[4];
    _mm256_store_pd(v, x);
    for (int i = 0; i < 4; ++i) __builtin_sincos(v[i], &sv[i], &cv[i]);
    s = _mm256_load_pd(sv);
    c = _mm256_load_pd(cv);
}
inline __m256d lanewise_exp(__m256d x) {
    alignas(32) double v[4];
    _mm256_store_pd(v, x);
    for (int i = 0; i < 4; ++i) v[i] = std::exp(v[i]);
    return _mm256_load_pd(v);
}

// all four lanes in the stable upward range
inline __m256d sbf_upward_vec(int l, __m256d x) {
    __m256d s, c;
    lanewise_sincos(x, s, c);
    __m256d jm = _mm256_div_pd(s, x);
    if (l == 0) return jm;
    __m256d xx = _mm256_mul_pd(x, x);
    __m256d j = _mm256_sub_pd(_mm256_div_pd(s, xx), _mm256_div_pd(c, x));
    for (int m = 1; m < l; ++m) {
        __m256d t = _mm256_mul_pd(_mm256_set1_pd(2 * m + 1), j);
        t = _mm256_div_pd(t, x);
        __m256d jp = _mm256_sub_pd(t, jm);
        jm = j;
        j = jp;
    }
    return j;
}

}  // namespace

void eval_integrand_avx2(const ProductIntegrand& spec, const double* k, double* out,
                         std::size_t count) {
    const std::size_t nf = spec.orders.size();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d ki = _mm256_loadu_pd(k + i);
        // lanes below the stable range of any factor fall back to scalar
        bool all_stable = true;
        for (std::size_t j = 0; j < nf && all_stable; ++j) {
            __m256d x = _mm256_mul_pd(ki, _mm256_set1_pd(spec.radii[j]));
            __m256d lim = _mm256_set1_pd(spec.orders[j] + 2.0);
            if (_mm256_movemask_pd(_mm256_cmp_pd(x, lim, _CMP_GT_OQ)) != 0xf) all_stable = false;
        }
        if (!all_stable) {
            eval_integrand_scalar(spec, k + i, out + i, 4);
            continue;
        }
        __m256d v = _mm256_set1_pd(1.0);
        for (int p = 0; p < spec.power; ++p) v = _mm256_mul_pd(v, ki);
        if (spec.damping > 0.0)
            v = _mm256_mul_pd(v, lanewise_exp(_mm256_mul_pd(_mm256_set1_pd(-spec.damping), ki)));
        for (std::size_t j = 0; j < nf; ++j) {
            __m256d x = _mm256_mul_pd(ki, _mm256_set1_pd(spec.radii[j]));
            v = _mm256_mul_pd(v, sbf_upward_vec(spec.orders[j], x));
        }
        _mm256_storeu_pd(out + i, v);
    }
    if (i < count) eval_integrand_scalar(spec, k + i, out + i, count - i);
}

}  // namespace sbfint::kernels
