#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sbfint::kernels {

// k^power * exp(-damping k) * prod_j j_{orders[j]}(k radii[j]), evaluated on
// arrays of quadrature nodes. This is the oracle's inner loop.
struct ProductIntegrand {
    std::vector<int> orders;
    std::vector<double> radii;
    int power = 0;
    double damping = 0.0;
};

// scalar reference kernel
void eval_integrand_scalar(const ProductIntegrand& spec, const double* k, double* out,
                           std::size_t count);

#if defined(SBF_HAVE_AVX2_TU)
// AVX2 variant, compiled in its own translation unit; bit-identical to the
// scalar reference by construction (same operation order, lane-wise libm).
void eval_integrand_avx2(const ProductIntegrand& spec, const double* k, double* out,
                         std::size_t count);
#endif

enum class Backend { Scalar, Avx2 };

// Runtime selection: AVX2 when compiled in and the CPU supports it, unless
// overridden with SBF_KERNEL=scalar|avx2.
Backend active_backend();
const char* backend_name(Backend b);

void eval_integrand(const ProductIntegrand& spec, const double* k, double* out,
                    std::size_t count);

}  // namespace sbfint::kernels
