#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sbf/kernels.hpp"
#include "sbf/specfun.hpp"

using namespace sbfint;
using kernels::ProductIntegrand;

TEST_CASE("scalar kernel against the reference sbf") {
    ProductIntegrand spec{{0, 2}, {0.8, 1.3}, 2, 0.0};
    std::vector<double> k{0.3, 1.7, 9.2, 40.0};
    std::vector<double> out(k.size());
    kernels::eval_integrand_scalar(spec, k.data(), out.data(), k.size());
    for (size_t i = 0; i < k.size(); ++i) {
        double want = k[i] * k[i] * sbf(Order(0), k[i] * 0.8) * sbf(Order(2), k[i] * 1.3);
        CHECK(out[i] == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("damping factor") {
    ProductIntegrand spec{{1}, {1.0}, 0, 0.05};
    double k = 7.3, out;
    kernels::eval_integrand_scalar(spec, &k, &out, 1);
    CHECK(out == doctest::Approx(std::exp(-0.05 * 7.3) * sbf(Order(1), 7.3)).epsilon(1e-12));
}

TEST_CASE("simd variant is bit-identical to the scalar reference") {
    INFO("active backend: ", kernels::backend_name(kernels::active_backend()));
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> kdist(0.01, 300.0);
    for (int rep = 0; rep < 50; ++rep) {
        int nf = 1 + (int)(rng() % 4);
        ProductIntegrand spec;
        for (int j = 0; j < nf; ++j) {
            spec.orders.push_back((int)(rng() % 6));
            spec.radii.push_back(0.2 + 2.3 * (double)(rng() % 1000) / 1000.0);
        }
        spec.power = (int)(rng() % 5);
        spec.damping = (rep % 3 == 0) ? 0.03 : 0.0;
        std::vector<double> k(37);
        for (double& v : k) v = kdist(rng);
        std::vector<double> a(k.size()), b(k.size());
        kernels::eval_integrand_scalar(spec, k.data(), a.data(), k.size());
        kernels::eval_integrand(spec, k.data(), b.data(), k.size());
        for (size_t i = 0; i < k.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("backend selection is reported") {
    auto b = kernels::active_backend();
    CHECK((b == kernels::Backend::Scalar || b == kernels::Backend::Avx2));
    CHECK(std::string(kernels::backend_name(b)).size() > 0);
}
