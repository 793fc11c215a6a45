#pragma once

#include <array>
#include <cstddef>

namespace sbfint {

// Truncated Taylor arithmetic: value and the first N derivatives at a point.
// Enough for the delta-derivative orders the triple reduction meets.
template <int N>
struct Jet {
    std::array<double, N + 1> d{};  // d[k] = f^(k)

    static Jet variable(double x) {
        Jet j;
        j.d[0] = x;
        if constexpr (N >= 1) j.d[1] = 1.0;
        return j;
    }
    static Jet constant(double c) {
        Jet j;
        j.d[0] = c;
        return j;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.d[k] = a.d[k] + b.d[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.d[k] = a.d[k] - b.d[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        // Leibniz: (fg)^(k) = sum_j C(k,j) f^(j) g^(k-j)
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double s = 0.0, binom = 1.0;
            for (int j = 0; j <= k; ++j) {
                s += binom * a.d[j] * b.d[k - j];
                binom = binom * (k - j) / (j + 1);
            }
            r.d[k] = s;
        }
        return r;
    }
    friend Jet operator*(double c, const Jet& a) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.d[k] = c * a.d[k];
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        // g = a/b: g^(k) = (a^(k) - sum_{j<k} C(k,j) g^(j) b^(k-j)) / b^(0)
        Jet g;
        for (int k = 0; k <= N; ++k) {
            double s = a.d[k], binom = 1.0;
            for (int j = 0; j < k; ++j) {
                s -= binom * g.d[j] * b.d[k - j];
                binom = binom * (k - j) / (j + 1);
            }
            g.d[k] = s / b.d[0];
        }
        return g;
    }
    Jet pow_nonneg(int e) const {
        Jet r = constant(1.0);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }
};

}  // namespace sbfint
