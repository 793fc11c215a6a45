#include "sbf/wigner.hpp"

namespace sbfint {

namespace {

Rational fact(long long n) { return Rational(BigInt::factorial(n), BigInt(1)); }

// Delta(a,b,c)^2 = (a+b-c)!(a-b+c)!(-a+b+c)! / (a+b+c+1)!
Rational triangle_coeff_sq(int a, int b, int c) {
    return fact(a + b - c) * fact(a - b + c) * fact(-a + b + c) / fact(a + b + c + 1);
}

}  // namespace

SqrtRational wigner3j_zero(const WignerTriple& t) {
    const int j1 = t.j1, j2 = t.j2, j3 = t.j3;
    if (!triangle_ok(j1, j2, j3)) return SqrtRational::zero();
    const int J = j1 + j2 + j3;
    if (J % 2 != 0) return SqrtRational::zero();
    const int g = J / 2;
    Rational pre = fact(g) / (fact(g - j1) * fact(g - j2) * fact(g - j3));
    Rational rad = fact(J - 2 * j1) * fact(J - 2 * j2) * fact(J - 2 * j3) / fact(J + 1);
    int sign = (g % 2 == 0) ? 1 : -1;
    SqrtRational r = SqrtRational::from_rational(pre);
    r.sign *= sign;
    r.radicand *= rad;
    return r;
}

SqrtRational wigner6j(const std::array<int, 6>& js) {
    const int a = js[0], b = js[1], c = js[2], d = js[3], e = js[4], f = js[5];
    if (!triangle_ok(a, b, c) || !triangle_ok(a, e, f) ||
        !triangle_ok(d, b, f) || !triangle_ok(d, e, c))
        return SqrtRational::zero();
    Rational delta_sq = triangle_coeff_sq(a, b, c) * triangle_coeff_sq(a, e, f) *
                        triangle_coeff_sq(d, b, f) * triangle_coeff_sq(d, e, c);
    const int t_min = std::max(std::max(a + b + c, a + e + f), std::max(d + b + f, d + e + c));
    const int t_max = std::min(std::min(a + b + d + e, b + c + e + f), a + c + d + f);
    Rational sum(0);
    for (int t = t_min; t <= t_max; ++t) {
        Rational term = fact(t + 1) /
            (fact(t - a - b - c) * fact(t - a - e - f) * fact(t - d - b - f) * fact(t - d - e - c) *
             fact(a + b + d + e - t) * fact(b + c + e + f - t) * fact(a + c + d + f - t));
        if (t % 2 != 0) term = -term;
        sum += term;
    }
    SqrtRational r = SqrtRational::from_rational(sum);
    r.radicand *= delta_sq;
    return r;
}

}  // namespace sbfint
