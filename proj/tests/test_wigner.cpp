#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbf/wigner.hpp"

using namespace sbfint;

TEST_CASE("wigner3j zero-m special values") {
    CHECK(wigner3j_zero({0, 0, 0}).to_double() == 1.0);
    CHECK(wigner3j_zero({1, 1, 1}).sign == 0);      // odd sum selection rule
    CHECK(wigner3j_zero({1, 2, 5}).sign == 0);      // triangle violated
    auto v = wigner3j_zero({1, 1, 2});              // sqrt(2/15)
    CHECK(v.sign == 1);
    CHECK(v.radicand == Rational(2, 15));
    auto w = wigner3j_zero({1, 1, 0});              // -1/sqrt(3)
    CHECK(w.sign == -1);
    CHECK(w.radicand == Rational(1, 3));
}

TEST_CASE("wigner3j orthogonality, exact") {
    // sum_j3 (2 j3 + 1) * 3j(j1,j2,j3;0,0,0)^2 = 1
    for (int j1 = 0; j1 <= 5; ++j1)
        for (int j2 = 0; j2 <= 5; ++j2) {
            Rational sum(0);
            for (int j3 = std::abs(j1 - j2); j3 <= j1 + j2; ++j3) {
                auto v = wigner3j_zero({j1, j2, j3});
                if (v.sign == 0) continue;
                sum += Rational(2 * j3 + 1) * v.radicand;
            }
            CHECK(sum == Rational(1));
        }
}

TEST_CASE("wigner6j special values") {
    CHECK(wigner6j({0, 0, 0, 0, 0, 0}).to_double() == 1.0);
    CHECK(wigner6j({1, 2, 5, 1, 1, 1}).sign == 0);  // non-triangular triad
    // {j1 j2 0; j3 j4 j5} = (-1)^(j1+j3+j5) / sqrt((2j1+1)(2j3+1)) for closing triads
    auto v = wigner6j({1, 1, 0, 1, 1, 1});
    CHECK(v.radicand == Rational(1, 9));
    CHECK(v.sign == -1);
    auto u = wigner6j({0, 2, 2, 1, 2, 2});
    CHECK(u.radicand == Rational(1, 25));
    CHECK(u.sign == -1);
}

TEST_CASE("wigner6j orthogonality sums, exact") {
    // sum_x (2x+1) {a b x; c d p}^2 = 1/(2p+1) when the fixed triads close
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d)
                    for (int p = 0; p <= 4; ++p) {
                        if (!triangle_ok(a, d, p) || !triangle_ok(c, b, p)) continue;
                        Rational sum(0);
                        for (int x = 0; x <= a + b; ++x) {
                            auto v = wigner6j({a, b, x, c, d, p});
                            if (v.sign == 0) continue;
                            sum += Rational(2 * x + 1) * v.radicand;
                        }
                        CHECK(sum == Rational(1, 2 * p + 1));
                    }
}
