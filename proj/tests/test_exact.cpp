#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sbf/bigint.hpp"
#include "sbf/gamma_exact.hpp"
#include "sbf/rational.hpp"

using namespace sbfint;

TEST_CASE("BigInt arithmetic round trips") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("-987654321098765432109876543210");
    CHECK((a + b).to_string() == "-864197532086419753208641975320");
    CHECK((a * b).to_string() ==
          "-121932631137021795226185032733622923332237463801111263526900");
    BigInt q, r;
    BigInt::divmod(b, a, q, r);
    CHECK((q * a + r) == b);
    CHECK(BigInt::factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("BigInt int64 bounds") {
    CHECK(BigInt(9007199254740993ll).to_int64() == 9007199254740993ll);
    CHECK(BigInt(-42).fits_int64());
    CHECK_FALSE(BigInt::from_string("9223372036854775808").fits_int64());
    CHECK(BigInt::from_string("-9223372036854775808").fits_int64());
}

TEST_CASE("Rational normalization and ops") {
    Rational a(6, -4);
    CHECK(a == Rational(-3, 2));
    CHECK((a + Rational(1, 2)) == Rational(-1));
    CHECK((a * a) == Rational(9, 4));
    CHECK((Rational(1, 3) / Rational(1, 6)) == Rational(2));
    CHECK(Rational(7, 2).pow_int(-2) == Rational(4, 49));
    CHECK(Rational(-5, 3).to_double() == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exact gamma at half integers") {
    auto g = gamma_half_exact(1);  // Gamma(1/2) = sqrt(pi)
    REQUIRE(g.has_value());
    CHECK(g->q == Rational(1));
    CHECK(g->sqrtpi == 1);

    g = gamma_half_exact(3);  // Gamma(3/2) = sqrt(pi)/2
    CHECK(g->q == Rational(1, 2));

    g = gamma_half_exact(7);  // Gamma(7/2) = 15 sqrt(pi)/8
    CHECK(g->q == Rational(15, 8));

    g = gamma_half_exact(-1);  // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(g->q == Rational(-2));

    g = gamma_half_exact(-3);  // Gamma(-3/2) = 4 sqrt(pi)/3
    CHECK(g->q == Rational(4, 3));

    CHECK(gamma_half_exact(8)->q == Rational(6));  // Gamma(4) = 6
    CHECK_FALSE(gamma_half_exact(0).has_value());
    CHECK_FALSE(gamma_half_exact(-4).has_value());
}

TEST_CASE("gamma_half_ratio silent zeros and pi bookkeeping") {
    // c_Gamma for ell=ell'=n=0: Gamma(1/2)/(Gamma(1) Gamma(3/2)) = 2
    auto c = gamma_half_ratio(1, 2, 3);
    CHECK(c.q == Rational(2));
    CHECK(c.pi_pow == 0);

    // c_Gamma_rp> for (0,1,0): Gamma(1)/(Gamma(3/2) Gamma(3/2)) = 4/pi
    c = gamma_half_ratio(2, 3, 3);
    CHECK(c.q == Rational(4));
    CHECK(c.pi_pow == -1);

    // denominator pole -> exact zero
    c = gamma_half_ratio(3, 0, 3);
    CHECK(c.is_zero());
    c = gamma_half_ratio(3, -2, 3);
    CHECK(c.is_zero());
}
