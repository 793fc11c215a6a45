#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sbf/double_sbf.hpp"

using namespace sbfint;

TEST_CASE("validity gates") {
    CHECK_THROWS_AS(base_expr(0, 0, 2), BaseOutOfValidity);
    CHECK_THROWS_AS(base_expr(0, 0, -1), BaseOutOfValidity);
    CHECK_THROWS_AS(closed_form(DoubleSpec(0, 0, -2)), BaseOutOfValidity);
    CHECK_NOTHROW(base_expr(0, 0, 1));
}

TEST_CASE("d-coefficient vanishing for l = l', n = 0") {
    // d'_103 = d_103 = 0 exactly: the base kernels collapse and no F-bearing
    // term survives the first derivative
    for (int l = 0; l <= 4; ++l) {
        HyperDescriptor h{HyperOrientation::Primed, 1, 0, 3};
        CHECK(hyper_d_coeff(l, l, 0, h) == Rational(0));
        HyperDescriptor hr{HyperOrientation::Unprimed, 1, 0, 3};
        CHECK(hyper_d_coeff(l, l, 0, hr) == Rational(0));
    }
    // and they coincide for l = l' at any n
    HyperDescriptor h{HyperOrientation::Primed, 1, 0, 3};
    HyperDescriptor hr{HyperOrientation::Unprimed, 1, 0, 3};
    CHECK(hyper_d_coeff(3, 3, 2, h) == hyper_d_coeff(3, 3, 2, hr));
}

TEST_CASE("closed_form parity selection") {
    CHECK(closed_form(DoubleSpec(1, 2, 7)).base_n == 1);
    CHECK(closed_form(DoubleSpec(1, 2, 6)).base_n == 0);
    CHECK(closed_form(DoubleSpec(1, 2, 0)).current_n == 0);
}

TEST_CASE("evaluate returns regular value plus singular summary") {
    DoubleEvaluation ev = evaluate(DoubleSpec(0, 1, 2), 0.3, 1.2);
    CHECK(ev.singular.empty());
    DistExpr dir = gr_direct_expr(0, 1, 2);
    CHECK(ev.regular == doctest::Approx(eval_regular(dir, 0.3, 1.2)).epsilon(1e-10));

    DoubleEvaluation closure = evaluate(DoubleSpec(3, 3, 2), 2.0, 1.0);
    CHECK(closure.regular == 0.0);
    REQUIRE(closure.singular.size() == 1);
    CHECK(closure.singular[0].delta_order == 0);
}

TEST_CASE("raising equivalence across several orders") {
    // ladder regular sector == direct formulas at the marginal n = 2
    for (auto [l, lp] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 2}, std::pair{0, 3}}) {
        DistExpr lad = closed_form(DoubleSpec(l, lp, 2));
        DistExpr dir = gr_direct_expr(l, lp, 2);
        for (auto [r, rp] : {std::pair{0.4, 1.7}, std::pair{1.6, 0.5}, std::pair{1.05, 0.95}}) {
            double a = eval_regular(lad, r, rp);
            double b = eval_regular(dir, r, rp);
            CHECK(std::fabs(a - b) <= 1e-10 * std::max({std::fabs(a), std::fabs(b), 1e-30}));
        }
    }
}

TEST_CASE("file cache round trip via SBF_CACHE_DIR") {
    std::string dir = "/tmp/sbf_cache_test";
    std::filesystem::remove_all(dir);
    setenv("SBF_CACHE_DIR", dir.c_str(), 1);
    DistExpr a = closed_form(DoubleSpec(2, 3, 6));
    CHECK(std::filesystem::exists(dir + "/double_2_3_6.json"));
    DistExpr b = closed_form(DoubleSpec(2, 3, 6));
    CHECK(dist_expr_to_json(a) == dist_expr_to_json(b));
    // a fresh read must parse the persisted file to the same expression
    std::ifstream in(dir + "/double_2_3_6.json");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(dist_expr_to_json(dist_expr_from_json(text)) == dist_expr_to_json(a));
    unsetenv("SBF_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("swap_vars is an involution matching relabeling") {
    for (auto [l, lp, n] : {std::tuple{0, 2, 2}, std::tuple{1, 2, 4}, std::tuple{2, 0, 3}}) {
        DistExpr e = closed_form(DoubleSpec(l, lp, n));
        DistExpr back = swap_vars(swap_vars(e));
        CHECK(dist_expr_to_json(e) == dist_expr_to_json(back));
        // pointwise: I_{l,lp}(r, rp) = I_{lp,l}(rp, r) on the regular sector
        DistExpr other = closed_form(DoubleSpec(lp, l, n));
        for (auto [r, rp] : {std::pair{0.5, 1.4}, std::pair{1.8, 0.9}})
            CHECK(eval_regular(e, r, rp) ==
                  doctest::Approx(eval_regular(other, rp, r)).epsilon(1e-12));
    }
}

TEST_CASE("term count guardrail stays honest on deep ladders") {
    DistExpr e = closed_form(DoubleSpec(2, 3, 10));
    CHECK(e.terms.size() < 10000);
    CHECK(e.current_n == 10);
}
