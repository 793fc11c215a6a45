#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sbf/dist_expr.hpp"
#include "sbf/double_sbf.hpp"

using sbfint::DistExpr;

#ifndef SBF_CLI_PATH
#define SBF_CLI_PATH "./sbfint"
#endif

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SBF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(p);
    r.status = WEXITSTATUS(rc);
    return r;
}

}  // namespace

TEST_CASE("double command: singular rendering and values") {
    RunResult r = run("double --l 0 --lp 0 --n 2 --r 1 --rp 1.5");
    CHECK(r.status == 0);
    CHECK(r.out.find("regular value: 0") != std::string::npos);
    CHECK(r.out.find("delta(r-r')") != std::string::npos);
    CHECK(r.out.find("1/2*pi * r^-1 * r'^-1") != std::string::npos);

    RunResult j = run("double --l 0 --lp 1 --n 2 --r 0.3 --rp 1.2 --json");
    CHECK(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.contains("value"));
    DistExpr dir = sbfint::gr_direct_expr(0, 1, 2);
    CHECK(parsed["value"].get<double>() ==
          doctest::Approx(sbfint::eval_regular(dir, 0.3, 1.2)).epsilon(1e-10));
}

TEST_CASE("double command: exit codes") {
    CHECK(run("double --l 0 --lp 0 --n 2 --r 1 --rp 1").status == 3);   // diagonal
    CHECK(run("double --l 0 --lp 0 --r 1 --rp 2").status == 2);        // missing flag
    CHECK(run("double --l 0 --lp 0 --n -1 --r 1 --rp 2").status == 2); // bad value
    // diagnostics go to stderr, stdout stays empty on failure
    CHECK(run("double --l 0 --lp 0 --n 2 --r 1 --rp 1").out.empty());
}

TEST_CASE("closed-form is byte-stable and round-trips") {
    RunResult a = run("closed-form --l 1 --lp 1 --n 4");
    RunResult b = run("closed-form --l 1 --lp 1 --n 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    DistExpr e = sbfint::dist_expr_from_json(a.out);
    bool has_high = false;
    for (const auto& t : e.terms)
        if (t.region.kind == sbfint::RegionKind::DeltaDerivative && t.region.delta_order >= 1)
            has_high = true;
    CHECK(has_high);
    // (0,1,0): two Heaviside terms, no singular content
    RunResult c = run("closed-form --l 0 --lp 1 --n 0");
    DistExpr base = sbfint::dist_expr_from_json(c.out);
    CHECK(base.terms.size() == 2);
    // (0,0,2): single delta term
    RunResult d = run("closed-form --l 0 --lp 0 --n 2");
    DistExpr closure = sbfint::dist_expr_from_json(d.out);
    CHECK(closure.terms.size() == 1);
    CHECK(closure.terms[0].region.kind == sbfint::RegionKind::DeltaDerivative);
}

TEST_CASE("grid command") {
    std::string file = "/tmp/sbf_grid_test.csv";
    RunResult r = run("grid --l 0 --lp 1 --n 2 --rmax 2 --steps 6 --out " + file);
    CHECK(r.status == 0);
    std::ifstream in(file);
    std::string header;
    std::getline(in, header);
    CHECK(header == "r,rp,value_ladder,value_direct");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == 36);
    // singular content without --regular-only refuses with exit 4
    CHECK(run("grid --l 0 --lp 0 --n 2 --rmax 2 --steps 4 --out " + file).status == 4);
    CHECK(run("grid --l 0 --lp 0 --n 2 --rmax 2 --steps 4 --regular-only --out " + file).status == 0);
    // single-cell grid
    CHECK(run("grid --l 0 --lp 1 --n 2 --rmax 1 --steps 1 --out " + file).status == 0);
    std::remove(file.c_str());
}

TEST_CASE("triple command") {
    RunResult r = run("triple --orders 0,0,2 --n 4 --radii 1,1,5 --json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == 0.0);
    CHECK(j["triangle_ok"].get<bool>() == false);
    CHECK(j["window"][0].get<double>() == doctest::Approx(0.0));
    CHECK(j["window"][1].get<double>() == doctest::Approx(2.0));
}

TEST_CASE("oracle command") {
    RunResult r = run("oracle --orders 0,0 --n 0 --radii 0.5,1 --json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.5707963).epsilon(1e-6));
    CHECK(j["diverged"].get<bool>() == false);
    CHECK(j.contains("error_estimate"));
    CHECK(j.contains("panels"));
}

TEST_CASE("multi command") {
    RunResult r = run("multi --orders 0,0,0,0 --n 2 --radii 1,1,1,1 --json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.7853981634).epsilon(1e-5));
    CHECK(j["tree"]["splits"].size() == 1);
    CHECK(j.contains("error_estimate"));
}
