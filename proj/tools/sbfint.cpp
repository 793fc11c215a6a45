// sbfint: closed-form and numeric evaluation of half-infinite overlap
// integrals of products of spherical Bessel functions with power-law weight.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <future>
#include <iostream>
#include <sstream>

#include "sbf/double_sbf.hpp"
#include "sbf/multi_sbf.hpp"
#include "sbf/oracle.hpp"
#include "sbf/triple_sbf.hpp"

using namespace sbfint;
using nlohmann::ordered_json;

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitDiagonal = 3;
constexpr int kExitSingularGrid = 4;

std::string render_coeff(const Term& t) {
    std::ostringstream ss;
    ss << t.coeff.q.to_string();
    if (t.coeff.pi_pow == 1) ss << "*pi";
    if (t.coeff.pi_pow == -1) ss << "/pi";
    if (t.pow_r != 0) ss << " * r^" << t.pow_r;
    if (t.pow_rp != 0) ss << " * r'^" << t.pow_rp;
    if (t.hyper) {
        ss << " * F_" << (t.hyper->orientation == HyperOrientation::Primed ? "'" : "")
           << t.hyper->x << t.hyper->y << t.hyper->z;
    }
    return ss.str();
}

void render_singular(std::ostream& os, const std::vector<SingularTerm>& sing) {
    if (sing.empty()) {
        os << "singular: none\n";
        return;
    }
    for (const auto& s : sing) {
        os << "singular d^" << s.delta_order << "/dr^" << s.delta_order
           << " delta(r-r') coefficient:\n";
        for (const Term& t : s.coeff_terms) os << "    " << render_coeff(t) << "\n";
    }
}

ordered_json singular_json(const std::vector<SingularTerm>& sing) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : sing) {
        ordered_json terms = ordered_json::array();
        for (const Term& t : s.coeff_terms) {
            ordered_json tj = ordered_json::parse(dist_expr_to_json(DistExpr{0, 0, 0, 0, {t}}));
            terms.push_back(tj["terms"][0]);
        }
        arr.push_back({{"delta_deriv", s.delta_order}, {"coeff_terms", terms}});
    }
    return arr;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}
std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

int cmd_double(int l, int lp, int n, double r, double rp, bool json_out) {
    DoubleEvaluation ev = evaluate(DoubleSpec(l, lp, n), r, rp);
    if (json_out) {
        ordered_json j;
        j["value"] = ev.regular;
        j["singular"] = singular_json(ev.singular);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "regular value: " << std::setprecision(17) << ev.regular << "\n";
        render_singular(std::cout, ev.singular);
    }
    return 0;
}

int cmd_closed_form(int l, int lp, int n) {
    std::cout << dist_expr_to_json(closed_form(DoubleSpec(l, lp, n)), true) << "\n";
    return 0;
}

int cmd_grid(int l, int lp, int n, double rmax, int steps, const std::string& out_file,
             bool regular_only) {
    DistExpr lad = closed_form(DoubleSpec(l, lp, n));
    if (!singular_part(lad).empty() && !regular_only) {
        std::cerr << "grid: expression has singular terms; pass --regular-only to proceed\n";
        return kExitSingularGrid;
    }
    const bool have_direct = n <= 2;
    DistExpr dir = have_direct ? gr_direct_expr(l, lp, n) : DistExpr{};
    std::ostringstream csv;
    csv << "r,rp,value_ladder,value_direct\n";
    std::vector<std::string> rows(steps);
    auto worker = [&](int i) {
        std::ostringstream row;
        double r = rmax * (i + 1) / steps;
        for (int j = 0; j < steps; ++j) {
            double rp = rmax * (j + 1) / steps;
            row << std::setprecision(17) << r << "," << rp << ",";
            if (r == rp) {
                row << ",";  // diagonal excluded
            } else {
                row << eval_regular(lad, r, rp) << ",";
                if (have_direct) row << eval_regular(dir, r, rp);
            }
            row << "\n";
        }
        rows[i] = row.str();
    };
    {
        std::vector<std::future<void>> futs;
        for (int i = 0; i < steps; ++i)
            futs.push_back(std::async(std::launch::async, worker, i));
        for (auto& f : futs) f.get();
    }
    for (const std::string& s : rows) csv << s;
    std::ofstream out(out_file);
    if (!out) {
        std::cerr << "grid: cannot open " << out_file << "\n";
        return 1;
    }
    out << csv.str();
    return 0;
}

int cmd_triple(const std::vector<int>& orders, int n, const std::vector<double>& radii,
               bool json_out) {
    TripleResult res =
        reduce_triple(TripleSpec(orders[0], orders[1], orders[2], n), radii[0], radii[1], radii[2]);
    if (json_out) {
        ordered_json j;
        j["value"] = res.value;
        j["triangle_ok"] = res.triangle_ok;
        j["window"] = {res.u_minus, res.u_plus};
        j["L"] = res.L;
        j["terms_regular"] = res.terms_regular;
        j["terms_singular"] = res.terms_singular;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value: " << std::setprecision(17) << res.value << "\n"
                  << "triangle_ok: " << (res.triangle_ok ? "true" : "false") << "\n"
                  << "window: [" << res.u_minus << ", " << res.u_plus << "]  L: " << res.L << "\n";
    }
    return 0;
}

int cmd_multi(const std::vector<int>& orders, int n, const std::vector<double>& radii,
              bool json_out) {
    MultiResult res = evaluate_multi(MultiSpec(orders, radii, n));
    ordered_json tree = ordered_json::array();
    for (const auto& node : res.tree.nodes)
        tree.push_back({{"aux", node.aux}, {"pair", {node.pair_a, node.pair_b}}, {"L", node.L}});
    if (json_out) {
        ordered_json j;
        j["value"] = res.value;
        j["tree"] = {{"splits", tree}, {"leaf_orders", res.tree.leaf_orders}};
        j["refinement_levels"] = res.evaluations;
        j["error_estimate"] = res.error_estimate;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value: " << std::setprecision(17) << res.value
                  << "  (error estimate " << res.error_estimate << ")\n";
    }
    return 0;
}

int cmd_oracle(const std::vector<int>& orders, int n, const std::vector<double>& radii,
               const std::string& method, bool json_out) {
    QuadratureConfig cfg;
    if (method == "damping") cfg.accel = Accel::DampingRichardson;
    OracleReport rep = oscillatory_integral(orders, radii, n, cfg);
    if (json_out) {
        ordered_json j;
        j["value"] = rep.value;
        j["error_estimate"] = rep.error_estimate;
        j["method"] = rep.method;
        j["panels"] = rep.panels;
        j["diverged"] = rep.diverged;
        std::cout << j.dump() << "\n";
    } else {
        if (rep.diverged)
            std::cout << "diverged (distribution-valued integral; smear it instead)\n";
        else
            std::cout << "value: " << std::setprecision(10) << rep.value << " +- "
                      << rep.error_estimate << "  [" << rep.method << ", " << rep.panels
                      << " panels]\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-infinite spherical Bessel overlap integrals"};
    app.require_subcommand(1);

    int l = 0, lp = 0, n = 0;
    double r = 1.0, rp = 1.0;
    bool json_out = false;

    auto* dbl = app.add_subcommand("double", "two-SBF integral at a point");
    dbl->add_option("--l", l)->required();
    dbl->add_option("--lp", lp)->required();
    dbl->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    dbl->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    dbl->add_option("--rp", rp)->required()->check(CLI::PositiveNumber);
    dbl->add_flag("--json", json_out);

    auto* cf = app.add_subcommand("closed-form", "symbolic two-SBF expression as JSON");
    cf->add_option("--l", l)->required();
    cf->add_option("--lp", lp)->required();
    cf->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);

    double rmax = 2.0;
    int steps = 50;
    std::string out_file = "grid.csv";
    bool regular_only = false;
    auto* grid = app.add_subcommand("grid", "ladder vs direct CSV grid");
    grid->add_option("--l", l)->required();
    grid->add_option("--lp", lp)->required();
    grid->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    grid->add_option("--rmax", rmax)->check(CLI::PositiveNumber);
    grid->add_option("--steps", steps)->check(CLI::PositiveNumber);
    grid->add_option("--out", out_file)->required();
    grid->add_flag("--regular-only", regular_only);

    std::string orders_str, radii_str, method = "partition";
    auto* tri = app.add_subcommand("triple", "three-SBF integral");
    tri->add_option("--orders", orders_str)->required();
    tri->add_option("--n", n)->required();
    tri->add_option("--radii", radii_str)->required();
    tri->add_flag("--json", json_out);

    auto* multi = app.add_subcommand("multi", "N-SBF integral, N in [4,8]");
    multi->add_option("--orders", orders_str)->required();
    multi->add_option("--n", n)->required();
    multi->add_option("--radii", radii_str)->required();
    multi->add_flag("--json", json_out);

    auto* orc = app.add_subcommand("oracle", "independent numerical quadrature");
    orc->add_option("--orders", orders_str)->required();
    orc->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    orc->add_option("--radii", radii_str)->required();
    orc->add_option("--method", method)->check(CLI::IsMember({"partition", "damping"}));
    orc->add_flag("--json", json_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream sink;
        app.exit(e, sink, sink);
        std::cerr << sink.str();
        return kExitBadFlags;
    }

    try {
        if (dbl->parsed()) return cmd_double(l, lp, n, r, rp, json_out);
        if (cf->parsed()) return cmd_closed_form(l, lp, n);
        if (grid->parsed()) return cmd_grid(l, lp, n, rmax, steps, out_file, regular_only);
        std::vector<int> orders = parse_int_list(orders_str);
        std::vector<double> radii = parse_double_list(radii_str);
        if (orders.size() != radii.size()) {
            std::cerr << "orders and radii must have the same length\n";
            return kExitBadFlags;
        }
        if (tri->parsed()) {
            if (orders.size() != 3) {
                std::cerr << "triple requires exactly three orders\n";
                return kExitBadFlags;
            }
            return cmd_triple(orders, n, radii, json_out);
        }
        if (multi->parsed()) return cmd_multi(orders, n, radii, json_out);
        if (orc->parsed()) return cmd_oracle(orders, n, radii, method, json_out);
    } catch (const DiagonalPoint& e) {
        std::cerr << e.what() << "\n";
        return kExitDiagonal;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadFlags;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return kExitBadFlags;
}
