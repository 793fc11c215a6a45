#include <json.hpp>

#include "sbf/dist_expr.hpp"

namespace sbfint {

namespace {

using nlohmann::ordered_json;

ordered_json bigint_json(const BigInt& v) {
    if (v.fits_int64()) {
        long long x = v.to_int64();
        if (x >= -((long long)1 << 53) && x <= ((long long)1 << 53)) return x;
    }
    return v.to_string();
}

BigInt bigint_from(const ordered_json& j) {
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    return BigInt(j.get<long long>());
}

ordered_json term_json(const Term& t) {
    ordered_json j;
    switch (t.region.kind) {
        case RegionKind::HeavisidePrimeGreater: j["region"] = "H(r'>r)"; break;
        case RegionKind::HeavisideGreater: j["region"] = "H(r>r')"; break;
        case RegionKind::DeltaDerivative: j["region"] = {{"delta_deriv", t.region.delta_order}}; break;
    }
    j["coeff"] = {{"num", bigint_json(t.coeff.q.num())},
                  {"den", bigint_json(t.coeff.q.den())},
                  {"pi_pow", t.coeff.pi_pow}};
    if (t.gamma)
        j["gamma"] = {{"kind", *t.gamma == GammaTag::CGammaPrimeGreater ? "c_gamma_rp_greater"
                                                                        : "c_gamma_r_greater"}};
    else
        j["gamma"] = nullptr;
    j["pow_r"] = t.pow_r;
    j["pow_rp"] = t.pow_rp;
    if (t.hyper)
        j["hyper"] = {{"orientation",
                       t.hyper->orientation == HyperOrientation::Primed ? "primed" : "unprimed"},
                      {"x", t.hyper->x},
                      {"y", t.hyper->y},
                      {"z", t.hyper->z}};
    else
        j["hyper"] = nullptr;
    return j;
}

Term term_from(const ordered_json& j) {
    Term t;
    const auto& reg = j.at("region");
    if (reg.is_string()) {
        std::string s = reg.get<std::string>();
        if (s == "H(r'>r)") t.region = {RegionKind::HeavisidePrimeGreater, 0};
        else if (s == "H(r>r')") t.region = {RegionKind::HeavisideGreater, 0};
        else throw std::invalid_argument("unknown region string: " + s);
    } else {
        t.region = {RegionKind::DeltaDerivative, reg.at("delta_deriv").get<int>()};
    }
    t.coeff.q = Rational(bigint_from(j.at("coeff").at("num")), bigint_from(j.at("coeff").at("den")));
    t.coeff.pi_pow = j.at("coeff").at("pi_pow").get<int>();
    if (!j.at("gamma").is_null()) {
        std::string k = j.at("gamma").at("kind").get<std::string>();
        t.gamma = k == "c_gamma_rp_greater" ? GammaTag::CGammaPrimeGreater : GammaTag::CGammaGreater;
    }
    t.pow_r = j.at("pow_r").get<int>();
    t.pow_rp = j.at("pow_rp").get<int>();
    if (!j.at("hyper").is_null()) {
        HyperDescriptor h;
        h.orientation = j.at("hyper").at("orientation").get<std::string>() == "primed"
                            ? HyperOrientation::Primed
                            : HyperOrientation::Unprimed;
        h.x = j.at("hyper").at("x").get<int>();
        h.y = j.at("hyper").at("y").get<int>();
        h.z = j.at("hyper").at("z").get<int>();
        t.hyper = h;
    }
    return t;
}

}  // namespace

std::string dist_expr_to_json(const DistExpr& expr, bool pretty) {
    ordered_json j;
    j["ell"] = expr.ell;
    j["ellp"] = expr.ellp;
    j["n"] = expr.current_n;
    j["base_n"] = expr.base_n;
    j["terms"] = ordered_json::array();
    for (const Term& t : expr.terms) j["terms"].push_back(term_json(t));
    return pretty ? j.dump(2) : j.dump();
}

DistExpr dist_expr_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    DistExpr e;
    e.ell = j.at("ell").get<int>();
    e.ellp = j.at("ellp").get<int>();
    e.current_n = j.at("n").get<int>();
    e.base_n = j.contains("base_n") ? j.at("base_n").get<int>() : e.current_n % 2;
    for (const auto& tj : j.at("terms")) e.terms.push_back(term_from(tj));
    return e;
}

}  // namespace sbfint
