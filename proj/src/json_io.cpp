// SPDX-License-Identifier: Apache-2.0
#include "rok/json_io.hpp"

#include <ostream>

namespace rok {

namespace {

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        require(ok, "unknown key in JSON object: " + key);
    }
}

std::vector<std::pair<double, double>> pair_list(const json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array of [a, b] pairs");
    std::vector<std::pair<double, double>> out;
    for (const json& e : j) {
        require(e.is_array() && e.size() == 2, std::string(what) + " entries must be pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

}  // namespace

json to_json(const DecreasingStep& f) {
    json arr = json::array();
    for (const Plateau& p : f.plateaus()) arr.push_back({p.length, p.value});
    return json{{"plateaus", arr}};
}

DecreasingStep step_from_json(const json& j) {
    reject_unknown_keys(j, {"plateaus"});
    require(j.contains("plateaus"), "step JSON must contain \"plateaus\"");
    std::vector<Plateau> ps;
    for (const auto& [l, v] : pair_list(j.at("plateaus"), "plateaus")) ps.push_back({l, v});
    return DecreasingStep::canonical(std::move(ps));
}

json to_json(const DiscreteDistribution& d) {
    json arr = json::array();
    for (const Atom& a : d.atoms()) arr.push_back({a.value, a.mass});
    return json{{"atoms", arr}};
}

DiscreteDistribution law_from_json(const json& j) {
    reject_unknown_keys(j, {"atoms"});
    require(j.contains("atoms"), "law JSON must contain \"atoms\"");
    std::vector<Atom> atoms;
    for (const auto& [v, m] : pair_list(j.at("atoms"), "atoms")) atoms.push_back({v, m});
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

OrliczFunction orlicz_from_json(const json& j) {
    require(j.is_object() && j.contains("family"), "Orlicz spec must contain \"family\"");
    const std::string family = j.at("family").get<std::string>();
    if (family == "power") {
        reject_unknown_keys(j, {"family", "p"});
        return OrliczFunction::power(j.at("p").get<double>());
    }
    if (family == "Mp") {
        reject_unknown_keys(j, {"family", "p"});
        return OrliczFunction::mp(j.at("p").get<double>());
    }
    if (family == "Nn") {
        reject_unknown_keys(j, {"family", "q", "n"});
        return OrliczFunction::nn(j.at("q").get<double>(), j.at("n").get<int>());
    }
    if (family == "Mn") {
        reject_unknown_keys(j, {"family", "q", "n"});
        return OrliczFunction::mn(j.at("q").get<double>(), j.at("n").get<int>());
    }
    if (family == "Mny") {
        reject_unknown_keys(j, {"family", "p", "n", "y"});
        const auto y = j.at("y").get<std::vector<double>>();
        if (j.contains("n"))
            require(j.at("n").get<int>() == static_cast<int>(y.size()), "Mny: n must match |y|");
        return OrliczFunction::mny(j.at("p").get<double>(), y);
    }
    if (family == "NM") {
        reject_unknown_keys(j, {"family", "base", "p"});
        return OrliczFunction::nm(orlicz_from_json(j.at("base")), j.at("p").get<double>());
    }
    if (family == "MaxP2") {
        reject_unknown_keys(j, {"family", "p"});
        return OrliczFunction::max_p2(j.at("p").get<double>());
    }
    if (family == "tabulated") {
        reject_unknown_keys(j, {"family", "points"});
        const OrliczFunction m = OrliczFunction::tabulated(pair_list(j.at("points"), "points"));
        require(orlicz_grid_check(m), "tabulated Orlicz function fails the convexity grid check");
        return m;
    }
    throw PreconditionError("unknown Orlicz family: " + family);
}

QuasiConcaveFn quasiconcave_from_json(const json& j) {
    require(j.is_object() && j.contains("form"), "quasi-concave spec must contain \"form\"");
    const std::string form = j.at("form").get<std::string>();
    if (form == "power") {
        reject_unknown_keys(j, {"form", "theta"});
        return QuasiConcaveFn::power(j.at("theta").get<double>());
    }
    if (form == "from_M") {
        reject_unknown_keys(j, {"form", "M", "p"});
        return phi_from_M(orlicz_from_json(j.at("M")), j.at("p").get<double>());
    }
    if (form == "grid") {
        reject_unknown_keys(j, {"form", "points"});
        return QuasiConcaveFn::from_grid(pair_list(j.at("points"), "points"));
    }
    throw PreconditionError("unknown quasi-concave form: " + form);
}

// wall time stays out of the serialized form so emitted reports are
// deterministic functions of (inputs, flags, seed)
json to_json(const VerificationReport& r) {
    return json{{"check", r.check},
                {"params", r.params},
                {"inputs_digest", r.inputs_digest},
                {"max_deviation", r.max_deviation},
                {"bound", {r.band_low, r.band_high}},
                {"ratio", {r.ratio_min, r.ratio_max}},
                {"report_only", r.report_only},
                {"pass", r.pass},
                {"seed", r.seed},
                {"note", r.note}};
}

std::string report_csv_header() {
    return "check,params,ratio_min,ratio_max,band_low,band_high,pass";
}

std::string report_csv_row(const VerificationReport& r) {
    json row = json::array({r.ratio_min, r.ratio_max, r.band_low, r.band_high});
    std::string nums;
    for (const json& v : row) {
        nums += ',';
        nums += v.dump();
    }
    return r.check + ",\"" + r.params + "\"" + nums + "," + (r.pass ? "true" : "false");
}

void write_jsonl(const std::vector<VerificationReport>& rs, std::ostream& os) {
    for (const VerificationReport& r : rs) os << to_json(r).dump() << '\n';
}

void write_csv(const std::vector<VerificationReport>& rs, std::ostream& os) {
    os << report_csv_header() << '\n';
    for (const VerificationReport& r : rs) os << report_csv_row(r) << '\n';
}

}  // namespace rok
