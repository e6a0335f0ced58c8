#include "coulomb/io.hpp"

#include <algorithm>
#include <fstream>

namespace coulomb {

namespace {

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw StructuralError("json: expected integer or decimal string");
}

}  // namespace

nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["x_rank"] = s.x_rank();
    j["order"] = s.order();
    std::vector<std::pair<BiDegree, Rational>> ordered(s.terms().begin(), s.terms().end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.t != b.first.t) return a.first.t < b.first.t;
        return a.first.x > b.first.x;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [d, c] : ordered) {
        nlohmann::json term;
        term["t"] = d.t;
        term["x"] = d.x;
        term["num"] = int_to_json(c.num());
        term["den"] = int_to_json(c.den());
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
    TruncatedSeries s(j.at("x_rank").get<int>(), j.at("order").get<int64_t>());
    for (const auto& term : j.at("terms")) {
        BiDegree d;
        d.t = term.at("t").get<int64_t>();
        d.x = term.at("x").get<std::vector<int64_t>>();
        s.add_term(d, Rational(int_from_json(term.at("num")), int_from_json(term.at("den"))));
    }
    return s;
}

nlohmann::json theory_to_json(const TheorySpec& t) {
    nlohmann::json j;
    j["factors"] = t.group.factor_ranks;
    j["flavor_rank"] = t.flavor_rank;
    nlohmann::json matter = nlohmann::json::array();
    for (const auto& w : t.matter) {
        nlohmann::json jw;
        jw["gauge"] = w.gauge;
        jw["flavor"] = w.flavor;
        matter.push_back(std::move(jw));
    }
    j["matter"] = std::move(matter);
    return j;
}

TheorySpec theory_from_json(const nlohmann::json& j) {
    TheorySpec t;
    t.group.factor_ranks = j.at("factors").get<std::vector<int>>();
    t.flavor_rank = j.at("flavor_rank").get<int>();
    for (const auto& jw : j.at("matter")) {
        MatterWeight w;
        w.gauge = jw.at("gauge").get<std::vector<std::vector<int64_t>>>();
        w.flavor = jw.at("flavor").get<std::vector<int64_t>>();
        t.matter.push_back(std::move(w));
    }
    if (j.contains("gauge_var_names"))
        t.gauge_var_names = j.at("gauge_var_names").get<std::vector<std::string>>();
    if (j.contains("flavor_node_of_slot"))
        t.flavor_node_of_slot = j.at("flavor_node_of_slot").get<std::vector<int>>();
    t.validate();
    return t;
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["suite"] = r.name;
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        if (!c.expected.empty()) jc["expected"] = c.expected;
        if (!c.actual.empty()) jc["actual"] = c.actual;
        cases.push_back(std::move(jc));
    }
    j["cases"] = std::move(cases);
    j["failures"] = r.failures();
    return j;
}

nlohmann::json element_to_json(const RingElement& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [idx, poly] : e.support()) {
        nlohmann::json jt;
        jt["gauge"] = idx.gauge;
        jt["flavor"] = idx.flavor;
        nlohmann::json coeff = nlohmann::json::array();
        for (const auto& [exps, c] : poly.terms()) {
            nlohmann::json jm;
            jm["exps"] = exps;
            jm["num"] = int_to_json(c.num());
            jm["den"] = int_to_json(c.den());
            coeff.push_back(std::move(jm));
        }
        jt["coeff"] = std::move(coeff);
        terms.push_back(std::move(jt));
    }
    nlohmann::json j;
    j["terms"] = std::move(terms);
    return j;
}

SpecFile resolve_spec(const std::string& spec) {
    if (spec == "trivial" || spec.find(':') != std::string::npos)
        return {parse_preset(spec), std::nullopt, std::nullopt};
    std::ifstream in(spec);
    if (!in) throw StructuralError("cannot open theory spec file '" + spec + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("bad JSON in '" + spec + "': " + e.what());
    }
    try {
        SpecFile out{theory_from_json(j), std::nullopt, std::nullopt};
        if (j.contains("kappa")) out.kappa = j.at("kappa").get<std::vector<int64_t>>();
        if (j.contains("order")) out.order = j.at("order").get<int64_t>();
        if (out.kappa &&
            static_cast<int>(out.kappa->size()) != out.theory.flavor_rank)
            throw StructuralError("spec file kappa length != flavor rank");
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("bad theory schema in '" + spec + "': " + e.what());
    }
}

TheorySpec resolve_theory(const std::string& spec) { return resolve_spec(spec).theory; }

}  // namespace coulomb
