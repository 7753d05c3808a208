#include "motzeta/json_io.hpp"

#include "motzeta/expr_parser.hpp"

namespace motzeta::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw Error(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw Error(where + ": expected an integer");
    return j.get<std::int64_t>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw Error(where + ": expected a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(where + ": expected an array");
    return j;
}

GrothElement parse_coeff(const json& j, const std::string& where) {
    if (j.is_number_integer()) return GrothElement(Integer(std::to_string(j.get<std::int64_t>())));
    const std::string text = as_string(j, where);
    try {
        return expr::parse_groth(text);
    } catch (const ParseError& e) {
        throw Error(where + ": " + e.what());
    }
}

}  // namespace

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(origin + ": invalid JSON (" + e.what() + ")");
    }
}

ModelDocument model_from_json(const json& j) {
    if (!j.is_object()) throw Error("model: expected a JSON object");
    ModelDocument doc;
    const json& comps = as_array(field(j, "components", "model"), "model.components");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string where = "model.components[" + std::to_string(i) + "]";
        Component c;
        c.name = as_string(field(comps[i], "name", where), where + ".name");
        c.N = as_int(field(comps[i], "N", where), where + ".N");
        c.nu = as_int(field(comps[i], "nu", where), where + ".nu");
        doc.model.components.push_back(std::move(c));
    }
    const json& strata = as_array(field(j, "strata", "model"), "model.strata");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string where = "model.strata[" + std::to_string(i) + "]";
        Stratum s;
        for (const auto& name : as_array(field(strata[i], "J", where), where + ".J"))
            s.J.push_back(as_string(name, where + ".J"));
        s.cls = parse_coeff(field(strata[i], "class", where), where + ".class");
        if (strata[i].contains("torsor_order"))
            s.torsor_order = static_cast<int>(as_int(strata[i].at("torsor_order"), where + ".torsor_order"));
        doc.model.strata.push_back(std::move(s));
    }
    if (j.contains("chi")) {
        const json& chi = j.at("chi");
        if (!chi.is_object()) throw Error("model.chi: expected an object");
        std::map<std::string, std::int64_t> values;
        for (const auto& [name, v] : chi.items()) values[name] = as_int(v, "model.chi." + name);
        doc.model.chi = std::move(values);
    }
    if (j.contains("rewrites")) {
        const json& rw = as_array(j.at("rewrites"), "model.rewrites");
        for (std::size_t i = 0; i < rw.size(); ++i) {
            const std::string where = "model.rewrites[" + std::to_string(i) + "]";
            RewriteRule r;
            r.lhs = as_string(field(rw[i], "lhs", where), where + ".lhs");
            if (!is_valid_symbol_name(r.lhs)) throw Error(where + ": '" + r.lhs + "' is not a class symbol");
            r.rhs = parse_coeff(field(rw[i], "rhs", where), where + ".rhs");
            doc.rewrites.push_back(std::move(r));
        }
        check_acyclic(doc.rewrites);
    }
    return doc;
}

json model_to_json(const SncModel& model, const std::vector<RewriteRule>& rewrites) {
    json j;
    j["components"] = json::array();
    for (const auto& c : model.components) j["components"].push_back({{"name", c.name}, {"N", c.N}, {"nu", c.nu}});
    j["strata"] = json::array();
    for (const auto& s : model.strata) {
        json st = {{"J", s.J}, {"class", s.cls.to_string()}};
        if (s.torsor_order) st["torsor_order"] = *s.torsor_order;
        j["strata"].push_back(std::move(st));
    }
    if (model.chi) j["chi"] = *model.chi;
    if (!rewrites.empty()) {
        j["rewrites"] = json::array();
        for (const auto& r : rewrites) j["rewrites"].push_back({{"lhs", r.lhs}, {"rhs", r.rhs.to_string()}});
    }
    return j;
}

bool is_zeta_document(const json& j) { return j.is_object() && j.contains("format") && j.contains("terms"); }

ZetaFunction zeta_from_json(const json& j) {
    if (!is_zeta_document(j)) throw Error("zeta: expected an object with 'format' and 'terms'");
    if (!j.at("format").is_number_integer() || j.at("format").get<int>() != 1)
        throw Error("zeta: unsupported format (expected 1)");
    std::vector<ZetaTerm> terms;
    const json& ts = as_array(j.at("terms"), "zeta.terms");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string where = "zeta.terms[" + std::to_string(i) + "]";
        ZetaTerm t;
        for (const auto& mono : as_array(field(ts[i], "numerator", where), where + ".numerator")) {
            const std::int64_t k = as_int(field(mono, "T", where), where + ".numerator.T");
            if (k < 0) throw Error(where + ": negative T-exponent");
            t.numerator.add(k, parse_coeff(field(mono, "coeff", where), where + ".numerator.coeff"));
        }
        for (const auto& f : as_array(field(ts[i], "denominator", where), where + ".denominator")) {
            if (!f.is_array() || f.size() != 2) throw Error(where + ": denominator factors are [a, b] pairs");
            try {
                t.denominator[DenFactor(as_int(f[0], where), as_int(f[1], where))] += 1;
            } catch (const Error& e) {
                throw Error(where + ": " + e.what());
            }
        }
        terms.push_back(std::move(t));
    }
    return ZetaFunction(std::move(terms));
}

json zeta_to_json(const ZetaFunction& z) {
    json terms = json::array();
    for (const auto& t : z.terms()) {
        json num = json::array();
        for (const auto& [k, c] : t.numerator.coeffs()) num.push_back({{"T", k}, {"coeff", c.to_string()}});
        json den = json::array();
        for (const auto& [f, e] : t.denominator)
            for (int r = 0; r < e; ++r) den.push_back({f.a, f.b});
        terms.push_back({{"numerator", std::move(num)}, {"denominator", std::move(den)}});
    }
    return {{"format", 1}, {"terms", std::move(terms)}};
}

EpAssignment ep_from_json(const json& j) {
    if (!j.is_object()) throw Error("EP assignment: expected an object mapping symbols to polynomials in w");
    EpAssignment ep;
    for (const auto& [name, v] : j.items()) {
        if (name == "L") throw Error("EP assignment: L is fixed to w^2 and cannot be assigned");
        if (!is_valid_symbol_name(name)) throw Error("EP assignment: '" + name + "' is not a class symbol");
        try {
            if (v.is_number_integer())
                ep.set(name, LaurentPoly(Integer(std::to_string(v.get<std::int64_t>()))));
            else
                ep.set(name, expr::parse_laurent(as_string(v, "EP assignment." + name)));
        } catch (const ParseError& e) {
            throw Error("EP assignment." + name + ": " + e.what());
        }
    }
    return ep;
}

json ep_to_json(const EpAssignment& ep) {
    json j = json::object();
    for (const auto& [name, p] : ep.values()) j[name] = p.to_string();
    return j;
}

json fractions_to_json(const std::set<Fraction>& s) {
    json a = json::array();
    for (const auto& f : s) a.push_back(f.to_string());
    return a;
}

json report_to_json(const PoleReport& r) {
    json details = json::array();
    for (const auto& d : r.details) {
        json e = {{"pole", d.pole.to_string()},
                  {"certified", d.certified},
                  {"factor", d.factor.to_string()}};
        if (d.k) {
            e["k"] = *d.k;
            e["common_factor"] = d.common_factor;
        }
        details.push_back(std::move(e));
    }
    return {{"candidates", fractions_to_json(r.candidates)},
            {"certified", fractions_to_json(r.certified)},
            {"uncertified", fractions_to_json(r.uncertified)},
            {"details", std::move(details)}};
}

json series_to_json(const std::vector<CoeffFraction>& coeffs) {
    json a = json::array();
    for (const auto& c : coeffs) a.push_back(c.to_string());
    return a;
}

}  // namespace motzeta::io
