#include "motzeta/snc_model.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace motzeta {

const Component* SncModel::find(const std::string& name) const {
    for (const auto& c : components)
        if (c.name == name) return &c;
    return nullptr;
}

std::int64_t SncModel::stratum_multiplicity(const Stratum& s) const {
    std::int64_t g = 0;
    for (const auto& name : s.J)
        if (const Component* c = find(name); c && c->is_vertical()) g = std::gcd(g, c->N);
    return g;
}

std::vector<std::string> validation_errors(const SncModel& model) {
    std::vector<std::string> errors;
    std::set<std::string> names;
    for (const auto& c : model.components) {
        if (!is_valid_symbol_name(c.name)) errors.push_back("invalid component name '" + c.name + "'");
        if (!names.insert(c.name).second) errors.push_back("duplicate component name '" + c.name + "'");
        if (c.N < 0) errors.push_back("component '" + c.name + "' has negative multiplicity");
        if (c.N == 0 && c.nu <= 0)
            errors.push_back("component '" + c.name + "': nu_i>0 whenever N_i=0 violated (horizontal component with nu = " +
                             std::to_string(c.nu) + ")");
    }
    std::set<std::set<std::string>> seen;
    bool meets_vertical = false;
    for (std::size_t i = 0; i < model.strata.size(); ++i) {
        const Stratum& s = model.strata[i];
        const std::string label = "stratum #" + std::to_string(i + 1);
        if (s.J.empty()) {
            errors.push_back(label + " has an empty index set");
            continue;
        }
        std::set<std::string> J(s.J.begin(), s.J.end());
        if (J.size() != s.J.size()) errors.push_back(label + " lists a component twice");
        if (!seen.insert(J).second) errors.push_back(label + " repeats an index set already used");
        bool known = true;
        for (const auto& name : J) {
            const Component* c = model.find(name);
            if (!c) {
                errors.push_back(label + " names unknown component '" + name + "'");
                known = false;
            } else if (c->is_vertical()) {
                meets_vertical = true;
            }
        }
        if (s.torsor_order) {
            if (*s.torsor_order < 1) {
                errors.push_back(label + " has non-positive torsor order");
            } else if (known) {
                std::int64_t nj = model.stratum_multiplicity(s);
                if (nj > 0 && nj != *s.torsor_order)
                    errors.push_back(label + " declares torsor order " + std::to_string(*s.torsor_order) +
                                     " but N_J = " + std::to_string(nj));
            }
        }
    }
    if (!meets_vertical) errors.push_back("no stratum meets a vertical component");
    if (model.chi)
        for (const auto& [name, value] : *model.chi)
            if (!model.find(name)) errors.push_back("chi given for unknown component '" + name + "'");
    return errors;
}

void validate(const SncModel& model) {
    auto errors = validation_errors(model);
    if (!errors.empty()) throw ValidationError(std::move(errors));
}

ZetaFunction compute_zeta(const SncModel& model) {
    validate(model);
    const GrothElement l_minus_one = GrothElement::lefschetz(1) - GrothElement(1L);
    ZetaFunction z;
    for (const auto& s : model.strata) {
        if (s.cls.is_zero() || model.stratum_multiplicity(s) == 0) continue;
        GrothElement coeff = s.cls * l_minus_one.pow(static_cast<std::int64_t>(s.J.size()) - 1);
        std::int64_t l_exp = 0, t_exp = 0;
        std::vector<DenFactor> factors;
        for (const auto& name : s.J) {
            const Component& c = *model.find(name);
            l_exp -= c.nu;
            t_exp += c.N;
            factors.emplace_back(-c.nu, c.N);
        }
        z += ZetaFunction::term(coeff.times_l(l_exp), t_exp, factors);
    }
    return z;
}

// ---- A'Campo ----

FactoredRationalU::FactoredRationalU(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors) {
    for (const auto& [n, e] : factors) {
        if (n < 1) throw Error("factor u^N - 1 needs N >= 1");
        factors_[n] += e;
    }
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
}

FactoredRationalU& FactoredRationalU::operator*=(const FactoredRationalU& o) {
    for (const auto& [n, e] : o.factors_) factors_[n] += e;
    std::erase_if(factors_, [](const auto& kv) { return kv.second == 0; });
    return *this;
}

std::string FactoredRationalU::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [n, e] : factors_) {
        if (!out.empty()) out += "*";
        out += n == 1 ? "(u - 1)" : "(u^" + std::to_string(n) + " - 1)";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

FactoredRationalU acampo_zeta(const SncModel& model) {
    std::vector<std::string> missing;
    std::vector<std::pair<std::int64_t, std::int64_t>> factors;
    for (const auto& c : model.components) {
        if (!c.is_vertical()) continue;
        if (!model.chi || !model.chi->contains(c.name)) {
            missing.push_back(c.name);
            continue;
        }
        factors.emplace_back(c.N, -model.chi->at(c.name));
    }
    if (!missing.empty()) {
        std::string names;
        for (const auto& m : missing) names += (names.empty() ? "" : ", ") + m;
        throw Error("missing chi for vertical component(s): " + names);
    }
    return FactoredRationalU(factors);
}

std::map<std::int64_t, std::int64_t> cyclotomic_refactor(const FactoredRationalU& z) {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [n, e] : z.factors())
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) out[d] += e;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

IntPoly cyclotomic_polynomial(std::int64_t d) {
    if (d < 1) throw Error("cyclotomic index must be positive");
    static std::mutex mutex;
    static std::map<std::int64_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    IntPoly p = IntPoly::monomial(Integer(1), static_cast<std::size_t>(d)) - IntPoly(1L);
    for (std::int64_t e = 1; e < d; ++e)
        if (d % e == 0) p = *p.divide_exact(cyclotomic_polynomial(e));
    std::lock_guard lock(mutex);
    cache.emplace(d, p);
    return p;
}

}  // namespace motzeta
