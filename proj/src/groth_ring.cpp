#include "motzeta/groth_ring.hpp"

#include "format_util.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace motzeta {

// ---- SymbolRegistry ----

void SymbolRegistry::add(ClassSymbol symbol) {
    if (!is_valid_symbol_name(symbol.name)) throw Error("invalid class symbol name '" + symbol.name + "'");
    if (symbol.torsor_order && *symbol.torsor_order < 1)
        throw Error("torsor order of '" + symbol.name + "' must be positive");
    std::unique_lock lock(mutex_);
    auto it = symbols_.find(symbol.name);
    if (it == symbols_.end()) {
        symbols_.emplace(symbol.name, std::move(symbol));
        return;
    }
    if (it->second.torsor_order != symbol.torsor_order)
        throw Error("class symbol '" + symbol.name + "' registered twice with different torsor orders");
}

std::optional<ClassSymbol> SymbolRegistry::find(const std::string& name) const {
    std::shared_lock lock(mutex_);
    auto it = symbols_.find(name);
    if (it == symbols_.end()) return std::nullopt;
    return it->second;
}

bool SymbolRegistry::contains(const std::string& name) const {
    std::shared_lock lock(mutex_);
    return symbols_.contains(name);
}

std::vector<ClassSymbol> SymbolRegistry::all() const {
    std::shared_lock lock(mutex_);
    std::vector<ClassSymbol> out;
    for (const auto& [_, s] : symbols_) out.push_back(s);
    return out;
}

bool is_valid_symbol_name(const std::string& name) {
    if (name.empty() || name == "L") return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// ---- Monomial ----

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.l_exponent = a.l_exponent + b.l_exponent;
    r.powers.reserve(a.powers.size() + b.powers.size());
    auto i = a.powers.begin(), j = b.powers.begin();
    while (i != a.powers.end() && j != b.powers.end()) {
        if (i->first < j->first) {
            r.powers.push_back(*i++);
        } else if (j->first < i->first) {
            r.powers.push_back(*j++);
        } else {
            r.powers.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    r.powers.insert(r.powers.end(), i, a.powers.end());
    r.powers.insert(r.powers.end(), j, b.powers.end());
    return r;
}

// ---- GrothElement ----

GrothElement::GrothElement(long c) : GrothElement(Integer(c)) {}

GrothElement::GrothElement(Integer c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

GrothElement GrothElement::symbol(const std::string& name, std::uint32_t exponent) {
    if (!is_valid_symbol_name(name)) throw Error("invalid class symbol name '" + name + "'");
    Monomial m;
    if (exponent > 0) m.powers.emplace_back(name, exponent);
    return monomial(Integer(1), std::move(m));
}

GrothElement GrothElement::lefschetz(std::int64_t k) { return monomial(Integer(1), Monomial{k, {}}); }

GrothElement GrothElement::monomial(Integer c, Monomial m) {
    GrothElement g;
    if (c != 0) g.terms_.emplace(std::move(m), std::move(c));
    return g;
}

GrothElement GrothElement::from_l_poly(const LaurentPoly& p) {
    GrothElement g;
    for (const auto& [e, c] : p.terms()) g.terms_.emplace(Monomial{e, {}}, c);
    return g;
}

std::set<std::string> GrothElement::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, _] : terms_)
        for (const auto& [s, e] : m.powers) out.insert(s);
    return out;
}

std::optional<std::pair<int, std::int64_t>> GrothElement::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (!m.is_pure_l()) return std::nullopt;
    if (c == 1) return std::make_pair(1, m.l_exponent);
    if (c == -1) return std::make_pair(-1, m.l_exponent);
    return std::nullopt;
}

bool GrothElement::is_pure_l() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_pure_l(); });
}

LaurentPoly GrothElement::to_l_poly() const {
    LaurentPoly p;
    for (const auto& [m, c] : terms_) {
        if (!m.is_pure_l()) throw Error("element involves class symbols: " + to_string());
        p += LaurentPoly::monomial(c, m.l_exponent);
    }
    return p;
}

void GrothElement::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GrothElement& GrothElement::operator+=(const GrothElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GrothElement& GrothElement::operator-=(const GrothElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GrothElement operator*(const GrothElement& a, const GrothElement& b) {
    GrothElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

GrothElement GrothElement::operator-() const { return scaled(Integer(-1)); }

GrothElement GrothElement::scaled(const Integer& c) const {
    if (c == 0) return {};
    GrothElement r = *this;
    for (auto& [_, x] : r.terms_) x *= c;
    return r;
}

GrothElement GrothElement::times_l(std::int64_t k) const {
    if (k == 0) return *this;
    GrothElement r;
    for (const auto& [m, c] : terms_) {
        Monomial shifted = m;
        shifted.l_exponent += k;
        r.terms_.emplace_hint(r.terms_.end(), std::move(shifted), c);
    }
    return r;
}

GrothElement GrothElement::pow(std::int64_t e) const {
    if (e < 0) {
        auto unit = as_unit();
        if (!unit) throw Error("negative power of a non-unit: " + to_string());
        int sign = (unit->first < 0 && (-e) % 2 == 1) ? -1 : 1;
        return lefschetz(unit->second * e).scaled(Integer(sign));
    }
    GrothElement result(1L), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::optional<GrothElement> GrothElement::divide_exact(const GrothElement& l_only) const {
    const LaurentPoly divisor = l_only.to_l_poly();
    std::map<std::vector<std::pair<std::string, std::uint32_t>>, LaurentPoly> groups;
    for (const auto& [m, c] : terms_) groups[m.powers] += LaurentPoly::monomial(c, m.l_exponent);
    GrothElement out;
    for (const auto& [powers, p] : groups) {
        auto q = p.divide_exact(divisor);
        if (!q) return std::nullopt;
        for (const auto& [e, c] : q->terms()) out.add_term(Monomial{e, powers}, c);
    }
    return out;
}

GrothElement GrothElement::substitute(
    const std::function<std::optional<GrothElement>(const std::string&)>& f) const {
    GrothElement out;
    std::map<std::string, std::optional<GrothElement>> cache;
    for (const auto& [m, c] : terms_) {
        GrothElement term = monomial(c, Monomial{m.l_exponent, {}});
        Monomial kept{0, {}};
        for (const auto& [s, e] : m.powers) {
            auto it = cache.find(s);
            if (it == cache.end()) it = cache.emplace(s, f(s)).first;
            if (it->second)
                term = term * it->second->pow(e);
            else
                kept.powers.emplace_back(s, e);
        }
        out += term * monomial(Integer(1), std::move(kept));
    }
    return out;
}

namespace {

std::string monomial_body(const Monomial& m) {
    std::string body = detail::power("L", m.l_exponent);
    for (const auto& [s, e] : m.powers) body = detail::join_product(body, detail::power(s, e));
    return body;
}

std::string latex_power(const std::string& base, std::int64_t e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return base + "^{" + std::to_string(e) + "}";
}

}  // namespace

std::string GrothElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) detail::append_term(out, c, monomial_body(m));
    return out;
}

std::string GrothElement::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string body = latex_power("\\mathbb{L}", m.l_exponent);
        for (const auto& [s, e] : m.powers) {
            if (!body.empty()) body += " ";
            body += latex_power("[\\mathrm{" + s + "}]", e);
        }
        const bool negative = sgn(c) < 0;
        Integer mag = abs(c);
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (body.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += body;
        else
            out += mag.get_str() + " " + body;
    }
    return out;
}

// ---- rewriting ----

void check_acyclic(std::span<const RewriteRule> rules) {
    std::map<std::string, const RewriteRule*> by_lhs;
    for (const auto& r : rules) {
        if (!by_lhs.emplace(r.lhs, &r).second) throw Error("duplicate rewrite rule for '" + r.lhs + "'");
    }
    enum class Mark { Unvisited, Active, Done };
    std::map<std::string, Mark> mark;
    std::vector<std::string> stack;
    std::function<void(const std::string&)> visit = [&](const std::string& s) {
        mark[s] = Mark::Active;
        stack.push_back(s);
        for (const auto& next : by_lhs.at(s)->rhs.symbols()) {
            if (!by_lhs.contains(next)) continue;
            Mark m = mark[next];
            if (m == Mark::Active) {
                auto start = std::find(stack.begin(), stack.end(), next);
                std::vector<std::string> cycle(start, stack.end());
                cycle.push_back(next);
                throw CycleError(std::move(cycle));
            }
            if (m == Mark::Unvisited) visit(next);
        }
        stack.pop_back();
        mark[s] = Mark::Done;
    };
    for (const auto& [lhs, _] : by_lhs)
        if (mark[lhs] == Mark::Unvisited) visit(lhs);
}

GrothElement rewrite(const GrothElement& a, std::span<const RewriteRule> rules) {
    if (rules.empty()) return a;
    check_acyclic(rules);
    std::map<std::string, GrothElement> table;
    for (const auto& r : rules) table.emplace(r.lhs, r.rhs);
    auto lookup = [&](const std::string& s) -> std::optional<GrothElement> {
        auto it = table.find(s);
        if (it == table.end()) return std::nullopt;
        return it->second;
    };
    GrothElement current = a;
    while (true) {
        auto syms = current.symbols();
        if (std::none_of(syms.begin(), syms.end(), [&](const std::string& s) { return table.contains(s); }))
            return current;
        current = current.substitute(lookup);
    }
}

// ---- Euler-Poincare realization ----

EpAssignment::EpAssignment(std::map<std::string, LaurentPoly> values) : values_(std::move(values)) {}

void EpAssignment::set(const std::string& symbol, LaurentPoly value) { values_[symbol] = std::move(value); }

const LaurentPoly& EpAssignment::at(const std::string& symbol) const {
    auto it = values_.find(symbol);
    if (it == values_.end()) throw UnassignedSymbolError(symbol);
    return it->second;
}

LaurentPoly ep_realize(const GrothElement& a, const EpAssignment& ep) {
    LaurentPoly out;
    for (const auto& [m, c] : a.terms()) {
        LaurentPoly term = LaurentPoly::monomial(c, 2 * m.l_exponent);
        for (const auto& [s, e] : m.powers) term = term * ep.at(s).pow(e);
        out += term;
    }
    return out;
}

}  // namespace motzeta
