#include "motzeta/zeta_series.hpp"

#include "format_util.hpp"

#include <algorithm>
#include <numeric>

namespace motzeta {

// ---- DenFactor ----

DenFactor::DenFactor(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
    if (b < 0) throw Error("denominator factor with negative T-exponent");
    if (a == 0 && b == 0) throw Error("denominator factor (1 - L^0*T^0) is zero");
}

std::string DenFactor::to_string() const {
    return "(1 - " + detail::join_product(detail::power("L", a), detail::power("T", b)) + ")";
}

std::string DenFactor::to_latex() const {
    std::string body;
    if (a == 1) body = "\\mathbb{L}";
    else if (a != 0) body = "\\mathbb{L}^{" + std::to_string(a) + "}";
    if (b == 1) body += "T";
    else if (b > 1) body += "T^{" + std::to_string(b) + "}";
    return "(1 - " + body + ")";
}

// ---- TPolynomial ----

TPolynomial::TPolynomial(GrothElement c) { add(0, c); }

TPolynomial TPolynomial::monomial(GrothElement c, std::int64_t exponent) {
    if (exponent < 0) throw Error("negative T-exponent in numerator");
    TPolynomial p;
    p.add(exponent, c);
    return p;
}

TPolynomial TPolynomial::of_factor(const DenFactor& f) {
    TPolynomial p(GrothElement(1L));
    p -= monomial(GrothElement::lefschetz(f.a), f.b);
    return p;
}

void TPolynomial::add(std::int64_t k, const GrothElement& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GrothElement TPolynomial::coeff(std::int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? GrothElement() : it->second;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
    TPolynomial r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) r.add(ka + kb, ca * cb);
    return r;
}

TPolynomial TPolynomial::operator-() const {
    TPolynomial r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

std::optional<TPolynomial> TPolynomial::divide_exact(const TPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return TPolynomial();
    const std::int64_t dd = divisor.degree();
    if (dd == 0) {
        const GrothElement& c = divisor.coeffs_.begin()->second;
        TPolynomial q;
        for (const auto& [k, x] : coeffs_) {
            auto qk = x.divide_exact(c);
            if (!qk) return std::nullopt;
            q.add(k, *qk);
        }
        return q;
    }
    auto unit = divisor.coeffs_.rbegin()->second.as_unit();
    if (!unit) throw Error("divide_exact: leading coefficient of divisor is not a unit");
    const GrothElement inverse = GrothElement::lefschetz(-unit->second).scaled(Integer(unit->first));
    TPolynomial rem = *this, quot;
    while (!rem.is_zero() && rem.degree() >= dd) {
        const std::int64_t k = rem.degree();
        GrothElement q = rem.coeffs_.rbegin()->second * inverse;
        for (const auto& [j, c] : divisor.coeffs_) rem.add(k - dd + j, -(q * c));
        quot.add(k - dd, q);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

namespace {

// Renders c*T^k where c is a ring element; parenthesized when c is a sum.
void append_coeff_power(std::string& out, const GrothElement& c, const std::string& tpart, bool latex) {
    if (c.terms().size() == 1) {
        const auto& [m, coef] = *c.terms().begin();
        GrothElement mono = GrothElement::monomial(Integer(1), m);
        std::string body;
        if (!(m.l_exponent == 0 && m.is_pure_l())) body = latex ? mono.to_latex() : mono.to_string();
        if (latex) {
            std::string joined = body.empty() ? tpart : (tpart.empty() ? body : body + " " + tpart);
            const bool negative = sgn(coef) < 0;
            Integer mag = abs(coef);
            out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            if (joined.empty()) out += mag.get_str();
            else if (mag == 1) out += joined;
            else out += mag.get_str() + " " + joined;
        } else {
            detail::append_term(out, coef, detail::join_product(body, tpart));
        }
        return;
    }
    std::string part = "(" + (latex ? c.to_latex() : c.to_string()) + ")";
    if (!out.empty()) out += " + ";
    out += latex ? (tpart.empty() ? part : part + tpart) : detail::join_product(part, tpart);
}

std::string latex_t_power(std::int64_t k) {
    if (k == 0) return "";
    if (k == 1) return "T";
    return "T^{" + std::to_string(k) + "}";
}

}  // namespace

std::string TPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) append_coeff_power(out, c, detail::power("T", k), false);
    return out;
}

std::string TPolynomial::to_latex() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : coeffs_) append_coeff_power(out, c, latex_t_power(k), true);
    return out;
}

TPolynomial denominator_polynomial(const Denominator& d) {
    TPolynomial p(GrothElement(1L));
    for (const auto& [f, mult] : d)
        for (int i = 0; i < mult; ++i) p = p * TPolynomial::of_factor(f);
    return p;
}

namespace {

Denominator lcm(const Denominator& x, const Denominator& y) {
    Denominator out = x;
    for (const auto& [f, m] : y) out[f] = std::max(out[f], m);
    return out;
}

Denominator minus(const Denominator& x, const Denominator& y) {
    Denominator out;
    for (const auto& [f, m] : x) {
        auto it = y.find(f);
        int rest = m - (it == y.end() ? 0 : it->second);
        if (rest > 0) out[f] = rest;
    }
    return out;
}

Denominator common(const Denominator& x, const Denominator& y) {
    Denominator out;
    for (const auto& [f, m] : x) {
        auto it = y.find(f);
        if (it != y.end()) out[f] = std::min(m, it->second);
    }
    return out;
}

}  // namespace

// ---- ZetaFunction ----

ZetaFunction::ZetaFunction(std::vector<ZetaTerm> terms) {
    std::map<Denominator, TPolynomial> merged;
    for (auto& t : terms) {
        for (const auto& [f, m] : t.denominator)
            if (m <= 0) throw Error("denominator multiplicity must be positive");
        merged[t.denominator] += t.numerator;
    }
    for (auto& [d, n] : merged)
        if (!n.is_zero()) terms_.push_back({std::move(n), d});
}

ZetaFunction ZetaFunction::term(const GrothElement& c, std::int64_t k, const std::vector<DenFactor>& factors) {
    return term(TPolynomial::monomial(c, k), factors);
}

ZetaFunction ZetaFunction::term(TPolynomial numerator, const std::vector<DenFactor>& factors) {
    Denominator d;
    for (const auto& f : factors) ++d[f];
    return ZetaFunction({ZetaTerm{std::move(numerator), std::move(d)}});
}

std::set<std::string> ZetaFunction::symbols() const {
    std::set<std::string> out;
    for (const auto& t : terms_)
        for (const auto& [k, c] : t.numerator.coeffs()) {
            auto s = c.symbols();
            out.insert(s.begin(), s.end());
        }
    return out;
}

ZetaTerm ZetaFunction::combined() const {
    Denominator den;
    for (const auto& t : terms_) den = lcm(den, t.denominator);
    TPolynomial num;
    for (const auto& t : terms_) num += t.numerator * denominator_polynomial(minus(den, t.denominator));
    if (num.is_zero()) return {};
    return {std::move(num), std::move(den)};
}

ZetaFunction& ZetaFunction::operator+=(const ZetaFunction& o) {
    std::vector<ZetaTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return *this = ZetaFunction(std::move(all));
}

ZetaFunction operator*(const ZetaFunction& a, const ZetaFunction& b) {
    std::vector<ZetaTerm> out;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Denominator d = x.denominator;
            for (const auto& [f, m] : y.denominator) d[f] += m;
            out.push_back({x.numerator * y.numerator, std::move(d)});
        }
    return ZetaFunction(std::move(out));
}

ZetaFunction ZetaFunction::operator-() const {
    ZetaFunction r = *this;
    for (auto& t : r.terms_) t.numerator = -t.numerator;
    return r;
}

namespace {

std::string render_denominator(const Denominator& d, bool latex) {
    std::string out;
    for (const auto& [f, m] : d) {
        if (!out.empty()) out += latex ? "" : "*";
        out += latex ? f.to_latex() : f.to_string();
        if (m > 1) out += latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
    }
    return out;
}

std::size_t factor_count(const Denominator& d) {
    std::size_t n = 0;
    for (const auto& [f, m] : d) n += 1 + (m > 1);
    return n;
}

}  // namespace

std::string ZetaFunction::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        std::string num = t.numerator.to_string();
        if (t.denominator.empty()) {
            out += num;
            continue;
        }
        const bool simple_num = t.numerator.coeffs().size() == 1 &&
                                t.numerator.coeffs().begin()->second.terms().size() == 1;
        out += simple_num ? num : "(" + num + ")";
        std::string den = render_denominator(t.denominator, false);
        out += factor_count(t.denominator) > 1 ? "/(" + den + ")" : "/" + den;
    }
    return out;
}

std::string ZetaFunction::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.denominator.empty())
            out += t.numerator.to_latex();
        else
            out += "\\frac{" + t.numerator.to_latex() + "}{" + render_denominator(t.denominator, true) + "}";
    }
    return out;
}

// ---- CoeffFraction ----

bool CoeffFraction::equals(const CoeffFraction& other) const {
    Denominator shared = common(constant_factors, other.constant_factors);
    TPolynomial lhs = TPolynomial(numerator) * denominator_polynomial(minus(other.constant_factors, shared));
    TPolynomial rhs = TPolynomial(other.numerator) * denominator_polynomial(minus(constant_factors, shared));
    return lhs == rhs;
}

std::string CoeffFraction::to_string() const {
    if (constant_factors.empty() || numerator.is_zero()) return numerator.to_string();
    std::string num = numerator.terms().size() == 1 ? numerator.to_string() : "(" + numerator.to_string() + ")";
    std::string den = render_denominator(constant_factors, false);
    return num + (factor_count(constant_factors) > 1 ? "/(" + den + ")" : "/" + den);
}

// ---- RestrictionMap ----

void RestrictionMap::set(const std::string& symbol, std::int64_t m, GrothElement image) {
    if (m < 1) throw Error("restriction level must be positive");
    entries_[{symbol, m}] = std::move(image);
}

GrothElement RestrictionMap::apply(const GrothElement& g, std::int64_t m) const {
    if (entries_.empty()) return g;
    return g.substitute([&](const std::string& s) -> std::optional<GrothElement> {
        auto it = entries_.find({s, m});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    });
}

// ---- operations ----

ZetaFunction scale_T(const ZetaFunction& x, std::int64_t c) {
    if (c == 0) return x;
    std::vector<ZetaTerm> out;
    for (const auto& t : x.terms()) {
        TPolynomial num;
        for (const auto& [k, g] : t.numerator.coeffs()) num.add(k, g.times_l(c * k));
        Denominator den;
        for (const auto& [f, m] : t.denominator) den[DenFactor(f.a + c * f.b, f.b)] += m;
        out.push_back({std::move(num), std::move(den)});
    }
    return ZetaFunction(std::move(out));
}

std::vector<CoeffFraction> series_coeffs(const ZetaFunction& x, std::int64_t n_max) {
    if (n_max < 1) throw Error("series length must be positive");
    ZetaTerm t = x.combined();
    std::vector<GrothElement> s(static_cast<std::size_t>(n_max + 1));
    for (const auto& [k, c] : t.numerator.coeffs())
        if (k <= n_max) s[static_cast<std::size_t>(k)] = c;
    Denominator constants;
    for (const auto& [f, mult] : t.denominator) {
        if (f.is_constant()) {
            constants[f] = mult;
            continue;
        }
        // s <- s / (1 - L^a T^b), in place: s[n] += L^a s[n-b] in increasing n.
        for (int rep = 0; rep < mult; ++rep)
            for (std::int64_t n = f.b; n <= n_max; ++n)
                if (!s[static_cast<std::size_t>(n - f.b)].is_zero())
                    s[static_cast<std::size_t>(n)] += s[static_cast<std::size_t>(n - f.b)].times_l(f.a);
    }
    std::vector<CoeffFraction> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) out.push_back({s[static_cast<std::size_t>(n)], constants});
    return out;
}

ZetaFunction multisect(const ZetaFunction& x, std::int64_t m, const RestrictionMap& res) {
    if (m < 1) throw Error("base-change degree must be positive");
    std::vector<ZetaTerm> out;
    for (const auto& t : x.terms()) {
        // 1/(1 - y) = (1 + y + ... + y^{m-1}) / (1 - y^m); keep T-degrees divisible by m.
        TPolynomial expanded = t.numerator;
        Denominator den;
        for (const auto& [f, mult] : t.denominator) {
            if (f.is_constant()) {
                den[f] += mult;
                continue;
            }
            TPolynomial cofactor;
            for (std::int64_t r = 0; r < m; ++r) cofactor.add(f.b * r, GrothElement::lefschetz(f.a * r));
            for (int rep = 0; rep < mult; ++rep) expanded = expanded * cofactor;
            den[DenFactor(f.a * m, f.b)] += mult;
        }
        TPolynomial num;
        for (const auto& [k, c] : expanded.coeffs())
            if (k % m == 0) num.add(k / m, res.apply(c, m));
        out.push_back({std::move(num), std::move(den)});
    }
    return simplify(ZetaFunction(std::move(out)));
}

namespace {

std::vector<std::int64_t> divisors_descending(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = n; d >= 2; --d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// 1 + x + ... + x^{d-1} with x = L^{a/d} T^{b/d}.
TPolynomial cyclotomic_cofactor(const DenFactor& f, std::int64_t d) {
    TPolynomial p;
    for (std::int64_t i = 0; i < d; ++i) p.add(f.b / d * i, GrothElement::lefschetz(f.a / d * i));
    return p;
}

bool cancel_factor(ZetaTerm& t) {
    for (auto it = t.denominator.begin(); it != t.denominator.end(); ++it) {
        auto q = t.numerator.divide_exact(TPolynomial::of_factor(it->first));
        if (!q) continue;
        t.numerator = std::move(*q);
        if (--it->second == 0) t.denominator.erase(it);
        return true;
    }
    return false;
}

bool lower_factor(ZetaTerm& t) {
    for (auto it = t.denominator.begin(); it != t.denominator.end(); ++it) {
        const DenFactor f = it->first;
        for (std::int64_t d : divisors_descending(std::gcd(f.a < 0 ? -f.a : f.a, f.b))) {
            auto q = t.numerator.divide_exact(cyclotomic_cofactor(f, d));
            if (!q) continue;
            t.numerator = std::move(*q);
            if (--it->second == 0) t.denominator.erase(it);
            ++t.denominator[DenFactor(f.a / d, f.b / d)];
            return true;
        }
    }
    return false;
}

}  // namespace

ZetaFunction simplify(const ZetaFunction& x) {
    ZetaTerm t = x.combined();
    if (t.numerator.is_zero()) return {};
    while (cancel_factor(t) || lower_factor(t)) {
    }
    return ZetaFunction({std::move(t)});
}

bool zf_equal(const ZetaFunction& x, const ZetaFunction& y) {
    ZetaTerm a = x.combined(), b = y.combined();
    Denominator shared = common(a.denominator, b.denominator);
    return a.numerator * denominator_polynomial(minus(b.denominator, shared)) ==
           b.numerator * denominator_polynomial(minus(a.denominator, shared));
}

std::set<Fraction> candidate_poles(const ZetaFunction& x) {
    std::set<Fraction> out;
    const ZetaFunction s = simplify(x);
    for (const auto& t : s.terms())
        for (const auto& [f, m] : t.denominator)
            if (!f.is_constant()) out.insert(f.ratio());
    return out;
}

ZetaFunction rewrite(const ZetaFunction& x, std::span<const RewriteRule> rules) {
    if (rules.empty()) return x;
    check_acyclic(rules);
    return x.map_coeffs([&](const GrothElement& c) { return rewrite(c, rules); });
}

}  // namespace motzeta
