#include "motzeta/realization.hpp"

#include <algorithm>
#include <limits>

namespace motzeta {

RationalWT::RationalWT(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

RationalWT::RationalWT(BiPoly num, BiPoly den, std::int64_t w_shift) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    if (w_shift > 0) num_ = num_.w_shifted(static_cast<std::size_t>(w_shift));
    if (w_shift < 0) den_ = den_.w_shifted(static_cast<std::size_t>(-w_shift));
    reduce();
}

RationalWT RationalWT::monomial(const LaurentPoly& p, std::size_t t_exp) {
    auto [poly, shift] = split_laurent(p);
    std::vector<IntPoly> coeffs(t_exp + 1);
    coeffs[t_exp] = std::move(poly);
    return RationalWT(BiPoly(std::move(coeffs)), BiPoly(1L), shift);
}

namespace {

// Sign of the lowest-order coefficient, so 1 - T stays as written.
int trailing_sign(const BiPoly& p) {
    for (const auto& c : p.coeffs())
        for (const auto& a : c.coeffs())
            if (a != 0) return sgn(a) < 0 ? -1 : 1;
    return 1;
}

}  // namespace

void RationalWT::reduce() {
    if (num_.is_zero()) {
        den_ = BiPoly(1L);
        return;
    }
    BiPoly g = gcd(num_, den_);
    if (!(g == BiPoly(1L))) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    if (trailing_sign(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalWT operator+(const RationalWT& x, const RationalWT& y) {
    if (x.den_ == y.den_) return RationalWT(x.num_ + y.num_, x.den_);
    return RationalWT(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalWT operator-(const RationalWT& x, const RationalWT& y) {
    if (x.den_ == y.den_) return RationalWT(x.num_ - y.num_, x.den_);
    return RationalWT(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RationalWT operator*(const RationalWT& x, const RationalWT& y) {
    return RationalWT(x.num_ * y.num_, x.den_ * y.den_);
}

RationalWT operator/(const RationalWT& x, const RationalWT& y) {
    if (y.is_zero()) throw Error("division by the zero rational function");
    return RationalWT(x.num_ * y.den_, x.den_ * y.num_);
}

std::string RationalWT::to_string() const {
    if (den_ == BiPoly(1L)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::pair<IntPoly, std::int64_t> split_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return {IntPoly(), 0};
    const std::int64_t lo = p.min_exponent();
    std::vector<Integer> c(static_cast<std::size_t>(p.max_exponent() - lo + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e - lo)] = v;
    return {IntPoly(std::move(c)), lo};
}

BiPoly ep_factor(const DenFactor& f) {
    const auto t = static_cast<std::size_t>(f.b);
    if (f.a >= 0) return BiPoly(1L) - BiPoly::monomial(Integer(1), static_cast<std::size_t>(2 * f.a), t);
    // 1 - w^{2a} T^b = w^{2a} (w^{-2a} - T^b)
    return BiPoly::monomial(Integer(1), static_cast<std::size_t>(-2 * f.a), 0) - BiPoly::monomial(Integer(1), 0, t);
}

namespace {

// The w-shift carried by ep_factor(f): value = w^shift * ep_factor(f).
std::int64_t ep_factor_shift(const DenFactor& f) { return f.a < 0 ? 2 * f.a : 0; }

RationalWT realize_term(const ZetaTerm& t, const EpAssignment& ep) {
    std::map<std::int64_t, LaurentPoly> coeffs;
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (const auto& [k, c] : t.numerator.coeffs()) {
        LaurentPoly p = ep_realize(c, ep);
        if (p.is_zero()) continue;
        lo = std::min(lo, p.min_exponent());
        coeffs.emplace(k, std::move(p));
    }
    if (coeffs.empty()) return RationalWT();
    std::vector<IntPoly> num(static_cast<std::size_t>(coeffs.rbegin()->first + 1));
    for (const auto& [k, p] : coeffs) {
        auto [poly, s] = split_laurent(p.shifted(-lo));
        num[static_cast<std::size_t>(k)] = IntPoly::monomial(Integer(1), static_cast<std::size_t>(s)) * poly;
    }

    BiPoly den(1L);
    std::int64_t shift = lo;
    for (const auto& [f, e] : t.denominator) {
        den = den * ep_factor(f).pow(static_cast<unsigned>(e));
        shift -= ep_factor_shift(f) * e;
    }
    return RationalWT(BiPoly(std::move(num)), std::move(den), shift);
}

}  // namespace

RationalWT ep_zeta(const ZetaFunction& x, const EpAssignment& ep) {
    if (x.is_zero()) return RationalWT();
    return realize_term(x.combined(), ep);
}

// ---- eigenvalues ----

EigenvalueSet::EigenvalueSet(const std::vector<Fraction>& values) {
    for (const auto& f : values) insert(f);
}

EigenvalueSet EigenvalueSet::parse(const std::string& text) {
    EigenvalueSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw Error("empty entry in eigenvalue list '" + text + "'");
        }
        out.insert(Fraction::parse(item));
        start = end + 1;
    }
    return out;
}

std::string EigenvalueSet::to_string() const {
    std::string out;
    for (const auto& f : values_) {
        if (!out.empty()) out += ",";
        out += std::to_string(f.num) + "/" + std::to_string(f.den);
    }
    return out;
}

// ---- poles ----

namespace {

struct Prepared {
    ZetaTerm term;  // the simplified function as one term
    RationalWT realized;
};

Prepared prepare(const ZetaFunction& x, const EpAssignment& ep) {
    ZetaFunction s = simplify(x);
    Prepared p;
    if (!s.is_zero()) p.term = s.terms().front();
    p.realized = realize_term(p.term, ep);
    return p;
}

PoleDetail certify(const Prepared& p, const Fraction& s0) {
    PoleDetail detail;
    detail.pole = s0;
    bool found = false;
    for (const auto& [f, e] : p.term.denominator) {
        if (f.is_constant() || !(f.ratio() == s0)) continue;
        if (!found || f.b > detail.factor.b) detail.factor = f;
        found = true;
    }
    if (!found) throw Error("s0 = " + s0.to_string() + " is not a candidate pole");
    const std::int64_t k_max = detail.factor.b / s0.den;
    const BiPoly& D = p.realized.denominator();
    for (std::int64_t k = 1; k <= k_max; ++k) {
        BiPoly g = gcd(D, ep_factor(DenFactor(s0.num * k, s0.den * k)));
        if (g.degree() >= 1) {
            if (trailing_sign(g) < 0) g = -g;
            detail.certified = true;
            detail.k = k;
            detail.common_factor = g.to_string();
            break;
        }
    }
    return detail;
}

PoleReport report_for(const Prepared& p) {
    PoleReport report;
    for (const auto& [f, e] : p.term.denominator)
        if (!f.is_constant()) report.candidates.insert(f.ratio());
    for (const auto& s0 : report.candidates) {
        PoleDetail d = certify(p, s0);
        (d.certified ? report.certified : report.uncertified).insert(s0);
        report.details.push_back(std::move(d));
    }
    return report;
}

}  // namespace

PoleDetail certify_pole_detail(const ZetaFunction& x, const EpAssignment& ep, const Fraction& s0) {
    return certify(prepare(x, ep), s0);
}

bool certify_pole(const ZetaFunction& x, const EpAssignment& ep, const Fraction& s0) {
    return certify_pole_detail(x, ep, s0).certified;
}

PoleReport pole_report(const ZetaFunction& x, const EpAssignment& ep) { return report_for(prepare(x, ep)); }

std::string to_string(MonodromyVerdict v) {
    switch (v) {
        case MonodromyVerdict::Proven: return "PROVEN";
        case MonodromyVerdict::Violated: return "VIOLATED";
        case MonodromyVerdict::Undetermined: return "UNDETERMINED";
    }
    return "UNDETERMINED";
}

MonodromyResult check_monodromy(const ZetaFunction& x, const EpAssignment& ep, const EigenvalueSet& ev) {
    const Prepared p = prepare(x, ep);
    MonodromyResult result;
    result.report = report_for(p);
    const bool syntactic = std::all_of(p.term.denominator.begin(), p.term.denominator.end(), [&](const auto& fe) {
        return fe.first.is_constant() || ev.contains(fe.first.ratio());
    });
    if (syntactic) {
        result.verdict = MonodromyVerdict::Proven;
        return result;
    }
    for (const auto& s0 : result.report.certified) {
        if (!ev.contains(s0)) {
            result.verdict = MonodromyVerdict::Violated;
            result.offending = s0;
            return result;
        }
    }
    result.verdict = MonodromyVerdict::Undetermined;
    return result;
}

std::string to_string(ObstructionVerdict v) {
    return v == ObstructionVerdict::Obstructed ? "OBSTRUCTED" : "CONSISTENT";
}

ObstructionResult good_reduction_obstruction(const ZetaFunction& x, const EpAssignment& ep) {
    ObstructionResult result;
    result.report = pole_report(x, ep);
    const auto& certified = result.report.certified;
    if (certified.size() >= 2) {
        result.verdict = ObstructionVerdict::Obstructed;
        auto it = certified.end();
        const Fraction top = *--it;
        result.witness = {*--it, top};
    }
    return result;
}

}  // namespace motzeta
