#pragma once

// Test oracles. Everything here works with numbers: symbols and L are
// specialized to random rationals and series are expanded by plain
// convolution over Q, so no code path is shared with the symbolic library.

#include "motzeta/bivariate.hpp"
#include "motzeta/realization.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/zeta_series.hpp"

#include <gmpxx.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using motzeta::BiPoly;
using motzeta::CoeffFraction;
using motzeta::DenFactor;
using motzeta::GrothElement;
using motzeta::LaurentPoly;
using motzeta::ZetaFunction;
using Q = mpq_class;

inline Q qpow(const Q& x, std::int64_t e) {
    Q r = 1, b = x;
    bool inv = e < 0;
    std::uint64_t k = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    while (k) {
        if (k & 1U) r *= b;
        b *= b;
        k >>= 1U;
    }
    return inv ? Q(1 / r) : r;
}

struct Point {
    Q l;
    std::map<std::string, Q> sym;
};

inline Q eval(const GrothElement& g, const Point& p) {
    Q total = 0;
    for (const auto& [mono, c] : g.terms()) {
        Q v = Q(c) * qpow(p.l, mono.l_exponent);
        for (const auto& [name, e] : mono.powers) v *= qpow(p.sym.at(name), e);
        total += v;
    }
    return total;
}

inline Q eval(const CoeffFraction& c, const Point& p) {
    Q v = eval(c.numerator, p);
    for (const auto& [f, e] : c.constant_factors) v /= qpow(1 - qpow(p.l, f.a), e);
    return v;
}

/// Coefficients of T^0..T^n by naive convolution with geometric series.
inline std::vector<Q> series(const ZetaFunction& x, std::int64_t n, const Point& p) {
    std::vector<Q> total(static_cast<std::size_t>(n + 1), Q(0));
    for (const auto& t : x.terms()) {
        std::vector<Q> s(total.size(), Q(0));
        for (const auto& [k, c] : t.numerator.coeffs())
            if (k <= n) s[static_cast<std::size_t>(k)] = eval(c, p);
        for (const auto& [f, e] : t.denominator) {
            for (int rep = 0; rep < e; ++rep) {
                if (f.b == 0) {
                    Q d = 1 - qpow(p.l, f.a);
                    for (auto& v : s) v /= d;
                    continue;
                }
                std::vector<Q> g(total.size(), Q(0));
                for (std::int64_t k = 0; k * f.b <= n; ++k) g[static_cast<std::size_t>(k * f.b)] = qpow(p.l, f.a * k);
                std::vector<Q> out(total.size(), Q(0));
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (s[i] != 0)
                        for (std::size_t j = 0; i + j < s.size(); ++j) out[i + j] += s[i] * g[j];
                s = std::move(out);
            }
        }
        for (std::size_t i = 0; i < s.size(); ++i) total[i] += s[i];
    }
    return total;
}

inline Point random_point(std::mt19937_64& rng, const std::set<std::string>& symbols) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5), lv(2, 9);
    Point p;
    p.l = Q(lv(rng), den(rng));
    p.l.canonicalize();
    if (p.l == 1) p.l = 3;
    for (const auto& s : symbols) {
        Q v(num(rng), den(rng));
        v.canonicalize();
        p.sym[s] = v;
    }
    return p;
}

inline std::set<std::string> symbols_of(const ZetaFunction& a, const ZetaFunction& b = {}) {
    auto s = a.symbols();
    auto t = b.symbols();
    s.insert(t.begin(), t.end());
    return s;
}

/// Values of x at several random points agree with y up to T^n.
inline bool same_series(const ZetaFunction& x, const ZetaFunction& y, std::int64_t n, std::mt19937_64& rng,
                        int points = 3) {
    const auto syms = symbols_of(x, y);
    for (int i = 0; i < points; ++i) {
        Point p = random_point(rng, syms);
        if (series(x, n, p) != series(y, n, p)) return false;
    }
    return true;
}

// ---- univariate polynomials over Q ----

using QPoly = std::vector<Q>;  // coefficient i of T^i, no trailing zeros

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Q c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        trim(a);
    }
    return a;
}

/// Monic gcd by the Euclidean algorithm.
inline QPoly qgcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Q lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Q eval(const LaurentPoly& p, const Q& w) {
    Q v = 0;
    for (const auto& [e, c] : p.terms()) v += Q(c) * qpow(w, e);
    return v;
}

inline Q eval(const motzeta::IntPoly& p, const Q& w) {
    Q v = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * w + Q(p.coeffs()[i]);
    return v;
}

/// Specializes w to w0.
inline QPoly at_w(const BiPoly& p, const Q& w0) {
    QPoly r;
    for (const auto& c : p.coeffs()) r.push_back(eval(c, w0));
    trim(r);
    return r;
}

/// Power series division num/den mod T^{n+1}; den(0) must be nonzero.
inline std::vector<Q> series_div(const QPoly& num, const QPoly& den, std::int64_t n) {
    std::vector<Q> s(static_cast<std::size_t>(n + 1), Q(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        Q v = i < num.size() ? num[i] : Q(0);
        for (std::size_t j = 1; j <= i && j < den.size(); ++j) v -= den[j] * s[i - j];
        s[i] = v / den[0];
    }
    return s;
}

/// 1 - w0^{2a} T^b specialized.
inline QPoly ep_factor_at(const DenFactor& f, const Q& w0) {
    QPoly r(static_cast<std::size_t>(f.b + 1), Q(0));
    r[0] += 1;
    r[static_cast<std::size_t>(f.b)] -= qpow(w0, 2 * f.a);
    trim(r);
    return r;
}

/// Reduced-denominator test for a pole of an EP function at w = w0, done
/// entirely over Q[T]: N and D come from specializing the unreduced combined
/// fraction, then gcd(N, D) is removed by Euclid.
inline bool specialized_pole(const ZetaFunction& x, const motzeta::EpAssignment& ep, const motzeta::Fraction& s0,
                             std::int64_t k_max, const Q& w0) {
    auto t = x.combined();
    QPoly num;
    for (const auto& [k, c] : t.numerator.coeffs()) {
        if (num.size() <= static_cast<std::size_t>(k)) num.resize(static_cast<std::size_t>(k + 1), Q(0));
        num[static_cast<std::size_t>(k)] = eval(motzeta::ep_realize(c, ep), w0);
    }
    trim(num);
    if (num.empty()) return false;
    QPoly den{Q(1)};
    for (const auto& [f, e] : t.denominator)
        for (int r = 0; r < e; ++r) den = qmul(den, ep_factor_at(f, w0));
    QPoly g = qgcd(num, den);
    // den / g
    QPoly reduced = den;
    if (g.size() > 1) {
        QPoly q(den.size() - g.size() + 1, Q(0)), rem = den;
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = rem[i + g.size() - 1] / g.back();
            for (std::size_t j = 0; j < g.size(); ++j) rem[i + j] -= q[i] * g[j];
        }
        trim(q);
        reduced = q;
    }
    for (std::int64_t k = 1; k <= k_max; ++k) {
        QPoly f = ep_factor_at(DenFactor(s0.num * k, s0.den * k), w0);
        if (qgcd(reduced, f).size() > 1) return true;
    }
    return false;
}

}  // namespace oracle

namespace gen {

using motzeta::DenFactor;
using motzeta::GrothElement;
using motzeta::TPolynomial;
using motzeta::ZetaFunction;

inline GrothElement random_coeff(std::mt19937_64& rng, int max_terms = 2) {
    static const char* names[] = {"A", "B", "C"};
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2), s(0, 3), n(1, max_terms);
    GrothElement g;
    for (int i = n(rng); i > 0; --i) {
        int k = c(rng);
        if (k == 0) k = 1;
        GrothElement t = GrothElement::lefschetz(e(rng)) * GrothElement(static_cast<long>(k));
        int sym = s(rng);
        if (sym < 3) t = t * GrothElement::symbol(names[sym]);
        g += t;
    }
    if (g.is_zero()) g = GrothElement::symbol("A");
    return g;
}

/// At most max_terms terms, factors with |a| <= 3 and 1 <= b <= 3, and
/// occasionally a constant factor.
inline ZetaFunction random_zeta(std::mt19937_64& rng, int max_terms = 3, bool constants = true) {
    std::uniform_int_distribution<int> nterms(1, max_terms), a(-3, 3), b(1, 3), k(0, 3), nf(1, 2), nmono(1, 2),
        one_in(0, 5);
    ZetaFunction z;
    for (int i = nterms(rng); i > 0; --i) {
        TPolynomial num;
        for (int j = nmono(rng); j > 0; --j) num.add(k(rng), random_coeff(rng));
        std::vector<DenFactor> fs;
        for (int j = nf(rng); j > 0; --j) fs.emplace_back(a(rng), b(rng));
        if (constants && one_in(rng) == 0) {
            int c = a(rng);
            fs.emplace_back(c == 0 ? -1 : c, 0);
        }
        z += ZetaFunction::term(num, fs);
    }
    return z;
}

// Random valid model: vertical components with N in 1..3, nu in 0..3, an
// occasional horizontal one, and strata on random nonempty subsets.
inline motzeta::SncModel random_model(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> ncomp(1, 3), N(1, 3), nu(0, 3), coin(0, 3);
    motzeta::SncModel m;
    const int n = ncomp(rng);
    for (int i = 0; i < n; ++i) m.components.push_back({"E" + std::to_string(i), N(rng), nu(rng)});
    if (coin(rng) == 0) m.components.push_back({"H", 0, 1 + nu(rng)});
    const int total = static_cast<int>(m.components.size());
    for (int mask = 1; mask < (1 << total); ++mask) {
        if (mask != 1 && coin(rng) == 0) continue;
        motzeta::Stratum s;
        for (int i = 0; i < total; ++i)
            if (mask & (1 << i)) s.J.push_back(m.components[static_cast<std::size_t>(i)].name);
        s.cls = GrothElement::symbol("C" + std::to_string(mask)) + GrothElement(static_cast<long>(coin(rng)));
        m.strata.push_back(std::move(s));
    }
    return m;
}

}  // namespace gen
