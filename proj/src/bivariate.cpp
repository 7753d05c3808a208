#include "motzeta/bivariate.hpp"

#include "format_util.hpp"

#include <gmpxx.h>

#include <optional>

namespace motzeta {

BiPoly::BiPoly(long c) : BiPoly(IntPoly(c)) {}

BiPoly::BiPoly(IntPoly c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

BiPoly::BiPoly(std::vector<IntPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::monomial(Integer c, std::size_t w_exp, std::size_t t_exp) {
    BiPoly p;
    if (c == 0) return p;
    p.coeffs_.resize(t_exp + 1);
    p.coeffs_[t_exp] = IntPoly::monomial(std::move(c), w_exp);
    return p;
}

void BiPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<IntPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BiPoly(std::move(out));
}

BiPoly operator*(const BiPoly& a, const IntPoly& c) {
    std::vector<IntPoly> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) out.push_back(x * c);
    return BiPoly(std::move(out));
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly result(1L), base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

BiPoly BiPoly::w_shifted(std::size_t k) const {
    BiPoly r = *this;
    for (auto& c : r.coeffs_) c = c.shifted(k);
    return r;
}

IntPoly BiPoly::content() const {
    IntPoly g;
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
        if (g.degree() == 0 && g.leading() == 1) break;
    }
    return g;
}

std::optional<BiPoly> BiPoly::divide_exact(const IntPoly& c) const {
    std::vector<IntPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) {
        auto q = x.divide_exact(c);
        if (!q) return std::nullopt;
        out.push_back(std::move(*q));
    }
    return BiPoly(std::move(out));
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const {
    if (d.is_zero()) throw Error("bivariate division by zero");
    if (is_zero()) return BiPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<IntPoly> rem = coeffs_;
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<IntPoly> quot(rem.size() - dd);
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem[k + dd].is_zero()) continue;
        auto q = rem[k + dd].divide_exact(d.leading());
        if (!q) return std::nullopt;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= *q * d.coeffs_[j];
        quot[k] = std::move(*q);
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (!rem[j].is_zero()) return std::nullopt;
    return BiPoly(std::move(quot));
}

int BiPoly::sign() const {
    if (is_zero()) return 1;
    return sgn(leading().leading()) < 0 ? -1 : 1;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            if (c.coeffs()[i] == 0) continue;
            detail::append_term(out, c.coeffs()[i],
                                detail::join_product(detail::power("w", static_cast<std::int64_t>(i)),
                                                     detail::power("T", static_cast<std::int64_t>(k))));
        }
    }
    return out;
}

namespace {

BiPoly normalized(BiPoly p) { return p.sign() < 0 ? -p : p; }

BiPoly primitive_part(const BiPoly& p) {
    if (p.is_zero()) return p;
    return normalized(*p.divide_exact(p.content()));
}

BiPoly pseudo_remainder(const BiPoly& u, const BiPoly& v) {
    std::vector<IntPoly> r = u.coeffs();
    const long dv = v.degree();
    const IntPoly& lc = v.leading();
    long steps = 0;
    for (long k = static_cast<long>(r.size()) - 1; k >= dv; --k) {
        IntPoly top = r[k];
        for (auto& x : r) x = x * lc;
        if (!top.is_zero())
            for (long j = 0; j <= dv; ++j) r[k - dv + j] -= top * v.coeffs()[j];
        ++steps;
    }
    BiPoly rem(std::move(r));
    const long missing = (u.degree() - dv + 1) - steps;
    if (missing > 0) rem = rem * lc.pow(static_cast<unsigned>(missing));
    return rem;
}

// ---- gcd by specialization of w and interpolation ----

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer eval_at(const IntPoly& p, const Integer& x) {
    Integer v = 0;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i];
    return v;
}

QPoly eval_w(const BiPoly& p, const Integer& w0) {
    QPoly r;
    for (const auto& c : p.coeffs()) r.emplace_back(eval_at(c, w0));
    trim(r);
    return r;
}

QPoly monic_gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            const mpq_class c = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
            trim(a);
        }
        std::swap(a, b);
    }
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

// Newton form, then expanded to ascending coefficients.
QPoly interpolate(const std::vector<Integer>& xs, const std::vector<mpq_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> dd(ys);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - j]);
    QPoly out{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // out = out * (x - xs[i]) + dd[i]
        QPoly next(out.size() + 1, mpq_class(0));
        for (std::size_t k = 0; k < out.size(); ++k) {
            next[k + 1] += out[k];
            next[k] -= out[k] * mpq_class(xs[i]);
        }
        next[0] += dd[i];
        out = std::move(next);
    }
    trim(out);
    return out;
}

long w_degree(const BiPoly& p) {
    long d = 0;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

// gcd of primitive u, v with deg_T >= 1. A coprime specialization at a point
// where neither leading coefficient vanishes proves the gcd is 1; otherwise
// gamma * G / lc(G) is interpolated from the monic specialized gcds and kept
// only if it divides both inputs. nullopt means every point was unlucky.
std::optional<BiPoly> interpolated_gcd(const BiPoly& u, const BiPoly& v) {
    const IntPoly gamma = gcd(u.leading(), v.leading());
    const long bound = std::min(w_degree(u), w_degree(v)) + gamma.degree();
    std::vector<Integer> xs;
    std::vector<QPoly> gs;
    long k = -1;
    for (long step = 0; static_cast<long>(xs.size()) <= bound; ++step) {
        if (step > 4 * bound + 64) return std::nullopt;
        const Integer w0 = (step % 2 ? Integer(-(step + 1) / 2) : Integer(step / 2));
        if (eval_at(u.leading(), w0) == 0 || eval_at(v.leading(), w0) == 0) continue;
        QPoly g = monic_gcd(eval_w(u, w0), eval_w(v, w0));
        const long deg = static_cast<long>(g.size()) - 1;
        if (deg == 0) return BiPoly(1L);
        if (k >= 0 && deg > k) continue;
        if (deg < k || k < 0) {
            k = deg;
            xs.clear();
            gs.clear();
        }
        const mpq_class scale(eval_at(gamma, w0));
        for (auto& c : g) c *= scale;
        xs.push_back(w0);
        gs.push_back(std::move(g));
    }
    std::vector<QPoly> coeffs;
    mpz_class den = 1;
    for (long t = 0; t <= k; ++t) {
        std::vector<mpq_class> ys;
        for (const auto& g : gs) ys.push_back(g[static_cast<std::size_t>(t)]);
        coeffs.push_back(interpolate(xs, ys));
        for (const auto& c : coeffs.back()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<IntPoly> z;
    for (const auto& c : coeffs) {
        std::vector<Integer> ic;
        for (const auto& q : c) ic.push_back(Integer(q * den));
        z.emplace_back(std::move(ic));
    }
    BiPoly cand = primitive_part(BiPoly(std::move(z)));
    if (!u.divide_exact(cand) || !v.divide_exact(cand)) return std::nullopt;
    return cand;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    const IntPoly content_gcd = gcd(a.content(), b.content());
    BiPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    if (v.degree() == 0) return BiPoly(content_gcd);
    if (auto g = interpolated_gcd(u, v)) return normalized(*g * content_gcd);
    // Subresultant PRS (Collins; Brown-Traub): the divisions below are exact in Z[w].
    IntPoly g(1L), h(1L);
    while (true) {
        BiPoly r = pseudo_remainder(u, v);
        if (r.is_zero()) return normalized(primitive_part(v) * content_gcd);
        if (r.degree() == 0) return BiPoly(content_gcd);
        const unsigned delta = static_cast<unsigned>(u.degree() - v.degree());
        u = std::move(v);
        v = *r.divide_exact(g * h.pow(delta));
        g = u.leading();
        if (delta <= 1)
            h = g.pow(delta) * h.pow(1 - delta);
        else
            h = *g.pow(delta).divide_exact(h.pow(delta - 1));
    }
}

}  // namespace motzeta
