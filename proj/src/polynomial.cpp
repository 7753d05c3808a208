#include "motzeta/polynomial.hpp"

#include "format_util.hpp"

#include <algorithm>

namespace motzeta {

// ---- IntPoly ----

IntPoly::IntPoly(long c) : IntPoly(Integer(c)) {}

IntPoly::IntPoly(Integer c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(Integer c, std::size_t degree) {
    IntPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(degree + 1, Integer(0));
    p.coeffs_[degree] = std::move(c);
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result(1L), base = *this;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return result;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.coeffs_.assign(k, Integer(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::divide_scalar_exact(const Integer& c) const {
    IntPoly r = *this;
    for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    if (is_zero()) return IntPoly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Integer> rem = coeffs_;
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<Integer> quot(rem.size() - dd, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.leading().get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * d.coeffs_[j];
        quot[k] = std::move(q);
    }
    for (std::size_t j = 0; j < dd; ++j)
        if (rem[j] != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) detail::append_term(out, coeffs_[i], detail::power(var, static_cast<std::int64_t>(i)));
    return out;
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Integer c = p.content();
    if (sgn(p.leading()) < 0) c = -c;
    return p.divide_scalar_exact(c);
}

// lc(v)^(deg u - deg v + 1) * u mod v.
IntPoly pseudo_remainder(const IntPoly& u, const IntPoly& v) {
    std::vector<Integer> r = u.coeffs();
    const long dv = v.degree();
    const Integer& lc = v.leading();
    long steps = 0;
    for (long k = static_cast<long>(r.size()) - 1; k >= dv; --k) {
        Integer top = r[k];
        for (auto& x : r) x *= lc;
        if (top != 0)
            for (long j = 0; j <= dv; ++j) r[k - dv + j] -= top * v.coeffs()[j];
        ++steps;
    }
    IntPoly rem(std::move(r));
    const long missing = (u.degree() - dv + 1) - steps;
    if (missing > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(missing));
        rem *= f;
    }
    return rem;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b) * b.content();
    if (b.is_zero()) return primitive_part(a) * a.content();
    Integer d;
    Integer ca = a.content(), cb = b.content();
    mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    // Primitive remainder sequence: exact and small at the degrees used here.
    while (true) {
        if (v.degree() == 0) return IntPoly(d);
        IntPoly r = pseudo_remainder(u, v);
        if (r.is_zero()) return primitive_part(v) * d;
        u = std::move(v);
        v = primitive_part(r);
    }
}

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
    if (c != 0) terms_.emplace(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Integer c, std::int64_t exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(exponent, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::from_poly(const IntPoly& p, std::int64_t shift) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) r.terms_.emplace(static_cast<std::int64_t>(i) + shift, p.coeffs()[i]);
    return r;
}

Integer LaurentPoly::coeff(std::int64_t e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
std::int64_t LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::optional<std::pair<int, std::int64_t>> LaurentPoly::as_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (c == 1) return std::make_pair(1, e);
    if (c == -1) return std::make_pair(-1, e);
    return std::nullopt;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(ea + eb, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const {
    if (e < 0) {
        auto unit = as_unit();
        if (!unit) throw Error("negative power of a non-unit Laurent polynomial");
        int sign = (unit->first < 0 && (-e) % 2 == 1) ? -1 : 1;
        return monomial(Integer(sign), unit->second * e);
    }
    LaurentPoly result(1L), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

IntPoly LaurentPoly::to_poly() const {
    if (terms_.empty()) return {};
    const std::int64_t lo = min_exponent();
    std::vector<Integer> v(static_cast<std::size_t>(max_exponent() - lo + 1), Integer(0));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - lo)] = c;
    return IntPoly(std::move(v));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error("Laurent polynomial division by zero");
    if (is_zero()) return LaurentPoly();
    auto q = to_poly().divide_exact(d.to_poly());
    if (!q) return std::nullopt;
    return from_poly(*q, min_exponent() - d.min_exponent());
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) detail::append_term(out, c, detail::power(var, e));
    return out;
}

}  // namespace motzeta
