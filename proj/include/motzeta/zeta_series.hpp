#pragma once

// Zeta functions as finite sums of rational terms
//
//     numerator(T) / prod (1 - L^a T^b)
//
// with numerator coefficients in the symbolic coefficient ring. Factors with
// b = 0 are the constants (1 - L^a) of the localized ring; they never shift
// T-degrees. Equality is equality of symbolic representatives, which is finer
// than equality in the localized Grothendieck ring: whether 1 - L^{-m} is a
// zero divisor there is unknown, so zf_equal() answering false does not prove
// two motivic zeta functions differ.

#include "motzeta/common.hpp"
#include "motzeta/groth_ring.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace motzeta {

/// The factor (1 - L^a T^b), b >= 0 and (a, b) != (0, 0).
struct DenFactor {
    std::int64_t a = 0;
    std::int64_t b = 0;

    DenFactor() = default;
    DenFactor(std::int64_t a_, std::int64_t b_);

    bool is_constant() const { return b == 0; }
    /// Candidate pole a/b; requires b >= 1.
    Fraction ratio() const { return Fraction(a, b); }
    std::string to_string() const;
    std::string to_latex() const;

    friend bool operator==(const DenFactor&, const DenFactor&) = default;
    friend std::strong_ordering operator<=>(const DenFactor& x, const DenFactor& y) {
        if (auto c = x.b <=> y.b; c != 0) return c;
        return y.a <=> x.a;
    }
};

/// Multiset of factors: factor -> multiplicity (always positive).
using Denominator = std::map<DenFactor, int>;

/// Polynomial in T (nonnegative exponents) over GrothElement.
class TPolynomial {
public:
    TPolynomial() = default;
    TPolynomial(GrothElement c);  // constant polynomial
    static TPolynomial monomial(GrothElement c, std::int64_t exponent);
    static TPolynomial of_factor(const DenFactor& f);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::int64_t, GrothElement>& coeffs() const { return coeffs_; }
    GrothElement coeff(std::int64_t k) const;
    std::int64_t degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    TPolynomial& operator+=(const TPolynomial& o);
    TPolynomial& operator-=(const TPolynomial& o);
    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
    TPolynomial operator-() const;
    friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

    /// Coefficient-wise map.
    template <class F>
    TPolynomial map_coeffs(F&& f) const {
        TPolynomial r;
        for (const auto& [k, c] : coeffs_) r.add(k, f(c));
        return r;
    }

    /// Exact quotient by a divisor whose coefficients involve only L and whose
    /// leading coefficient is a unit (or which is constant in T).
    std::optional<TPolynomial> divide_exact(const TPolynomial& divisor) const;

    std::string to_string() const;
    std::string to_latex() const;

    void add(std::int64_t k, const GrothElement& c);

private:
    std::map<std::int64_t, GrothElement> coeffs_;
};

TPolynomial denominator_polynomial(const Denominator& d);

struct ZetaTerm {
    TPolynomial numerator;
    Denominator denominator;

    friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

/// Canonical form: terms sorted by denominator, one term per denominator,
/// no zero numerators.
class ZetaFunction {
public:
    ZetaFunction() = default;
    explicit ZetaFunction(std::vector<ZetaTerm> terms);
    /// c * T^k / prod factors.
    static ZetaFunction term(const GrothElement& c, std::int64_t k, const std::vector<DenFactor>& factors);
    static ZetaFunction term(TPolynomial numerator, const std::vector<DenFactor>& factors);

    const std::vector<ZetaTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<std::string> symbols() const;

    /// Single term over the lcm of the term denominators.
    ZetaTerm combined() const;

    ZetaFunction& operator+=(const ZetaFunction& o);
    friend ZetaFunction operator+(ZetaFunction a, const ZetaFunction& b) { return a += b; }
    friend ZetaFunction operator-(ZetaFunction a, const ZetaFunction& b) { return a += -b; }
    friend ZetaFunction operator*(const ZetaFunction& a, const ZetaFunction& b);
    ZetaFunction operator-() const;
    /// Structural equality of canonical forms; use zf_equal() for value equality.
    friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;

    template <class F>
    ZetaFunction map_coeffs(F&& f) const {
        std::vector<ZetaTerm> out;
        for (const auto& t : terms_) out.push_back({t.numerator.map_coeffs(f), t.denominator});
        return ZetaFunction(std::move(out));
    }

    std::string to_string() const;
    std::string to_latex() const;

private:
    std::vector<ZetaTerm> terms_;
};

/// A series coefficient: numerator / prod of constant factors (1 - L^a).
struct CoeffFraction {
    GrothElement numerator;
    Denominator constant_factors;

    bool equals(const CoeffFraction& other) const;
    std::string to_string() const;
};

/// Restriction of group actions under base change, keyed by (symbol, m).
/// Pairs without an entry restrict to themselves.
class RestrictionMap {
public:
    void set(const std::string& symbol, std::int64_t m, GrothElement image);
    const std::map<std::pair<std::string, std::int64_t>, GrothElement>& entries() const { return entries_; }
    GrothElement apply(const GrothElement& g, std::int64_t m) const;

private:
    std::map<std::pair<std::string, std::int64_t>, GrothElement> entries_;
};

/// T -> L^c T.
ZetaFunction scale_T(const ZetaFunction& x, std::int64_t c);

/// Coefficients of T^1 .. T^n_max.
std::vector<CoeffFraction> series_coeffs(const ZetaFunction& x, std::int64_t n_max);

/// The base change Z^(m): T^i-coefficient is the restricted T^{mi}-coefficient of x.
ZetaFunction multisect(const ZetaFunction& x, std::int64_t m, const RestrictionMap& res = {});

/// Cancels factors that divide the combined numerator, and lowers
/// (1 - L^a T^b) to (1 - L^{a/d} T^{b/d}) when the cyclotomic cofactor divides.
/// The result has at most one term.
ZetaFunction simplify(const ZetaFunction& x);

bool zf_equal(const ZetaFunction& x, const ZetaFunction& y);

/// Ratios a/b of the T-active factors of simplify(x).
std::set<Fraction> candidate_poles(const ZetaFunction& x);

/// Applies rewrite rules to every coefficient.
ZetaFunction rewrite(const ZetaFunction& x, std::span<const RewriteRule> rules);

}  // namespace motzeta
