#pragma once

// Euler-Poincare realization of zeta functions and what it can certify about
// poles. EP sends L to w^2, so a factor (1 - L^a T^b) becomes 1 - w^{2a} T^b,
// and a candidate s0 is a pole as soon as the reduced denominator of the
// realized function still vanishes at some zeta * w^{-2 s0}. An uncertified
// candidate may still be a pole; nothing here claims otherwise.

#include "motzeta/bivariate.hpp"
#include "motzeta/common.hpp"
#include "motzeta/groth_ring.hpp"
#include "motzeta/zeta_series.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace motzeta {

/// Reduced element of Q(w, T), stored as num/den in Z[w][T] with gcd 1 and a
/// denominator whose lowest-order coefficient is positive.
class RationalWT {
public:
    RationalWT() : den_(1L) {}
    RationalWT(BiPoly num, BiPoly den = BiPoly(1L));
    /// w^w_shift * num / den; negative shifts move into the denominator.
    RationalWT(BiPoly num, BiPoly den, std::int64_t w_shift);
    /// p(w) * T^k with p a Laurent polynomial.
    static RationalWT monomial(const LaurentPoly& p, std::size_t t_exp);

    const BiPoly& numerator() const { return num_; }
    const BiPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalWT operator+(const RationalWT& x, const RationalWT& y);
    friend RationalWT operator-(const RationalWT& x, const RationalWT& y);
    friend RationalWT operator*(const RationalWT& x, const RationalWT& y);
    friend RationalWT operator/(const RationalWT& x, const RationalWT& y);
    friend bool operator==(const RationalWT&, const RationalWT&) = default;

    std::string to_string() const;

private:
    void reduce();
    BiPoly num_, den_;
};

/// 1 - w^{2a} T^b, cleared of negative w-powers.
BiPoly ep_factor(const DenFactor& f);

/// Pulls a Laurent polynomial in w onto Z[w]: returns (poly, shift) with
/// p = w^shift * poly.
std::pair<IntPoly, std::int64_t> split_laurent(const LaurentPoly& p);

RationalWT ep_zeta(const ZetaFunction& x, const EpAssignment& ep);

/// Reduced fractions mod 1; a/b stands for the eigenvalue exp(2 pi i a/b).
class EigenvalueSet {
public:
    EigenvalueSet() = default;
    explicit EigenvalueSet(const std::vector<Fraction>& values);
    /// Comma-separated fractions such as "0/1,1/2".
    static EigenvalueSet parse(const std::string& text);

    void insert(const Fraction& f) { values_.insert(f.mod_one()); }
    bool contains(const Fraction& f) const { return values_.contains(f.mod_one()); }
    const std::set<Fraction>& values() const { return values_; }
    std::string to_string() const;

private:
    std::set<Fraction> values_;
};

struct PoleDetail {
    Fraction pole;
    bool certified = false;
    /// Largest factor (1 - L^a T^b) of the simplified function with a/b = pole.
    DenFactor factor;
    /// The k with 1 - w^{2pk} T^{qk} meeting the denominator, when certified.
    std::optional<std::int64_t> k;
    /// Common factor found with the reduced EP denominator, when certified.
    std::string common_factor;
};

struct PoleReport {
    std::set<Fraction> candidates;
    std::set<Fraction> certified;
    std::set<Fraction> uncertified;
    std::vector<PoleDetail> details;  // sorted by pole
};

PoleDetail certify_pole_detail(const ZetaFunction& x, const EpAssignment& ep, const Fraction& s0);
/// Throws Error when s0 is not a candidate pole of x.
bool certify_pole(const ZetaFunction& x, const EpAssignment& ep, const Fraction& s0);
PoleReport pole_report(const ZetaFunction& x, const EpAssignment& ep);

enum class MonodromyVerdict { Proven, Violated, Undetermined };
std::string to_string(MonodromyVerdict v);

struct MonodromyResult {
    MonodromyVerdict verdict = MonodromyVerdict::Undetermined;
    PoleReport report;
    /// A certified pole whose eigenvalue is outside the set, when violated.
    std::optional<Fraction> offending;
};

MonodromyResult check_monodromy(const ZetaFunction& x, const EpAssignment& ep, const EigenvalueSet& ev);

enum class ObstructionVerdict { Obstructed, Consistent };
std::string to_string(ObstructionVerdict v);

struct ObstructionResult {
    ObstructionVerdict verdict = ObstructionVerdict::Consistent;
    PoleReport report;
    /// The two largest certified poles, ascending, when obstructed.
    std::vector<Fraction> witness;
};

/// A model with good reduction has a single pole, so two certified poles
/// rule out every birational model with good reduction. Only that count is
/// decided here; the remaining hypotheses are on the caller.
ObstructionResult good_reduction_obstruction(const ZetaFunction& x, const EpAssignment& ep);

}  // namespace motzeta
