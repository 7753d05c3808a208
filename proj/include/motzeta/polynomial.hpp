#pragma once

#include "motzeta/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motzeta {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient i multiplies x^i; the vector never has a trailing zero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);
    explicit IntPoly(Integer c);
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly monomial(Integer c, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    IntPoly operator-() const;
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly pow(unsigned e) const;
    IntPoly shifted(std::size_t k) const;

    /// gcd of the coefficients, taken nonnegative (0 for the zero polynomial).
    Integer content() const;
    IntPoly divide_scalar_exact(const Integer& c) const;
    /// Quotient when `d` divides this exactly in Z[x], nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& d) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// gcd in Z[x], normalized to a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Sparse Laurent polynomial in one variable with integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    explicit LaurentPoly(Integer c);

    static LaurentPoly monomial(Integer c, std::int64_t exponent);
    /// The polynomial x^shift * p.
    static LaurentPoly from_poly(const IntPoly& p, std::int64_t shift = 0);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, Integer>& terms() const { return terms_; }
    Integer coeff(std::int64_t e) const;
    std::int64_t min_exponent() const;
    std::int64_t max_exponent() const;
    /// ±x^k when this is a unit of Z[x, 1/x].
    std::optional<std::pair<int, std::int64_t>> as_unit() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly pow(std::int64_t e) const;
    LaurentPoly shifted(std::int64_t k) const;
    /// Polynomial part after multiplying by x^{-min_exponent()}.
    IntPoly to_poly() const;
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    std::string to_string(const std::string& var = "w") const;

private:
    std::map<std::int64_t, Integer> terms_;
};

}  // namespace motzeta
