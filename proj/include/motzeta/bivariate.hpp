#pragma once

#include "motzeta/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace motzeta {

/// Polynomial in T with coefficients in Z[w]: coefficient k multiplies T^k.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(long c);
    explicit BiPoly(IntPoly c);
    explicit BiPoly(std::vector<IntPoly> coeffs);

    /// c * w^i * T^k.
    static BiPoly monomial(Integer c, std::size_t w_exp, std::size_t t_exp);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<IntPoly>& coeffs() const { return coeffs_; }
    const IntPoly& leading() const { return coeffs_.back(); }
    IntPoly coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : IntPoly(); }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const IntPoly& c);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(unsigned e) const;
    /// Multiplies by w^k.
    BiPoly w_shifted(std::size_t k) const;

    /// gcd in Z[w] of the T-coefficients, with positive leading coefficient.
    IntPoly content() const;
    std::optional<BiPoly> divide_exact(const IntPoly& c) const;
    std::optional<BiPoly> divide_exact(const BiPoly& d) const;

    /// Sign making the leading coefficient (in T, then in w) positive.
    int sign() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<IntPoly> coeffs_;
};

/// gcd in Z[w][T] (equivalently, over Q up to a constant), via contents and
/// the subresultant remainder sequence; positive leading coefficient.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace motzeta
