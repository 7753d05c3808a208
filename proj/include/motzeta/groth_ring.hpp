#pragma once

// Symbolic model of the coefficient ring of motivic zeta functions: integer
// combinations of monomials L^k * (product of class symbols), with L invertible.
// The ring is free on its symbols; identities between classes are only known
// through explicit rewrite rules.

#include "motzeta/common.hpp"
#include "motzeta/polynomial.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace motzeta {

struct ClassSymbol {
    std::string name;
    /// Order n of the mu_n-action carried by the class, if any.
    std::optional<int> torsor_order;
    std::string description;
};

/// Append-only catalogue of class symbols. Concurrent readers are safe.
class SymbolRegistry {
public:
    /// Registers a symbol. Re-registering an identical entry is a no-op;
    /// a conflicting entry under an existing name throws.
    void add(ClassSymbol symbol);
    std::optional<ClassSymbol> find(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<ClassSymbol> all() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, ClassSymbol> symbols_;
};

bool is_valid_symbol_name(const std::string& name);

struct Monomial {
    std::int64_t l_exponent = 0;
    /// Sorted by name; exponents are positive.
    std::vector<std::pair<std::string, std::uint32_t>> powers;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool is_pure_l() const { return powers.empty(); }
};

class GrothElement {
public:
    GrothElement() = default;
    GrothElement(long c);
    explicit GrothElement(Integer c);

    static GrothElement symbol(const std::string& name, std::uint32_t exponent = 1);
    /// L^k.
    static GrothElement lefschetz(std::int64_t k = 1);
    static GrothElement monomial(Integer c, Monomial m);
    static GrothElement from_l_poly(const LaurentPoly& p);

    const std::map<Monomial, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::set<std::string> symbols() const;
    /// ±L^k when this is a unit of the ring.
    std::optional<std::pair<int, std::int64_t>> as_unit() const;
    bool is_pure_l() const;
    /// Requires is_pure_l().
    LaurentPoly to_l_poly() const;

    GrothElement& operator+=(const GrothElement& o);
    GrothElement& operator-=(const GrothElement& o);
    GrothElement& operator*=(const GrothElement& o) { return *this = *this * o; }
    friend GrothElement operator+(GrothElement a, const GrothElement& b) { return a += b; }
    friend GrothElement operator-(GrothElement a, const GrothElement& b) { return a -= b; }
    friend GrothElement operator*(const GrothElement& a, const GrothElement& b);
    GrothElement operator-() const;
    GrothElement scaled(const Integer& c) const;
    GrothElement times_l(std::int64_t k) const;
    friend bool operator==(const GrothElement&, const GrothElement&) = default;

    GrothElement pow(std::int64_t e) const;

    /// Exact quotient by a divisor involving only L (no class symbols);
    /// nullopt if the division leaves a remainder.
    std::optional<GrothElement> divide_exact(const GrothElement& l_only) const;

    /// Replaces symbols for which `f` returns a value; single pass.
    GrothElement substitute(const std::function<std::optional<GrothElement>(const std::string&)>& f) const;

    /// Expression-language rendering, parseable by parse_groth().
    std::string to_string() const;
    std::string to_latex() const;

private:
    void add_term(const Monomial& m, const Integer& c);
    std::map<Monomial, Integer> terms_;
};

struct RewriteRule {
    std::string lhs;
    GrothElement rhs;
};

/// Throws CycleError naming the cycle if rules reach their own left-hand side.
void check_acyclic(std::span<const RewriteRule> rules);

/// Substitutes every rule to fixpoint.
GrothElement rewrite(const GrothElement& a, std::span<const RewriteRule> rules);

/// Euler-Poincare values of class symbols; L is always w^2.
class EpAssignment {
public:
    EpAssignment() = default;
    explicit EpAssignment(std::map<std::string, LaurentPoly> values);

    void set(const std::string& symbol, LaurentPoly value);
    /// Throws UnassignedSymbolError.
    const LaurentPoly& at(const std::string& symbol) const;
    bool contains(const std::string& symbol) const { return values_.contains(symbol); }
    const std::map<std::string, LaurentPoly>& values() const { return values_; }

private:
    std::map<std::string, LaurentPoly> values_;
};

/// Ring morphism to Z[w, 1/w]; torsor actions are ignored.
LaurentPoly ep_realize(const GrothElement& a, const EpAssignment& ep);

}  // namespace motzeta
