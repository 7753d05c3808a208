#pragma once

// Expression mini-language for ring elements:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] digits)*
//   primary := digits | identifier | '(' expr ')'
//
// Whitespace is insignificant. Negative exponents are accepted only on units
// (powers of L, or of w for Laurent polynomials).

#include "motzeta/common.hpp"
#include "motzeta/groth_ring.hpp"
#include "motzeta/polynomial.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace motzeta::expr {

struct Node {
    enum class Kind { Integer, Identifier, Neg, Add, Sub, Mul, Pow };
    Kind kind;
    Integer value;            // Integer
    std::string name;         // Identifier
    std::int64_t exponent = 0;  // Pow
    std::size_t position = 0;
    std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

/// Throws ParseError with the offending offset.
NodePtr parse(std::string_view text);

/// `L` is the Lefschetz class; any other identifier is a class symbol.
GrothElement parse_groth(std::string_view text);

/// Laurent polynomial in `var`; no other identifiers are accepted.
LaurentPoly parse_laurent(std::string_view text, const std::string& var = "w");

}  // namespace motzeta::expr
