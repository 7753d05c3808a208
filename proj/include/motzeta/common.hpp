#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motzeta {

using Integer = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> cycle);
    const std::vector<std::string>& cycle() const { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

class UnassignedSymbolError : public Error {
public:
    explicit UnassignedSymbolError(std::string symbol)
        : Error("no Euler-Poincare value assigned to symbol '" + symbol + "'"), symbol_(std::move(symbol)) {}
    const std::string& symbol() const { return symbol_; }

private:
    std::string symbol_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Reduced rational number with positive denominator, ordered by value.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d = 1);

    /// Representative of the class mod 1, in [0, 1).
    Fraction mod_one() const;
    bool is_integer() const { return den == 1; }
    std::string to_string() const;

    static Fraction parse(const std::string& text);

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);
    friend Fraction operator+(const Fraction& x, const Fraction& y);
};

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace motzeta
