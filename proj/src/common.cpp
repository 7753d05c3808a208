#include "motzeta/common.hpp"

#include <numeric>

namespace motzeta {

namespace {

std::string join_cycle(const std::vector<std::string>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += " -> ";
        out += cycle[i];
    }
    return out;
}

std::string join_violations(const std::vector<std::string>& violations) {
    std::string out = "invalid model:";
    for (const auto& v : violations) out += "\n  - " + v;
    return out;
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("cyclic rewrite rules: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

Fraction::Fraction(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

Fraction Fraction::mod_one() const { return Fraction(floor_mod(num, den), den); }

std::string Fraction::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Fraction Fraction::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Fraction(n);
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        std::int64_t n = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        std::int64_t d = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return Fraction(n, d);
    } catch (const std::logic_error&) {
        throw Error("malformed fraction '" + text + "'");
    }
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    __int128 lhs = static_cast<__int128>(x.num) * y.den;
    __int128 rhs = static_cast<__int128>(y.num) * x.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Fraction operator+(const Fraction& x, const Fraction& y) {
    return Fraction(x.num * y.den + y.num * x.den, x.den * y.den);
}

}  // namespace motzeta
