#pragma once

#include "motzeta/common.hpp"

#include <string>

namespace motzeta::detail {

// Appends `coeff*body` to a sum being rendered; an empty body is a constant.
inline void append_term(std::string& out, const Integer& coeff, const std::string& body) {
    const bool negative = sgn(coeff) < 0;
    Integer mag = abs(coeff);
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (body.empty()) {
        out += mag.get_str();
    } else if (mag == 1) {
        out += body;
    } else {
        out += mag.get_str() + "*" + body;
    }
}

inline std::string power(const std::string& var, std::int64_t e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

inline std::string join_product(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + "*" + b;
}

}  // namespace motzeta::detail
