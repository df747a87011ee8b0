#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace nek {

// All probabilities, state values and LP coefficients are exact rationals.
// cpp_rational keeps numerator/denominator reduced with a positive
// denominator, so equality is plain operator== and printing is canonical.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat_half() { return Rat(1, 2); }

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts an optionally signed integer or integer/integer pair. Returns
// nullopt on malformed input or a zero denominator.
inline std::optional<Rat> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s,
                        boost::multiprecision::cpp_int& out) -> bool {
        if (s.empty()) return false;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) return false;
        boost::multiprecision::cpp_int v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
            v = v * 10 + (s[i] - '0');
        }
        out = neg ? -v : v;
        return true;
    };

    boost::multiprecision::cpp_int num, den = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den == 0) return std::nullopt;
    }
    return Rat(num, den);
}

}  // namespace nek
