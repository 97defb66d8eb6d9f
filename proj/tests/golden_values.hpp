#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dycknet/bigfloat.hpp"

namespace dycknet::testing {

// A golden table entry is a decimal literal carrying its own number of
// significant figures ("1.3e-04" pins two, "2.58e-04" pins three, "0.0"
// demands an exact zero). matches_printed rounds the computed value to the
// entry's precision and compares digit strings.

struct NormalizedDecimal {
    bool negative = false;
    bool zero = false;
    std::string digits; // significant digits, leading zeros stripped
    long exp10 = 0;     // value = d.dd... * 10^exp10
};

inline NormalizedDecimal normalize_decimal(const std::string& text) {
    NormalizedDecimal out;
    std::string s = text;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        out.negative = s[0] == '-';
        s = s.substr(1);
    }
    long exp10 = 0;
    const auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    const auto dot = s.find('.');
    const std::string int_part = dot == std::string::npos ? s : s.substr(0, dot);
    const std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
    const std::string all = int_part + frac_part;
    if (all.empty()) throw std::invalid_argument("bad decimal literal: " + text);
    for (const char ch : all)
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad decimal literal: " + text);
    long first_sig = -1;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i] != '0') {
            first_sig = static_cast<long>(i);
            break;
        }
    }
    if (first_sig < 0) {
        out.zero = true;
        out.digits = "0";
        return out;
    }
    out.digits = all.substr(static_cast<std::size_t>(first_sig));
    out.exp10 = static_cast<long>(int_part.size()) - 1 - first_sig + exp10;
    return out;
}

inline std::size_t printed_sig_figs(const std::string& text) {
    const NormalizedDecimal n = normalize_decimal(text);
    return n.zero ? 1 : n.digits.size();
}

inline bool matches_printed(const BigFloat& actual, const std::string& printed) {
    const NormalizedDecimal want = normalize_decimal(printed);
    if (want.zero) return actual.is_zero();
    const NormalizedDecimal got =
        normalize_decimal(actual.sci_str(static_cast<int>(want.digits.size())));
    return got.negative == want.negative && got.digits == want.digits && got.exp10 == want.exp10;
}

} // namespace dycknet::testing
