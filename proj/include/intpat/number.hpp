#pragma once

// Exact decimal handling. Cells are parsed to (mantissa, exponent) pairs and each
// column is later rescaled to a common number of fractional digits, so every value
// becomes a plain int64 and equality/ordering are exact.

#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "intpat/errors.hpp"

namespace intpat {

/// Fixed-point value in the units of its attribute (see NumericalDataset::scale).
using Value = std::int64_t;

struct Decimal {
    std::int64_t mantissa = 0;
    int exponent = 0; ///< value = mantissa * 10^exponent; trailing zeros are folded into the exponent

    friend bool operator==(const Decimal&, const Decimal&) = default;
};

namespace detail {

inline constexpr int kMaxDigits = 18;

inline bool checked_mul10(std::int64_t& v) {
    if (v > std::numeric_limits<std::int64_t>::max() / 10 ||
        v < std::numeric_limits<std::int64_t>::min() / 10)
        return false;
    v *= 10;
    return true;
}

inline std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses `[+-]digits[.digits][(e|E)[+-]digits]`. Returns nullopt for anything else,
/// including nan/inf and numbers with more than 18 significant digits.
inline std::optional<Decimal> parse_decimal(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) return std::nullopt;

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    std::int64_t mantissa = 0;
    int significant = 0;
    int exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    std::size_t i = 0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            if (seen_point) return std::nullopt;
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') break;
        any_digit = true;
        if (seen_point) --exponent;
        if (mantissa == 0 && c == '0') continue;
        if (++significant > detail::kMaxDigits) return std::nullopt;
        mantissa = mantissa * 10 + (c - '0');
    }
    if (!any_digit) return std::nullopt;

    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') return std::nullopt;
        std::string_view exp_text = s.substr(i + 1);
        if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
        if (exp_text.empty()) return std::nullopt;
        int e = 0;
        const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), e);
        if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) return std::nullopt;
        if (e > 1000 || e < -1000) return std::nullopt;
        exponent += e;
    }

    if (mantissa == 0) return Decimal{0, 0};
    while (mantissa % 10 == 0) {
        mantissa /= 10;
        ++exponent;
    }
    return Decimal{negative ? -mantissa : mantissa, exponent};
}

/// Number of fractional digits needed to represent `d` exactly.
inline int fractional_digits(const Decimal& d) { return d.exponent < 0 ? -d.exponent : 0; }

/// Converts `d` to an integer count of 10^-scale units. Throws DataError on overflow
/// or when `scale` is too small to hold `d` exactly.
inline Value to_units(const Decimal& d, int scale) {
    const int shift = d.exponent + scale;
    if (shift < 0) throw DataError("value needs more fractional digits than the column scale");
    Value v = d.mantissa;
    for (int k = 0; k < shift; ++k)
        if (!detail::checked_mul10(v)) throw DataError("value out of range for exact representation");
    return v;
}

/// Shortest decimal text of `units * 10^-scale` ("5", "1.25", "-0.5").
inline std::string format_units(Value units, int scale) {
    if (scale <= 0) return std::to_string(units);
    const bool negative = units < 0;
    // |INT64_MIN| does not fit in int64; go through the unsigned type.
    std::uint64_t mag = negative ? std::uint64_t{0} - static_cast<std::uint64_t>(units)
                                 : static_cast<std::uint64_t>(units);
    std::string digits = std::to_string(mag);
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, static_cast<std::size_t>(scale) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - static_cast<std::size_t>(scale));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(scale));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    if (negative && out != "0") out.insert(0, "-");
    return out;
}

inline double units_to_double(Value units, int scale) {
    return std::stod(format_units(units, scale));
}

} // namespace intpat
