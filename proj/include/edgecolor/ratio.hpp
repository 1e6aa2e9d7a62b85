#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace edgecolor {

// Exact positive-denominator fraction. Used for ε and every bound that is
// compared against integer counts.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d);

    long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
    bool in_open_unit_interval() const { return num > 0 && num < den; }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Ratio& a, const Ratio& b);
};

// "0.25", "1/4", "3". Throws UsageError on anything else.
Ratio parse_ratio(std::string_view text);
std::string to_string(const Ratio& r);

Ratio operator*(const Ratio& a, const Ratio& b);
Ratio operator/(const Ratio& a, std::int64_t k);

// ⌈p/q⌉ for non-negative p, positive q.
constexpr std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return (p + q - 1) / q; }

// ⌈c/ε⌉ for integer c > 0.
std::int64_t ceil_inverse(const Ratio& eps, std::int64_t c = 1);

// lhs ≥ r · rhs, compared exactly.
bool at_least_fraction(std::int64_t lhs, const Ratio& r, std::int64_t rhs);

} // namespace edgecolor
