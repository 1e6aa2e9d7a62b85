#include "edgecolor/ratio.hpp"

#include "edgecolor/errors.hpp"

#include <charconv>
#include <numeric>

namespace edgecolor {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw UsageError("ratio overflow");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_integer(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw UsageError("not an integer: '" + std::string(s) + "'");
    }
    return value;
}

} // namespace

Ratio::Ratio(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw UsageError("ratio with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num = g == 0 ? 0 : n / g;
    den = g == 0 ? 1 : d / g;
}

bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

Ratio operator*(const Ratio& a, const Ratio& b) {
    return Ratio(narrow(static_cast<i128>(a.num) * b.num), narrow(static_cast<i128>(a.den) * b.den));
}

Ratio operator/(const Ratio& a, std::int64_t k) {
    return Ratio(a.num, narrow(static_cast<i128>(a.den) * k));
}

Ratio parse_ratio(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Ratio(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Ratio(parse_integer(text), 1);
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string_view::npos) {
        throw UsageError("not a decimal: '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        scale *= 10;
    }
    const std::int64_t w = whole.empty() ? 0 : parse_integer(whole);
    const std::int64_t f = parse_integer(frac);
    if (w < 0 || (!whole.empty() && whole.front() == '-')) {
        throw UsageError("negative ratio: '" + std::string(text) + "'");
    }
    return Ratio(narrow(static_cast<i128>(w) * scale + f), scale);
}

std::string to_string(const Ratio& r) {
    if (r.den == 1) {
        return std::to_string(r.num);
    }
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::int64_t ceil_inverse(const Ratio& eps, std::int64_t c) {
    if (eps.num <= 0) {
        throw PreconditionError("epsilon must be positive");
    }
    const i128 p = static_cast<i128>(c) * eps.den;
    return narrow((p + eps.num - 1) / eps.num);
}

bool at_least_fraction(std::int64_t lhs, const Ratio& r, std::int64_t rhs) {
    return static_cast<i128>(lhs) * r.den >= static_cast<i128>(r.num) * rhs;
}

} // namespace edgecolor
