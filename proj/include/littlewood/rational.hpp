// littlewood - exact rational scalars and parsing helpers.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace littlewood {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Canonical lowest-terms rendering: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "a/b" or a bare integer "a". Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rational parse_rational(std::string_view text)
{
    auto bad = [&] { throw std::invalid_argument("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty())
        bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(text)));
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0)
            bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(); // unreachable
}

} // namespace littlewood
