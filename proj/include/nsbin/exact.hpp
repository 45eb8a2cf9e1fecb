#pragma once

/**
 * @file exact.hpp
 * @brief Arbitrary-precision integer and rational aliases plus the textual
 * forms used on the command line and in reports.
 *
 * Rationals are always kept reduced with a positive denominator (a property
 * of cpp_rational); "p/q" is the canonical lossless form.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "nsbin/errors.hpp"

namespace nsbin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow_big(std::int64_t base, unsigned exponent)
{
    return boost::multiprecision::pow(BigInt(base), exponent);
}

/// num/den reduced, with the sign moved to the numerator.
inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw Error(ErrorKind::InvalidArgument, "zero denominator");
    return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

/// "p/q" with q > 0, always including the denominator.
inline std::string to_fraction_string(const Rational& q)
{
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// "p/q", or just "p" when the value is an integer.
inline std::string to_display_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return to_fraction_string(q);
}

namespace detail {

inline BigInt parse_big_integer(std::string_view text)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw Error(ErrorKind::InvalidSyntax, "expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw Error(ErrorKind::InvalidSyntax, "expected an integer, got '" + std::string(text) + "'");
    }
    BigInt value(std::string(text.substr(i)));
    return text[0] == '-' ? BigInt(-value) : value;
}

} // namespace detail

/// Accepts "p/q" or "p"; unreduced input is reduced.
inline Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_big_integer(text));
    BigInt num = detail::parse_big_integer(text.substr(0, slash));
    BigInt den = detail::parse_big_integer(text.substr(slash + 1));
    if (den == 0)
        throw Error(ErrorKind::InvalidSyntax, "zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

/// Fixed-point rendering rounded half away from zero, e.g. 137/338 -> "0.405".
inline std::string to_decimal_string(const Rational& q, unsigned places)
{
    const bool negative = q < 0;
    const Rational magnitude = negative ? Rational(-q) : q;
    const BigInt scale = pow_big(10, places);
    const BigInt num = boost::multiprecision::numerator(magnitude) * scale;
    const BigInt den = boost::multiprecision::denominator(magnitude);
    BigInt rounded = num / den;
    if ((num % den) * 2 >= den)
        ++rounded;

    std::string digits = rounded.str();
    if (digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out = negative && rounded != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace nsbin
