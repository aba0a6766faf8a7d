#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers (GMP-backed) and the small helpers the rest
 *        of the library needs around them: parsing, printing, exact square
 *        roots and conversion to floating point.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <algorithm>
#include <string>
#include <string_view>

namespace qescal {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

/// "num/den" with a positive denominator; integers are written "num/1".
inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Human-oriented form: integers without the "/1".
inline std::string to_pretty_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return to_string(q);
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    // A leading zero would make the GMP parser read octal.
    s.remove_prefix(std::min(s.find_first_not_of('0'), s.size() - 1));
    Integer v{std::string(s)};
    return neg ? Integer(-v) : v;
}

}  // namespace detail

/// Parses "p", "p/q", or a plain decimal "d.ddd" (read exactly, so "0.5" is 1/2).
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty rational");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash));
        Integer den = detail::parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        bool neg = false;
        std::string_view body = s;
        if (body.front() == '-' || body.front() == '+') {
            neg = body.front() == '-';
            body.remove_prefix(1);
            --dot;
        }
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        if ((!int_part.empty() && !detail::all_digits(int_part)) ||
            (!frac_part.empty() && !detail::all_digits(frac_part)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        Integer digits = detail::parse_integer(std::string(int_part) + std::string(frac_part));
        Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
        Rational v(digits, scale);
        return neg ? Rational(-v) : v;
    }
    return Rational(detail::parse_integer(s));
}

/// Exact square root when q is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator(q), d = denominator(q);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

inline Rational factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1).
inline Rational pochhammer(const Rational& x, unsigned n) {
    Rational p = 1;
    for (unsigned i = 0; i < n; ++i) p *= x + i;
    return p;
}

/// Generalized binomial coefficient C(top, k) for rational top.
inline Rational binomial(const Rational& top, unsigned k) {
    Rational p = 1;
    for (unsigned i = 0; i < k; ++i) p *= (top - i) / Rational(i + 1);
    return p;
}

}  // namespace qescal
