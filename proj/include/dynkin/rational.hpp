#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynkin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Converts an integral rational, throwing if it is not integral.
inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::domain_error("expected an integer, got " + q.str());
    }
    return numerator(q);
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
        return Rational(Integer(text.substr(0, slash)), den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

/// Binomial coefficient C(m, k); zero when m < k or m < 0.
inline Integer binomial(std::int64_t m, std::int64_t k) {
    if (k < 0 || m < k || m < 0) return 0;
    if (k > m - k) k = m - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= m - k + i;
        result /= i;
    }
    return result;
}

/// C(m, 3), the index of R_{m-2}.
inline Integer choose3(std::int64_t m) { return binomial(m, 3); }

}  // namespace dynkin
