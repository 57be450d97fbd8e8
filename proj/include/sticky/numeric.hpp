#pragma once

// Exact arithmetic kernel: arbitrary-precision rationals and integers plus
// the primitive geometric comparisons everything else is built on. All
// computation here is exact; nothing rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sticky {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed input text (CLI files, rational tokens). Mapped to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input violating a domain rule or guard. Mapped to exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// num/den with any signs, den != 0. Canonical form comes from the division.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) {
        throw ValidationError("rational with zero denominator");
    }
    return Rational(std::move(num)) / Rational(std::move(den));
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

inline BigInt digits_to_int(std::string_view s) {
    // cpp_int's string constructor treats a leading 0 as an octal prefix
    while (s.size() > 1 && s.front() == '0') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s));
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

// Accepts an integer ("-3"), a fraction ("p/q"), or a finite decimal
// ("1.25"). Decimals convert exactly: 1.25 -> 5/4, never a binary float.
inline Rational parse_rational(std::string_view text) {
    const std::string_view tok = detail::trim(text);
    auto fail = [&]() -> ParseError {
        return ParseError("malformed rational '" + std::string(text) + "'");
    };

    std::string_view body = tok;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw fail();
    }

    if (auto pos = body.find('/'); pos != std::string_view::npos) {
        const std::string_view num = body.substr(0, pos);
        const std::string_view den = body.substr(pos + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) {
            throw fail();
        }
        BigInt d = detail::digits_to_int(den);
        if (d == 0) {
            throw ParseError("zero denominator in rational '" + std::string(text) + "'");
        }
        BigInt n = detail::digits_to_int(num);
        if (negative) {
            n = -n;
        }
        return make_rational(std::move(n), std::move(d));
    }

    if (auto pos = body.find('.'); pos != std::string_view::npos) {
        const std::string_view whole = body.substr(0, pos);
        const std::string_view frac = body.substr(pos + 1);
        if (whole.empty() && frac.empty()) {
            throw fail();
        }
        if (!whole.empty() && !detail::all_digits(whole)) {
            throw fail();
        }
        if (!frac.empty() && !detail::all_digits(frac)) {
            throw fail();
        }
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        BigInt n = (whole.empty() ? BigInt(0) : detail::digits_to_int(whole)) * scale +
                   (frac.empty() ? BigInt(0) : detail::digits_to_int(frac));
        if (negative) {
            n = -n;
        }
        return make_rational(std::move(n), std::move(scale));
    }

    if (!detail::all_digits(body)) {
        throw fail();
    }
    BigInt n = detail::digits_to_int(body);
    if (negative) {
        n = -n;
    }
    return Rational(std::move(n));
}

// Canonical text form: "p/q" with q > 0 and gcd(|p|,q) = 1, or just "p" for
// integers. parse_rational(rational_to_string(q)) == q.
inline std::string rational_to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline BigInt floor_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q); // den > 0
    BigInt quot = num / den;                                  // truncates toward zero
    if (num < 0 && quot * den != num) {
        --quot;
    }
    return quot;
}

// ceil(q) = -floor(-q), kept exact on integers.
inline BigInt ceil_rational(const Rational& q) {
    return -floor_rational(-q);
}

// binomial(n, k) extended with value 0 for k < 0 (and the usual 0 for k > n).
inline BigInt binom_plus(long long n, long long k) {
    if (n < 0) {
        throw ValidationError("binom_plus requires n >= 0");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact at every step
    }
    return result;
}

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Rational slope(const Point2& p1, const Point2& p2) {
    if (p1.x == p2.x) {
        throw ValidationError("degenerate slope: points share x-coordinate " +
                              rational_to_string(p1.x));
    }
    return (p2.y - p1.y) / (p2.x - p1.x);
}

// > 0 if o->a->b turns counterclockwise, 0 if collinear, < 0 if clockwise.
inline Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int orientation(const Point2& o, const Point2& a, const Point2& b) {
    const Rational c = cross(o, a, b);
    if (c > 0) {
        return 1;
    }
    if (c < 0) {
        return -1;
    }
    return 0;
}

// Fixed-point decimal rendering of an exact rational, rounding half away
// from zero at the last digit. Pure integer arithmetic, so the output is
// identical on every platform; used for SVG coordinates and report columns.
inline std::string format_decimal(const Rational& q, int digits) {
    if (digits < 0) {
        throw ValidationError("format_decimal requires digits >= 0");
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    // round(mag * scale) with ties away from zero
    const BigInt num = boost::multiprecision::numerator(mag) * scale;
    const BigInt den = boost::multiprecision::denominator(mag);
    BigInt scaled = (2 * num + den) / (2 * den);

    std::string body = scaled.str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (negative && scaled != 0) {
        out.insert(0, 1, '-');
    }
    return out;
}

// Decimal of sqrt(q) truncated at `digits` digits, again via pure integer
// arithmetic (floor square root of the scaled value).
inline std::string decimal_sqrt(const Rational& q, int digits) {
    if (q < 0) {
        throw ValidationError("decimal_sqrt requires a non-negative value");
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const Rational scaled = q * scale * scale;
    const BigInt root = boost::multiprecision::sqrt(floor_rational(scaled));
    std::string body = root.str();
    if (digits == 0) {
        return body;
    }
    if (body.size() <= static_cast<std::size_t>(digits)) {
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    return body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
}

} // namespace sticky
