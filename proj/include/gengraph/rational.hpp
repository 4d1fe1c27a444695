#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "gengraph/errors.hpp"

namespace gengraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

/// Smallest integer >= q.
inline BigInt ceil_rational(const Rational& q) {
    BigInt n = num(q), d = den(q);  // d > 0
    BigInt quot = n / d;
    if (n % d != 0 && n > 0) ++quot;
    return quot;
}

/// "p/q" (always with an explicit denominator, for schema stability).
inline std::string to_fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Radical expressions q1 + q2*sqrt(n)
//
// The closed-form bounds contain sqrt(|G|); keeping that radical symbolic
// lets every comparison be decided exactly by squaring through the sign
// cases.  All Radical values in one comparison must share the same n.
// ---------------------------------------------------------------------------

struct Radical {
    Rational q1;      // rational part
    Rational q2;      // coefficient of sqrt(n)
    unsigned long n;  // non-negative integer under the radical

    static Radical of(const Rational& value) { return Radical{value, 0, 0}; }

    /// Exact sign: -1, 0, +1.
    int sign() const {
        const int s1 = sign_of(q1), s2 = sign_of(q2);
        if (s2 == 0 || n == 0) return s1;
        if (s1 == 0) return s2;
        if (s1 == s2) return s1;
        // opposite signs: compare q1^2 against q2^2 * n
        const Rational lhs = q1 * q1, rhs = q2 * q2 * n;
        if (lhs == rhs) return 0;
        return lhs > rhs ? s1 : s2;
    }

    Radical operator-(const Radical& o) const {
        if (n != o.n && sign_of(q2) != 0 && sign_of(o.q2) != 0)
            throw InvariantError("radical comparison across different radicands");
        return Radical{q1 - o.q1, q2 - o.q2, sign_of(q2) != 0 ? n : o.n};
    }

    bool operator>=(const Radical& o) const { return (*this - o).sign() >= 0; }
    bool operator<=(const Radical& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const Rational& r) const { return *this >= of(r); }
    bool operator<=(const Rational& r) const { return *this <= of(r); }

    /// Rendered as "q1 + q2*sqrt(n)" with fraction strings.
    std::string str() const {
        return to_fraction_string(q1) + " + " + to_fraction_string(q2) + "*sqrt(" +
               std::to_string(n) + ")";
    }

    double approx() const {
        double r = to_double(q1);
        if (sign_of(q2) != 0) r += to_double(q2) * std::sqrt(double(n));
        return r;
    }
};

}  // namespace gengraph
