#ifndef SOMOS_RATIONAL_HPP
#define SOMOS_RATIONAL_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "somos/errors.hpp"

namespace somos {

// Exact arithmetic substrate. mpq keeps values canonical: lowest terms,
// positive denominator, no rounding anywhere.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numer(const Rational &q) { return numerator(q); }
inline Integer denom(const Rational &q) { return denominator(q); }

inline bool is_integer(const Rational &q) { return denom(q) == 1; }

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational &q)
{
    if (is_integer(q)) {
        return numer(q).str();
    }
    return numer(q).str() + "/" + denom(q).str();
}

// Parses "p", "p/q", with optional sign; throws validation_error on junk.
Rational parse_rational(const std::string &s);

// q^e for any integer e (exact; negative exponents invert).
inline Rational pow_rational(const Rational &q, long long e)
{
    if (e == 0) {
        return Rational(1);
    }
    if (q == 0) {
        if (e < 0) {
            throw domain_error("0 raised to a negative power");
        }
        return Rational(0);
    }
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long long n = e > 0 ? static_cast<unsigned long long>(e)
                                 : static_cast<unsigned long long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1ULL) {
            acc *= base;
        }
        base *= base;
        n >>= 1;
    }
    return acc;
}

// Exact square root when q is the square of a rational; nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational &q);

// True iff a | b over the integers (both must be integers; 0 | 0 holds).
bool divides(const Rational &a, const Rational &b);

}

#endif
