#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlab {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// Rationals are kept canonical (lowest terms, positive denominator) by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "3", "-9/4" style strings.
Rational rational_from_string(std::string_view s);

/// Render as "num" when the denominator is 1, else "num/den".
std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer int_pow(const Integer& base, unsigned long exp);

/// q-analog [n]_q = (q^n - 1)/(q - 1).
Integer q_int(unsigned n, const Integer& q);

/// q-factorial [n]_q!.
Integer q_factorial(unsigned n, const Integer& q);

/// Gaussian binomial coefficient [n choose k]_q.
Integer q_binomial(unsigned n, unsigned k, const Integer& q);

}  // namespace nlab
