#include "nucleuslab/rational.hpp"

namespace nlab {

Rational rational_from_string(std::string_view s) {
    Rational r;
    if (r.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + std::string(s));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Integer q_int(unsigned n, const Integer& q) {
    if (q == 1) return Integer(n);
    return (int_pow(q, n) - 1) / (q - 1);
}

Integer q_factorial(unsigned n, const Integer& q) {
    Integer out = 1;
    for (unsigned i = 1; i <= n; ++i) out *= q_int(i, q);
    return out;
}

Integer q_binomial(unsigned n, unsigned k, const Integer& q) {
    if (k > n) return Integer(0);
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

}  // namespace nlab
