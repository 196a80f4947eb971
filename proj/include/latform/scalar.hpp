#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace latform {

// All arithmetic in this project is exact. Integer and Rational wrap GMP;
// mpq_class keeps values in lowest terms with positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

inline Integer to_integer(const Rational& q) {
    if (!is_integral(q))
        throw std::domain_error("expected integral value, got " + q.get_str());
    return q.get_num();
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return 1;
    if (base == 0 && exp < 0) throw std::domain_error("zero to negative power");
    Rational r = 1;
    Rational b = exp > 0 ? base : Rational(1) / base;
    for (long i = 0, n = exp > 0 ? exp : -exp; i < n; ++i) r *= b;
    return r;
}

// Exact integer square root; throws unless the argument is a perfect square.
inline Integer exact_sqrt(const Integer& n) {
    if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0)
        throw std::domain_error("not a perfect square: " + n.get_str());
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Largest t >= 0 with t^2 <= q; q must be nonnegative.
inline Integer floor_sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("floor_sqrt of negative value");
    Integer t;
    mpz_sqrt(t.get_mpz_t(), Integer(q.get_num() / q.get_den()).get_mpz_t());
    while (Rational((t + 1) * (t + 1)) <= q) ++t;
    while (t > 0 && Rational(t * t) > q) --t;
    return t;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace latform
