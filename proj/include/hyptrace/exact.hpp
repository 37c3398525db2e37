#pragma once

// Exact scalars. All trace values, coefficients and intermediate sums are
// carried as GMP integers/rationals; nothing in the library rounds.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hyptrace/errors.hpp"

namespace hyptrace {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e for a possibly negative exponent; base must be nonzero when e < 0.
inline Rational rpow(long base, long e) {
    if (e >= 0) return Rational(ipow(BigInt(base), static_cast<unsigned long>(e)));
    if (base == 0) throw InvalidParameter("zero raised to a negative power");
    Rational r(BigInt(1), ipow(BigInt(base), static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParameter("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline BigInt to_integer(Rational q) {
    q.canonicalize();
    if (!is_integral(q)) throw ConsistencyError("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hyptrace
