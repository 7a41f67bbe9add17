#pragma once

/**
 * @file numbers.hpp
 * @brief Arbitrary-precision integer and rational scalars.
 *
 * GMP's C++ wrappers provide the storage and the primitive operations; this
 * header only fixes the names used throughout the library and adds a few
 * helpers (signs, string conversion, exact powers).
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qpl {

using Int = mpz_class;  ///< arbitrary-precision integer
using Rat = mpq_class;  ///< canonical arbitrary-precision rational

/// -1, 0 or +1.
inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& x) { return x.get_str(); }

/// Rational a/b in canonical form.
inline Rat make_rat(const Int& num, const Int& den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// base^exp for a non-negative exponent.
inline Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// base^exp for any integer exponent (base must be nonzero when exp < 0).
inline Rat rpow(const Rat& base, long exp) {
    const unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Int num = ipow(base.get_num(), e);
    Int den = ipow(base.get_den(), e);
    return exp < 0 ? make_rat(den, num) : make_rat(num, den);
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Residue of a modulo m in (-m/2, m/2].
inline Int symmetric_mod(const Int& a, const Int& m) {
    Int r = mod(a, m);
    if (2 * r > m) r -= m;
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace qpl
