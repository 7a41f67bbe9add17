#pragma once

/**
 * @file euler_products.hpp
 * @brief Truncated Euler products with certified tail bounds, and the
 *        constant c5 = β_∞ · ∏_p (1 + p^-2 - p^-4 - p^-5).
 */

#include "qpl/algebra/laurent.hpp"
#include "qpl/constants/zeta.hpp"

#include <vector>

namespace qpl {

/// Primes <= n (sieve of Eratosthenes).
std::vector<long> primes_up_to(long n);

/**
 * Relative tail bound for an Euler product ∏_{p > p_max} f(p).
 *
 * f must be a Laurent polynomial in p with constant term 1 and all other
 * exponents <= -2.  Writing m for the smallest |exponent| and
 * A = Σ |c_e| 2^{e+m}, every p >= 2 has |f(p) - 1| <= A p^-m; when
 * A (p_max+1)^-m <= 1/2 the tail satisfies |∏ - 1| <= t + t² with
 * t = 2A p_max^{1-m}/(m-1).  Throws DimensionMismatch when the hypotheses fail.
 */
Rat euler_tail_bound(const LaurentP& f, long p_max);

/// ∏_{p <= p_max} f(p) (no tail), rounded into a FixedReal.
FixedReal euler_partial_product(const LaurentP& f, long p_max, int bits);

/// c5 with its truncation data.
struct C5Result {
    ConstantReport report;  ///< enclosure of the full infinite product
    FixedReal partial;      ///< β_∞ · ∏_{p <= p_max} β_p
    Rat tail_relative;      ///< certified relative tail bound
    long p_max = 0;
    std::size_t primes = 0;
};

/// β_∞ ∏_{p <= p_max} β_p with the certified tail from euler_tail_bound.
C5Result c5_constant(int precision_bits, long p_max);

/**
 * Two independent accelerated evaluations of c5:
 *  route A = β_∞ ζ(2) ∏ β_p (1 - p^-2),
 *  route B = β_∞ ζ(2) ζ(4)² ζ(5) ∏ s_p, where s_p = β_p (1-p^-2)(1-p^-4)²(1-p^-5)
 *            is the density of maximal elements with the local ζ_p(2) ζ_p(3)²
 *            factors restored.
 * Both enclosures include their tails.
 */
struct C5Routes {
    ConstantReport route_a;
    ConstantReport route_b;
    Rat difference;  ///< |mid_a - mid_b|
    Rat combined_error;
    bool overlap = false;  ///< the two enclosures intersect

    [[nodiscard]] bool consistent_within(const Rat& tol) const { return overlap && difference <= tol; }
};

C5Routes c5_two_route(int precision_bits, long p_max);

/// Local factors used by the two routes.
LaurentP c5_route_a_factor();
LaurentP c5_route_b_factor();

}  // namespace qpl
