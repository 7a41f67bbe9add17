#pragma once

/**
 * @file zeta.hpp
 * @brief Certified values of ζ(k) at integers k >= 2 and the archimedean
 *        volume constants ζ(2)²ζ(3)²ζ(4)²ζ(5)/(2 n_i).
 */

#include "qpl/constants/fixed_real.hpp"

#include <string>

namespace qpl {

/// A named real constant with a certified enclosure.
struct ConstantReport {
    std::string name;
    FixedReal value;  ///< midpoint ± radius; the radius is the certified error bound
    std::string notes;

    [[nodiscard]] Rat error_bound() const { return value.radius(); }
    [[nodiscard]] std::string decimal(int digits = 20) const { return value.to_decimal(digits); }
};

/// Guard bits added to every requested precision.
inline constexpr int kGuardBits = 16;

/**
 * ζ(k) by Euler–Maclaurin summation, carried out in exact rationals; the
 * remainder is bounded by the first omitted Bernoulli term.  The certified
 * error is below 2^-precision_bits.
 */
ConstantReport zeta(int k, int precision_bits = 96);

/**
 * ζ(k) by direct summation of n^-k for n <= terms, enclosing the tail between
 * the integrals from terms+1 and from terms (an independent second method).
 */
ConstantReport zeta_direct(int k, long terms, int precision_bits = 96);

/// Bernoulli number B_n (B_1 = -1/2).
Rat bernoulli(int n);

/// n_i = |Aut_R| of the real étale quintic algebra with i complex places.
long real_algebra_aut_order(int i);

/// ζ(2)²ζ(3)²ζ(4)²ζ(5)/(2 n_i) for i in {0,1,2}.
ConstantReport theorem6_constant(int i, int precision_bits = 96);

}  // namespace qpl
