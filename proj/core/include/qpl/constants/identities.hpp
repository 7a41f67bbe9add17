#pragma once

/**
 * @file identities.hpp
 * @brief Exact Laurent-polynomial checks of the closed-form local densities
 *        (maximal-element density, |G(F_p)|, unramified and ramified
 *        proportions) and the series behind the N(W_p; X) = O(X/p²) bound.
 */

#include "qpl/algebra/laurent.hpp"
#include "qpl/constants/zeta.hpp"

#include <string>
#include <vector>

namespace qpl {

/// One exact identity between Laurent polynomials in p.
struct IdentityCheck {
    std::string name;
    std::string statement;
    LaurentP left;
    LaurentP right;
    bool verdict = false;  ///< laurent_equal(left, right)
};

/// Product over i of (p^i - 1) for i in [from, to].
LaurentP cyclotomic_block(int from, int to);
/// |GL_n(F_p)| = p^{n(n-1)/2} ∏_{k=1}^{n} (p^k - 1).
LaurentP gl_order(int n);
/// |SL_n(F_p)| = p^{n(n-1)/2} ∏_{k=2}^{n} (p^k - 1).
LaurentP sl_order(int n);

/// p^40 μ(U_p): (p-1)^8 p^12 (p+1)^4 (p²+1)² (p²+p+1)² (p⁴+p³+p²+p+1)(p⁴+p³+2p²+2p+1).
LaurentP maximal_density_numerator();
/// The product form (p-1)^8 p^16 (p+1)^4 (p²+1)² (p²+p+1)² (p⁴+p³+p²+p+1) of |G(F_p)|.
LaurentP group_order_formula();
/// (1-p^-2)²(1-p^-3)²(1-p^-4)²(1-p^-5), the inverse local zeta factors.
LaurentP local_zeta_inverse();
/// Σ over unramified splitting types of 1/|Aut| (= Σ_classes 1/|centralizer|).
Rat unramified_mass();

/// Proportion of maximal elements ramified at p, 1 - |G(F_p)| p^-40 Σ(1/Aut) / μ(U_p).
Rat ramified_proportion(long p);
/// The closed form (p+1)(p²+p+1)/(p⁴+p³+2p²+2p+1).
Rat ramified_proportion_closed_form(long p);

/// Identities (a)..(e) of the local-density chain, all evaluated exactly.
std::vector<IdentityCheck> euler_factor_identities();

/// Bookkeeping for Σ_{k>=1} p^{min(2k-2, ⌊20k/11⌋) - 2k}.
struct WpBound {
    long p = 0;
    int crossover = 0;  ///< last k with 2k-2 <= ⌊20k/11⌋
    Rat head;           ///< Σ_{k <= crossover}
    Rat tail;           ///< geometric closed form of Σ_{k > crossover}
    Rat series;         ///< head + tail
    Rat scaled;         ///< p² · series
    ConstantReport bound;  ///< ζ(2) · series (the content sum Σ n^6/n^8 = ζ(2))
};

/// Exponent min(2k-2, ⌊20k/11⌋) - 2k of the k-th term.
int wp_exponent(int k);

/// Exact evaluation for a prime p (throws DimensionMismatch if p is not prime).
WpBound wp_series_bound(long p, int precision_bits = 64);

}  // namespace qpl
