#pragma once

/**
 * @file factor.hpp
 * @brief Complete factorization of squarefree integer polynomials of degree <= 5.
 *
 * A polynomial of degree at most 5 is reducible iff it has a factor of degree
 * 1 or 2, so it suffices to search for those.  The search factors f modulo a
 * single prime p exceeding twice a Mignotte-type bound on the coefficients of
 * lc(f)·g for any factor g, then tries every subset of modular factors of
 * total degree 1 or 2 (at most 15 subsets) and confirms candidates by exact
 * division over Z.
 */

#include "qpl/algebra/int_poly.hpp"

#include <vector>

namespace qpl {

/**
 * Irreducible factors of a squarefree polynomial of degree 1..5.
 *
 * Factors are primitive with positive leading coefficient, sorted by degree;
 * their product equals f up to sign and the content of f (a constant factor
 * |content| > 1 is returned first as a degree-0 polynomial).
 */
std::vector<IntPoly> factor_small_degree(const IntPoly& f);

/// factor_small_degree restricted to degree exactly 5 (throws NotQuintic).
std::vector<IntPoly> factor_quintic(const IntPoly& f);

/// True iff a squarefree degree <= 5 polynomial is irreducible over Q.
bool is_irreducible(const IntPoly& f);

/// Prime used by the modular step for f (exposed for tests).
Int factoring_prime(const IntPoly& f);

}  // namespace qpl
