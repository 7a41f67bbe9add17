#pragma once

/**
 * @file pencil.hpp
 * @brief Sub-Pfaffian quadrics of a quadruple, the five-point quotient
 *        algebra, its characteristic quintic, and the classification pipeline.
 *
 * For M(t) = t1·A + t2·B + t3·C + t4·D the five 4×4 sub-Pfaffians Q1..Q5 are
 * quadrics in t whose common zero locus is (generically) five points of P³.
 * The graded pieces of S/(Q1..Q5) in degrees 3 and 4 are both 5-dimensional;
 * multiplication by generic linear forms ℓ0, ℓ maps degree 3 to degree 4, and
 * the operator ℓ0⁻¹ℓ on the degree-3 piece has the five values ℓ(P)/ℓ0(P) as
 * eigenvalues.  Its characteristic polynomial therefore generates the fields
 * of definition of the five points: its real roots count the real points and
 * its factorization over Q mirrors the Galois orbits on the points.
 */

#include "qpl/algebra/int_poly.hpp"
#include "qpl/algebra/matrix.hpp"
#include "qpl/pencil/forms.hpp"
#include "qpl/pencil/quadruple.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace qpl {

/// Q_i(t) = (−1)^{i+1} Pf(M(t) with row and column i removed), i = 1..5.
std::array<QuadricForm, 5> sub_pfaffians(const Quadruple& q);

/// M(t)·(Q1(t), ..., Q5(t))ᵀ as five cubic forms (all zero for every q).
std::array<Form, 5> kernel_identity_residual(const Quadruple& q);

/// Integer 4×4 matrix, row-major, used for t-substitutions.
using Substitution4 = std::array<std::array<Int, 4>, 4>;

struct PencilAlgebra {
    /// Degree-3 monomials whose classes form a basis of the quotient.
    std::vector<Exponent4> basis;
    /// Multiplication by ℓ0 and by ℓ from degree 3 to degree 4, in the bases
    /// of basis monomials; column j of both is scaled by the same positive
    /// integer, so only ℓ0⁻¹ℓ is intrinsic.
    IntMatrix mult_l0;
    IntMatrix mult_l;
    /// The multiplication operator ℓ0⁻¹ℓ on the degree-3 quotient.
    RatMatrix op;
    Form ell0;
    Form ell;
    /// Substitution t ↦ g·t applied before building (identity unless a retry
    /// needed it).
    Substitution4 substitution{};
    int attempt = 0;
};

/// Knobs for the retry loop; defaults match the documented behaviour.
struct PencilOptions {
    int retry_cap = 8;
};

/**
 * Builds the quotient algebra with linear forms drawn from `seed`.
 * Throws DegeneratePencil if the degree-3 or degree-4 quotient is not
 * 5-dimensional, or if no attempt yields an invertible ℓ0-multiplication.
 */
PencilAlgebra pencil_algebra(const Quadruple& q, std::uint64_t seed, const PencilOptions& opts = {});

/**
 * Primitive integer multiple (positive leading coefficient) of the
 * characteristic polynomial of the multiplication operator.  Retries with
 * fresh forms until the polynomial is squarefree; if every attempt fails the
 * last (non-squarefree) polynomial is returned.
 */
IntPoly char_quintic(const Quadruple& q, std::uint64_t seed, const PencilOptions& opts = {});

/// Characteristic polynomial of an already-built algebra, primitive.
IntPoly char_poly(const PencilAlgebra& alg);

enum class PencilStatus { DiscZero, Classified };
enum class S5Status { CertifiedS5, Unknown };

struct S5Certificate {
    S5Status verdict = S5Status::Unknown;
    long transposition_prime = 0;  ///< prime with pattern {1,1,1,2} or {2,3}, 0 if none seen
    long five_cycle_prime = 0;     ///< prime with pattern {5}, 0 if none seen
    int primes_examined = 0;       ///< primes consumed from the budget
};

/**
 * Certifies Galois group S5 for an irreducible quintic: walks the primes
 * 2, 3, 5, ... (each one consumes one unit of `prime_budget`), skips those
 * dividing lc(f)·disc(f), and succeeds once both a transposition witness
 * and a 5-cycle pattern {5} have been seen.  A transposition is witnessed by
 * the pattern {1,1,1,2}, or by {2,3} whose Frobenius cubes to a transposition.
 * A transitive subgroup of S5 containing a transposition and a 5-cycle is S5.
 * Throws NotIrreducible (or NotQuintic) on bad input.
 */
S5Certificate s5_certify(const IntPoly& f, int prime_budget);

struct Classification {
    PencilStatus status = PencilStatus::DiscZero;
    int i = -1;               ///< number of complex-conjugate pairs (Classified only)
    bool reducible = false;
    S5Status s5 = S5Status::Unknown;
    IntPoly char_poly;        ///< empty when the algebra is degenerate
    int disc_sign = 0;        ///< sign of the discriminant surrogate
    std::vector<int> factor_degrees;

    /// Equality on (status, i, reducible) — the G_Z-invariant part.
    [[nodiscard]] bool same_type(const Classification& o) const {
        return status == o.status && i == o.i && reducible == o.reducible;
    }
};

struct ClassifyOptions {
    int retry_cap = 8;
    int prime_budget = 500;
    bool certify_s5 = true;
};

/// Full pipeline; degeneracy is reported as status DiscZero, never thrown.
Classification classify(const Quadruple& q, std::uint64_t seed, const ClassifyOptions& opts = {});

const char* to_string(PencilStatus s);
const char* to_string(S5Status s);

}  // namespace qpl
