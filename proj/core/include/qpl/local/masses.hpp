#pragma once

/**
 * @file masses.hpp
 * @brief Étale quintic algebras over Q_p and R and their masses β_p, β_∞.
 *
 * β_p = (p−1)/p · Σ_K 1/(|Aut(K)|·p^{c(K)}) over étale algebras K of degree 5,
 * which should equal 1 + p⁻² − p⁻⁴ − p⁻⁵; β_∞ = ½ Σ 1/|Aut(K)| = 13/120.
 */

#include "qpl/algebra/laurent.hpp"
#include "qpl/algebra/numbers.hpp"
#include "qpl/local/local_fields.hpp"

#include <string>
#include <vector>

namespace qpl {

/// One field factor of an étale algebra together with its multiplicity.
struct EtaleComponent {
    LocalFieldRec field;
    std::size_t class_index = 0;  ///< position in the source table (identifies the class)
    int multiplicity = 1;
};

/// A product of local fields of total degree 5.
struct EtaleQuintic {
    long p = 0;
    std::vector<EtaleComponent> components;

    [[nodiscard]] int degree() const;
    /// Σ multiplicity · c.
    [[nodiscard]] int disc_exponent() const;
    /// e.g. "Q7^3 + (n=2,e=2,c=1)" or "R^3 + C".
    [[nodiscard]] std::string to_string() const;
};

/**
 * All multisets of classes from `table` with total degree 5, deterministic
 * order.  Throws IncompleteTable if the degree-1 field is missing.
 */
std::vector<EtaleQuintic> etale_quintics(const LocalFieldTable& table);

/// The three real algebras R⁵, R³⊕C, R⊕C².
std::vector<EtaleQuintic> real_etale_quintics();

/// ∏ over distinct components of aut^m · m!.
Int algebra_aut_order(const EtaleQuintic& alg);

struct MassTerm {
    std::string algebra;
    Int aut;
    int disc_exponent = 0;
    Rat mass;  ///< 1/(aut·p^c)
};

struct MassReport {
    long p = 0;  ///< 0 for the archimedean place
    std::vector<MassTerm> terms;
    Rat sum;     ///< Σ terms
    Rat total;   ///< prefactor · sum
    Rat closed_form;
    bool match = false;
};

/// The Laurent polynomial 1 + p⁻² − p⁻⁴ − p⁻⁵.
LaurentP beta_closed_form();

/**
 * β_p from a table complete in degrees 1..5 (IncompleteTable otherwise),
 * compared exactly with the closed form.
 */
MassReport beta_p(long p, const LocalFieldTable& table);

/// β_∞ = ½ Σ 1/|Aut| over the real étale quintics = 13/120.
MassReport beta_infinity();

}  // namespace qpl
