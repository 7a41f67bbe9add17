#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials in a formal variable p with rational coefficients.
 *
 * Density formulas are stated as rational functions of a prime p; after
 * clearing denominators they become Laurent polynomials, and identities
 * between them can be checked structurally.  Zero coefficients are never
 * stored, so equality is plain map equality.
 */

#include "qpl/algebra/numbers.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace qpl {

class LaurentP {
public:
    LaurentP() = default;
    /// From (exponent, coefficient) pairs; repeated exponents are summed.
    LaurentP(std::initializer_list<std::pair<int, Rat>> terms);

    /// The monomial c·p^e.
    static LaurentP monomial(int e, const Rat& c = 1);
    static LaurentP constant(const Rat& c) { return monomial(0, c); }
    /// The variable p itself.
    static LaurentP p() { return monomial(1); }

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::map<int, Rat>& terms() const noexcept { return terms_; }
    [[nodiscard]] Rat coeff(int e) const;
    /// Largest and smallest exponent (requires nonzero).
    [[nodiscard]] int max_exponent() const { return terms_.rbegin()->first; }
    [[nodiscard]] int min_exponent() const { return terms_.begin()->first; }

    /// Exact value at a nonzero rational p.
    [[nodiscard]] Rat eval(const Rat& p) const;
    /// Floating value at p (for numeric Euler products).
    [[nodiscard]] double eval(double p) const;

    /// Multiply by p^k.
    [[nodiscard]] LaurentP shift(int k) const;
    /// Integer power (non-negative exponent).
    [[nodiscard]] LaurentP pow(unsigned n) const;

    LaurentP& operator+=(const LaurentP& o);
    LaurentP& operator-=(const LaurentP& o);
    friend LaurentP operator+(LaurentP a, const LaurentP& b) { return a += b; }
    friend LaurentP operator-(LaurentP a, const LaurentP& b) { return a -= b; }
    friend LaurentP operator-(const LaurentP& a);
    friend LaurentP operator*(const LaurentP& a, const LaurentP& b);
    friend LaurentP operator*(const Rat& k, const LaurentP& a);
    friend bool operator==(const LaurentP& a, const LaurentP& b) = default;

    [[nodiscard]] std::string to_string(const std::string& var = "p") const;

private:
    void add_term(int e, const Rat& c);
    std::map<int, Rat> terms_;
};

/// Coefficient-wise equality.
inline bool laurent_equal(const LaurentP& f, const LaurentP& g) { return f == g; }

/// The binomial 1 - p^(-k), which appears in every zeta Euler factor.
inline LaurentP one_minus_inverse_power(int k) { return LaurentP{{0, 1}, {-k, -1}}; }

}  // namespace qpl
