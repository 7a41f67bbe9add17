#pragma once

/**
 * @file int_poly.hpp
 * @brief Dense univariate polynomials with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored from the constant term upwards and trailing zeros
 * are always stripped, so the zero polynomial is the empty vector and the
 * leading coefficient of a nonzero polynomial is nonzero.
 */

#include "qpl/algebra/numbers.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qpl {

class IntPoly {
public:
    IntPoly() = default;
    /// Coefficients from the constant term upwards.
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
    static IntPoly x() { return IntPoly({0, 1}); }

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const Int& lc() const { return c_.back(); }
    [[nodiscard]] const std::vector<Int>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^i (zero beyond the degree).
    [[nodiscard]] Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    [[nodiscard]] Int content() const;
    /// Primitive part with positive leading coefficient.
    [[nodiscard]] IntPoly primitive() const;
    [[nodiscard]] IntPoly derivative() const;

    [[nodiscard]] Int eval(const Int& x) const;
    [[nodiscard]] Rat eval(const Rat& x) const;
    [[nodiscard]] double eval(double x) const;
    /// Sign of the value at a rational point, computed exactly.
    [[nodiscard]] int sign_at(const Rat& x) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& k, const IntPoly& a);
    friend IntPoly operator-(const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Int> c_;
};

/**
 * Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
 * Requires b nonzero.
 */
std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& a, const IntPoly& b);

/// Exact division over Z; returns false if b does not divide a in Z[x].
bool divides_exactly(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

/// Greatest common divisor in Z[x] (primitive, positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// True iff gcd(f, f') is constant.
bool is_squarefree(const IntPoly& f);

/// Resultant via the Sylvester determinant (fraction-free elimination).
Int resultant(const IntPoly& f, const IntPoly& g);

/**
 * Discriminant surrogate (-1)^(d(d-1)/2) Res(f, f') / lc(f).
 * Zero iff f has a repeated root; requires deg f >= 1.
 */
Rat poly_discriminant(const IntPoly& f);

/// Number of distinct real roots by a Sturm chain; throws NotSquarefree.
int real_root_count(const IntPoly& f);

/// Signed Sturm chain f, f', -prem(...), each entry made primitive.
std::vector<IntPoly> sturm_chain(const IntPoly& f);

/// Number of sign changes of the chain at a rational point.
int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& x);

/// Cauchy bound: every real root lies in (-B, B).
Int root_bound(const IntPoly& f);

}  // namespace qpl
