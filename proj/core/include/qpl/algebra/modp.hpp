#pragma once

/**
 * @file modp.hpp
 * @brief Univariate polynomials over a prime field F_p and their factorization.
 *
 * The prime may be arbitrarily large (it is an Int), which lets the same code
 * serve small-prime factor-pattern scans and the large-prime modular step of
 * integer factorization.
 */

#include "qpl/algebra/int_poly.hpp"
#include "qpl/algebra/numbers.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qpl {

/// Polynomial over F_p; coefficients in [0, p), constant term first.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(Int p, std::vector<Int> coeffs);
    ModPoly(const IntPoly& f, const Int& p);

    [[nodiscard]] const Int& modulus() const noexcept { return p_; }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] const std::vector<Int>& coeffs() const noexcept { return c_; }
    [[nodiscard]] const Int& lc() const { return c_.back(); }

    [[nodiscard]] ModPoly monic() const;
    [[nodiscard]] ModPoly derivative() const;
    [[nodiscard]] Int eval(const Int& x) const;
    /// Lift with coefficients in the symmetric range (-p/2, p/2].
    [[nodiscard]] IntPoly symmetric_lift() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

    static ModPoly constant(const Int& p, const Int& c);
    static ModPoly x(const Int& p);

private:
    void normalize();
    Int p_;
    std::vector<Int> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both inputs are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

/// One block of the distinct-degree factorization: product of all monic
/// irreducible factors of the given degree.
struct DegreeBlock {
    int degree;
    ModPoly product;
};

/// Distinct-degree factorization of a squarefree polynomial.
std::vector<DegreeBlock> distinct_degree_factorization(const ModPoly& f);

/// Sorted degrees of the irreducible factors of a squarefree polynomial.
std::vector<int> factor_degree_pattern(const ModPoly& f);

/// Complete factorization of a squarefree polynomial into monic irreducibles
/// (Cantor–Zassenhaus; p must be odd).
std::vector<ModPoly> factor_squarefree(const ModPoly& f, std::mt19937_64& rng);

/// True iff f mod p has no repeated factor and p does not divide lc(f).
bool is_good_prime(const IntPoly& f, const Int& p);

}  // namespace qpl
