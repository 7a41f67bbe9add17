#pragma once

/**
 * @file weights.hpp
 * @brief Torus weights of the forty coordinates and the Haar exponents.
 *
 * The torus a(s) = (a4(s1..s3), a5(s4..s7)) ⊂ SL4 × SL5 together with the
 * scaling λ acts on each coordinate t by a monomial w(t) in (λ, s1, ..., s7).
 * Monomials are exponent vectors in Z⁸; products are sums of vectors and the
 * order used for "minimal weight" is the componentwise partial order.
 */

#include "qpl/pencil/coords.hpp"

#include <array>
#include <string>

namespace qpl {

class WeightMonomial {
public:
    static constexpr std::size_t kSize = 8;  ///< λ, s1, ..., s7

    constexpr WeightMonomial() = default;
    constexpr explicit WeightMonomial(std::array<int, kSize> e) : e_(e) {}

    [[nodiscard]] constexpr const std::array<int, kSize>& exponents() const noexcept { return e_; }
    [[nodiscard]] constexpr int lambda() const noexcept { return e_[0]; }
    /// Exponent of s_k, k = 1..7.
    [[nodiscard]] constexpr int s(int k) const noexcept { return e_[static_cast<std::size_t>(k)]; }

    /// Componentwise ≤ (the partial order on weights).
    [[nodiscard]] constexpr bool leq(const WeightMonomial& o) const noexcept {
        for (std::size_t k = 0; k < kSize; ++k)
            if (e_[k] > o.e_[k]) return false;
        return true;
    }

    constexpr WeightMonomial& operator+=(const WeightMonomial& o) noexcept {
        for (std::size_t k = 0; k < kSize; ++k) e_[k] += o.e_[k];
        return *this;
    }
    friend constexpr WeightMonomial operator+(WeightMonomial a, const WeightMonomial& b) noexcept { return a += b; }
    friend constexpr WeightMonomial operator*(int m, WeightMonomial a) noexcept {
        for (auto& x : a.e_) x *= m;
        return a;
    }
    friend constexpr bool operator==(const WeightMonomial&, const WeightMonomial&) = default;

    /// e.g. "λ·s1^-3·s2^-1·...".
    [[nodiscard]] std::string to_string() const;

private:
    std::array<int, kSize> e_{};
};

/// Exponents of (s1, s2, s3) in the diagonal entries of the GL4 torus a4(s).
const std::array<std::array<int, 3>, 4>& gl4_torus_diagonal();
/// Exponents of (s4, ..., s7) in the diagonal entries of the SL5 torus a5(s).
const std::array<std::array<int, 4>, 5>& sl5_torus_diagonal();

/// w(t): λ times the GL4 entry for the letter times the two SL5 entries i, j.
WeightMonomial coordinate_weight(CoordId c);

/**
 * Exponents of s1..s7 in the Haar-measure factor: the negated sum, over the
 * 16 lower-triangular unipotent coordinates, of the characters by which
 * conjugation by a(s) scales them.
 */
std::array<int, 7> haar_exponents();

}  // namespace qpl
