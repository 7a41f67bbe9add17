#pragma once

/**
 * @file quadruple.hpp
 * @brief Quadruples (A, B, C, D) of 5×5 skew-symmetric integer matrices and
 *        the action of GL_4(Z) × SL_5(Z) on them.
 */

#include "qpl/algebra/matrix.hpp"
#include "qpl/pencil/coords.hpp"

#include <array>
#include <random>
#include <string>

namespace qpl {

/// A point of V_Z: four skew matrices, stored as their 40 upper entries.
class Quadruple {
public:
    Quadruple() = default;
    /// Coordinates in the documented order a12..a45, b12..b45, c.., d...
    explicit Quadruple(std::array<Int, 40> coords) : x_(std::move(coords)) {}
    /// From four 5×5 matrices; throws NotSkew unless each is skew-symmetric.
    static Quadruple from_matrices(const std::array<IntMatrix, 4>& m);

    [[nodiscard]] const Int& operator[](CoordId c) const { return x_[static_cast<std::size_t>(c.index())]; }
    Int& operator[](CoordId c) { return x_[static_cast<std::size_t>(c.index())]; }
    [[nodiscard]] const std::array<Int, 40>& coords() const noexcept { return x_; }

    /// Entry (r, c) of matrix `letter`, 0-based indices, skew-symmetry built in.
    [[nodiscard]] Int entry(int letter, int r, int c) const;
    /// The 5×5 skew matrix for letter 0..3 (A, B, C, D).
    [[nodiscard]] IntMatrix matrix(int letter) const;

    [[nodiscard]] bool is_zero() const;
    /// The 40 coordinates, space separated, in file order.
    [[nodiscard]] std::string to_line() const;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;

private:
    std::array<Int, 40> x_{};
};

/// Uniform coordinates in [-radius, radius].
Quadruple random_quadruple(std::mt19937_64& rng, long radius);

/// An element (g4, g5) of GL_4(Z) × SL_5(Z).
class GroupElementZ {
public:
    /// Identity element.
    GroupElementZ();
    /// Throws BadDeterminant unless det g4 = ±1 and det g5 = 1.
    GroupElementZ(IntMatrix g4, IntMatrix g5);

    [[nodiscard]] const IntMatrix& g4() const noexcept { return g4_; }
    [[nodiscard]] const IntMatrix& g5() const noexcept { return g5_; }

    friend GroupElementZ operator*(const GroupElementZ& x, const GroupElementZ& y);

    /// A random element built from `steps` elementary moves per factor.
    static GroupElementZ random(std::mt19937_64& rng, int steps = 6);

private:
    IntMatrix g4_;
    IntMatrix g5_;
};

/**
 * g·(A,B,C,D): each matrix is conjugated M ↦ g5 M g5ᵀ and the column vector
 * (A B C D)ᵀ is multiplied by g4.  The two actions commute.
 */
Quadruple act(const GroupElementZ& g, const Quadruple& q);

}  // namespace qpl
