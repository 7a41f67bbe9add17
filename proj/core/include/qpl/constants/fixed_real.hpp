#pragma once

/**
 * @file fixed_real.hpp
 * @brief Binary fixed-point reals with a certified radius (midpoint–radius balls).
 *
 * A FixedReal with `bits` fractional bits represents every real number in
 * [(mid - rad)·2^-bits, (mid + rad)·2^-bits].  Every operation rounds its
 * midpoint to the grid and widens the radius so that the enclosure stays
 * valid; the caller chooses the working precision (plus guard bits)
 * explicitly, there is no global precision state.
 */

#include "qpl/algebra/numbers.hpp"

#include <string>

namespace qpl {

class FixedReal {
public:
    FixedReal() = default;

    /// Nearest grid point to q, radius half an ulp rounded up to one (zero if exact).
    static FixedReal from_rat(const Rat& q, int bits);
    static FixedReal from_int(const Int& n, int bits);

    [[nodiscard]] int bits() const noexcept { return bits_; }
    [[nodiscard]] const Int& mid_ulps() const noexcept { return mid_; }
    [[nodiscard]] const Int& rad_ulps() const noexcept { return rad_; }

    [[nodiscard]] Rat midpoint() const;
    [[nodiscard]] Rat radius() const;
    [[nodiscard]] Rat lower() const { return midpoint() - radius(); }
    [[nodiscard]] Rat upper() const { return midpoint() + radius(); }
    [[nodiscard]] bool contains(const Rat& q) const;
    /// True iff the enclosure lies strictly on one side of zero.
    [[nodiscard]] bool is_nonzero() const { return abs(mid_) > rad_; }

    [[nodiscard]] double to_double() const { return midpoint().get_d(); }
    /// Upper bound on the radius as a double (rounded away from zero).
    [[nodiscard]] double error_bound() const;
    /// Midpoint in decimal with `digits` digits after the point.
    [[nodiscard]] std::string to_decimal(int digits) const;

    /// Widen the radius by a nonnegative rational (e.g. a truncation bound).
    [[nodiscard]] FixedReal widened(const Rat& extra) const;

    friend FixedReal operator+(const FixedReal& a, const FixedReal& b);
    friend FixedReal operator-(const FixedReal& a, const FixedReal& b);
    friend FixedReal operator*(const FixedReal& a, const FixedReal& b);
    /// Throws DimensionMismatch if b's enclosure contains zero.
    friend FixedReal operator/(const FixedReal& a, const FixedReal& b);

    [[nodiscard]] FixedReal pow(unsigned n) const;

private:
    FixedReal(Int mid, Int rad, int bits) : mid_(std::move(mid)), rad_(std::move(rad)), bits_(bits) {}
    Int mid_ = 0;
    Int rad_ = 0;
    int bits_ = 0;
};

}  // namespace qpl
