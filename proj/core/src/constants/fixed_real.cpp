/**
 * @file fixed_real.cpp
 * @brief Midpoint–radius fixed-point arithmetic.
 */

#include "qpl/constants/fixed_real.hpp"

#include "qpl/util/errors.hpp"

#include <cmath>

namespace qpl {

namespace {

/// Round-to-nearest of num/den (den > 0); `exact` reports a zero remainder.
Int round_div(const Int& num, const Int& den, bool* exact = nullptr) {
    Int q;
    Int r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (exact) *exact = (r == 0);
    if (2 * r >= den) q += 1;
    return q;
}

/// ceil(num/den) for den > 0.
Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int scale(int bits) {
    Int s;
    mpz_ui_pow_ui(s.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    return s;
}

void require_same_bits(const FixedReal& a, const FixedReal& b) {
    if (a.bits() != b.bits()) throw DimensionMismatch("FixedReal precision mismatch");
}

}  // namespace

FixedReal FixedReal::from_rat(const Rat& q, int bits) {
    bool exact = false;
    Int mid = round_div(q.get_num() * scale(bits), q.get_den(), &exact);
    return FixedReal(std::move(mid), exact ? Int(0) : Int(1), bits);
}

FixedReal FixedReal::from_int(const Int& n, int bits) { return FixedReal(n * scale(bits), 0, bits); }

Rat FixedReal::midpoint() const { return make_rat(mid_, scale(bits_)); }
Rat FixedReal::radius() const { return make_rat(rad_, scale(bits_)); }

bool FixedReal::contains(const Rat& q) const { return lower() <= q && q <= upper(); }

double FixedReal::error_bound() const {
    const double r = radius().get_d();
    return std::nextafter(r, INFINITY);
}

std::string FixedReal::to_decimal(int digits) const {
    const Rat m = midpoint();
    const Int ten_pow = ipow(Int(10), static_cast<unsigned long>(digits));
    const Int scaled = round_div(m.get_num() * ten_pow, m.get_den());
    Int mag = abs(scaled);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (scaled < 0 ? "-" : "") + s;
}

FixedReal FixedReal::widened(const Rat& extra) const {
    if (extra < 0) throw DimensionMismatch("negative widening");
    return FixedReal(mid_, rad_ + ceil_div(extra.get_num() * scale(bits_), extra.get_den()), bits_);
}

FixedReal operator+(const FixedReal& a, const FixedReal& b) {
    require_same_bits(a, b);
    return FixedReal(a.mid_ + b.mid_, a.rad_ + b.rad_, a.bits_);
}

FixedReal operator-(const FixedReal& a, const FixedReal& b) {
    require_same_bits(a, b);
    return FixedReal(a.mid_ - b.mid_, a.rad_ + b.rad_, a.bits_);
}

FixedReal operator*(const FixedReal& a, const FixedReal& b) {
    require_same_bits(a, b);
    const Int s = scale(a.bits_);
    bool exact = false;
    Int mid = round_div(a.mid_ * b.mid_, s, &exact);
    // |xy - ab| <= |a| rb + |b| ra + ra rb, in ulps^2; plus the rounding.
    const Int spread = abs(a.mid_) * b.rad_ + abs(b.mid_) * a.rad_ + a.rad_ * b.rad_;
    Int rad = ceil_div(spread, s) + (exact ? 0 : 1);
    return FixedReal(std::move(mid), std::move(rad), a.bits_);
}

FixedReal operator/(const FixedReal& a, const FixedReal& b) {
    require_same_bits(a, b);
    if (!b.is_nonzero()) throw DimensionMismatch("FixedReal division by an enclosure of zero");
    const Int s = scale(a.bits_);
    Int den = b.mid_;
    Int num = a.mid_ * s;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    bool exact = false;
    Int mid = round_div(num, den, &exact);
    // |x/y - a/b| <= (ra|b| + |a|rb) / (|b|(|b| - rb)), scaled to ulps.
    const Int spread = (a.rad_ * den + abs(a.mid_) * b.rad_) * s;
    Int rad = ceil_div(spread, den * (den - b.rad_)) + (exact ? 0 : 1);
    return FixedReal(std::move(mid), std::move(rad), a.bits_);
}

FixedReal FixedReal::pow(unsigned n) const {
    FixedReal result = from_int(1, bits_);
    FixedReal base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

}  // namespace qpl
