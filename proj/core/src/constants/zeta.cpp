/**
 * @file zeta.cpp
 * @brief Euler–Maclaurin evaluation of ζ(k) and the archimedean volume constants.
 */

#include "qpl/constants/zeta.hpp"

#include "qpl/local/masses.hpp"
#include "qpl/util/errors.hpp"

#include <mutex>
#include <vector>

namespace qpl {

Rat bernoulli(int n) {
    if (n < 0) throw DimensionMismatch("negative Bernoulli index");
    static std::mutex guard;
    static std::vector<Rat> cache{Rat(1)};
    std::lock_guard lock(guard);
    while (static_cast<int>(cache.size()) <= n) {
        // B_m = -1/(m+1) Σ_{j<m} C(m+1, j) B_j
        const int m = static_cast<int>(cache.size());
        Rat s = 0;
        Int binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += Rat(binom) * cache[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(make_rat(-1, m + 1) * s);
    }
    return cache[static_cast<std::size_t>(n)];
}

namespace {

/// j-th Euler–Maclaurin correction B_{2j}/(2j)! · k(k+1)…(k+2j-2) · N^{-k-2j+1}.
Rat em_term(int k, long n_cut, int j) {
    Int rising = 1;
    for (int r = 0; r <= 2 * j - 2; ++r) rising *= k + r;
    Int fact = 1;
    for (int r = 2; r <= 2 * j; ++r) fact *= r;
    const Int npow = ipow(Int(n_cut), static_cast<unsigned long>(k + 2 * j - 1));
    return bernoulli(2 * j) * make_rat(rising, fact * npow);
}

}  // namespace

ConstantReport zeta(int k, int precision_bits) {
    if (k < 2) throw DimensionMismatch("zeta(k) needs k >= 2");
    if (precision_bits < 8) throw DimensionMismatch("precision too small");
    const int bits = precision_bits + kGuardBits;
    const Rat target = make_rat(1, ipow(Int(2), static_cast<unsigned long>(precision_bits + 2)));

    long n_cut = 10 + precision_bits / 8;
    while (true) {
        Rat sum = 0;
        for (long n = 1; n < n_cut; ++n) sum += make_rat(1, ipow(Int(n), static_cast<unsigned long>(k)));
        sum += make_rat(1, Int(k - 1) * ipow(Int(n_cut), static_cast<unsigned long>(k - 1)));
        sum += make_rat(1, 2 * ipow(Int(n_cut), static_cast<unsigned long>(k)));
        Rat prev_mag = -1;
        for (int j = 1; j < 400; ++j) {
            const Rat next = em_term(k, n_cut, j + 1);
            const Rat mag = abs(next);
            if (prev_mag >= 0 && mag > prev_mag) break;  // asymptotic series turning; widen N
            sum += em_term(k, n_cut, j);
            prev_mag = mag;
            if (mag < target) {
                // For real k the remainder is bounded by the first omitted term.
                ConstantReport r;
                r.name = "zeta(" + std::to_string(k) + ")";
                r.value = FixedReal::from_rat(sum, bits).widened(mag);
                r.notes = "Euler-Maclaurin, N=" + std::to_string(n_cut) + ", " + std::to_string(j) +
                          " Bernoulli terms, remainder <= first omitted term";
                return r;
            }
        }
        n_cut *= 2;
    }
}

ConstantReport zeta_direct(int k, long terms, int precision_bits) {
    if (k < 2 || terms < 1) throw DimensionMismatch("zeta_direct needs k >= 2 and terms >= 1");
    const int bits = precision_bits + kGuardBits;
    FixedReal sum = FixedReal::from_int(0, bits);
    for (long n = 1; n <= terms; ++n)
        sum = sum + FixedReal::from_rat(make_rat(1, ipow(Int(n), static_cast<unsigned long>(k))), bits);
    // ∫_{N+1}^∞ x^-k dx < Σ_{n>N} n^-k < ∫_N^∞ x^-k dx
    const Rat lo = make_rat(1, Int(k - 1) * ipow(Int(terms + 1), static_cast<unsigned long>(k - 1)));
    const Rat hi = make_rat(1, Int(k - 1) * ipow(Int(terms), static_cast<unsigned long>(k - 1)));
    ConstantReport r;
    r.name = "zeta(" + std::to_string(k) + ") direct";
    r.value = (sum + FixedReal::from_rat((lo + hi) / 2, bits)).widened((hi - lo) / 2);
    r.notes = "direct sum to " + std::to_string(terms) + " plus integral tail enclosure";
    return r;
}

long real_algebra_aut_order(int i) {
    if (i < 0 || i > 2) throw DimensionMismatch("real signature index must be 0, 1 or 2");
    for (const auto& alg : real_etale_quintics()) {
        int complex_places = 0;
        for (const auto& c : alg.components)
            if (c.field.n == 2) complex_places += c.multiplicity;
        if (complex_places == i) return algebra_aut_order(alg).get_si();
    }
    throw DimensionMismatch("no real algebra with the requested signature");
}

ConstantReport theorem6_constant(int i, int precision_bits) {
    const long n_i = real_algebra_aut_order(i);
    const FixedReal z2 = zeta(2, precision_bits + 8).value;
    const FixedReal z3 = zeta(3, precision_bits + 8).value;
    const FixedReal z4 = zeta(4, precision_bits + 8).value;
    const FixedReal z5 = zeta(5, precision_bits + 8).value;
    const FixedReal prod = z2.pow(2) * z3.pow(2) * z4.pow(2) * z5;
    ConstantReport r;
    r.name = "theorem6_constant(" + std::to_string(i) + ")";
    r.value = prod / FixedReal::from_int(2 * n_i, prod.bits());
    r.notes = "zeta(2)^2 zeta(3)^2 zeta(4)^2 zeta(5) / (2*" + std::to_string(n_i) + ")";
    return r;
}

}  // namespace qpl
