/**
 * @file euler_products.cpp
 * @brief Truncated Euler products, tail bounds and the two evaluations of c5.
 */

#include "qpl/constants/euler_products.hpp"

#include "qpl/local/masses.hpp"
#include "qpl/util/errors.hpp"

namespace qpl {

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

Rat euler_tail_bound(const LaurentP& f, long p_max) {
    if (p_max < 2) throw DimensionMismatch("p_max must be >= 2");
    if (f.is_zero() || f.max_exponent() != 0 || f.coeff(0) != 1)
        throw DimensionMismatch("Euler factor must have constant term 1 and no positive powers");
    int m = 0;
    for (const auto& [e, c] : f.terms())
        if (e < 0) m = (m == 0) ? -e : std::min(m, -e);
    if (m == 0) return 0;  // f == 1
    if (m < 2) throw DimensionMismatch("Euler factor tail needs all exponents <= -2");
    Rat a = 0;
    for (const auto& [e, c] : f.terms())
        if (e < 0) a += abs(c) * rpow(Rat(2), e + m);
    if (a * rpow(Rat(p_max + 1), -m) > Rat(1, 2)) throw DimensionMismatch("p_max too small for the tail bound");
    const Rat t = 2 * a * rpow(Rat(p_max), 1 - m) / (m - 1);
    if (t > 1) throw DimensionMismatch("p_max too small for the tail bound");
    return t + t * t;
}

FixedReal euler_partial_product(const LaurentP& f, long p_max, int bits) {
    FixedReal prod = FixedReal::from_int(1, bits);
    for (long p : primes_up_to(p_max)) prod = prod * FixedReal::from_rat(f.eval(Rat(p)), bits);
    return prod;
}

namespace {

/// Enclose x·(1 ± rel) given an enclosure of x.
FixedReal with_relative_tail(const FixedReal& x, const Rat& rel) { return x.widened(abs(x.upper()) * rel); }

}  // namespace

C5Result c5_constant(int precision_bits, long p_max) {
    if (p_max < 100) throw DimensionMismatch("c5_constant needs p_max >= 100");
    const int bits = precision_bits + kGuardBits;
    const LaurentP beta = beta_closed_form();
    C5Result r;
    r.p_max = p_max;
    r.primes = primes_up_to(p_max).size();
    r.partial = FixedReal::from_rat(beta_infinity().total, bits) * euler_partial_product(beta, p_max, bits);
    r.tail_relative = euler_tail_bound(beta, p_max);
    r.report.name = "c5";
    r.report.value = with_relative_tail(r.partial, r.tail_relative);
    r.report.notes = "13/120 * prod_{p<=" + std::to_string(p_max) + "} (1+p^-2-p^-4-p^-5); relative tail <= " +
                     std::to_string(r.tail_relative.get_d());
    return r;
}

LaurentP c5_route_a_factor() { return beta_closed_form() * one_minus_inverse_power(2); }

LaurentP c5_route_b_factor() {
    return beta_closed_form() * one_minus_inverse_power(2) * one_minus_inverse_power(4).pow(2) *
           one_minus_inverse_power(5);
}

C5Routes c5_two_route(int precision_bits, long p_max) {
    const int bits = precision_bits + kGuardBits;
    const FixedReal b_inf = FixedReal::from_rat(beta_infinity().total, bits);
    auto zeta_at = [&](int k) { return zeta(k, precision_bits).value; };

    C5Routes out;
    {
        const LaurentP f = c5_route_a_factor();
        const FixedReal v = b_inf * zeta_at(2) * euler_partial_product(f, p_max, bits);
        const Rat tail = euler_tail_bound(f, p_max);
        out.route_a.name = "c5 route A";
        out.route_a.value = with_relative_tail(v, tail);
        out.route_a.notes = "13/120 zeta(2) prod (1-2p^-4-p^-5+p^-6+p^-7)";
    }
    {
        const LaurentP f = c5_route_b_factor();
        const FixedReal v = b_inf * zeta_at(2) * zeta_at(4).pow(2) * zeta_at(5) * euler_partial_product(f, p_max, bits);
        const Rat tail = euler_tail_bound(f, p_max);
        out.route_b.name = "c5 route B";
        out.route_b.value = with_relative_tail(v, tail);
        out.route_b.notes = "13/120 zeta(2) zeta(4)^2 zeta(5) prod beta_p(1-p^-2)(1-p^-4)^2(1-p^-5)";
    }
    const FixedReal& a = out.route_a.value;
    const FixedReal& b = out.route_b.value;
    out.difference = abs(a.midpoint() - b.midpoint());
    out.combined_error = a.radius() + b.radius();
    out.overlap = out.difference <= out.combined_error;
    return out;
}

}  // namespace qpl
