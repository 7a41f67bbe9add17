/**
 * @file identities.cpp
 * @brief Exact local-density identities and the W_p series bookkeeping.
 */

#include "qpl/constants/identities.hpp"

#include "qpl/constants/s5_classes.hpp"
#include "qpl/local/masses.hpp"
#include "qpl/util/errors.hpp"

namespace qpl {

namespace {

const LaurentP kOne = LaurentP::constant(1);

/// Σ c_i p^i from coefficients listed constant term first.
LaurentP poly(std::initializer_list<long> coeffs) {
    LaurentP out;
    int e = 0;
    for (long c : coeffs) out += LaurentP::monomial(e++, Rat(c));
    return out;
}

LaurentP p_power_minus_one(int i) { return LaurentP::monomial(i) - kOne; }

IdentityCheck make_check(std::string name, std::string statement, LaurentP left, LaurentP right) {
    IdentityCheck c{std::move(name), std::move(statement), std::move(left), std::move(right), false};
    c.verdict = laurent_equal(c.left, c.right);
    return c;
}

}  // namespace

LaurentP cyclotomic_block(int from, int to) {
    LaurentP out = kOne;
    for (int i = from; i <= to; ++i) out = out * p_power_minus_one(i);
    return out;
}

LaurentP gl_order(int n) { return LaurentP::monomial(n * (n - 1) / 2) * cyclotomic_block(1, n); }
LaurentP sl_order(int n) { return LaurentP::monomial(n * (n - 1) / 2) * cyclotomic_block(2, n); }

LaurentP maximal_density_numerator() {
    return poly({-1, 1}).pow(8) * LaurentP::monomial(12) * poly({1, 1}).pow(4) * poly({1, 0, 1}).pow(2) *
           poly({1, 1, 1}).pow(2) * poly({1, 1, 1, 1, 1}) * poly({1, 2, 2, 1, 1});
}

LaurentP group_order_formula() {
    return poly({-1, 1}).pow(8) * LaurentP::monomial(16) * poly({1, 1}).pow(4) * poly({1, 0, 1}).pow(2) *
           poly({1, 1, 1}).pow(2) * poly({1, 1, 1, 1, 1});
}

LaurentP local_zeta_inverse() {
    return one_minus_inverse_power(2).pow(2) * one_minus_inverse_power(3).pow(2) *
           one_minus_inverse_power(4).pow(2) * one_minus_inverse_power(5);
}

Rat unramified_mass() {
    Rat m = 0;
    for (const auto& c : s5_class_data()) m += Rat(1, c.centralizer_order);
    return m;
}

Rat ramified_proportion(long p) {
    const Rat pp(p);
    return 1 - group_order_formula().eval(pp) * unramified_mass() / maximal_density_numerator().eval(pp);
}

Rat ramified_proportion_closed_form(long p) {
    const Rat pp(p);
    return poly({1, 1}).eval(pp) * poly({1, 1, 1}).eval(pp) / poly({1, 2, 2, 1, 1}).eval(pp);
}

std::vector<IdentityCheck> euler_factor_identities() {
    const LaurentP beta = beta_closed_form();
    const LaurentP numerator = maximal_density_numerator();
    const LaurentP group = group_order_formula();
    const LaurentP unram = unramified_mass() * kOne;
    std::vector<IdentityCheck> out;

    out.push_back(make_check("a.zeta_form",
                             "p^40 mu(U_p) = p^28 (1-p^-2)^2(1-p^-3)^2(1-p^-4)^2(1-p^-5)(1+p^-2-p^-4-p^-5) p^12",
                             numerator, (local_zeta_inverse() * beta).shift(40)));
    out.push_back(make_check("a.product_form",
                             "p^40 mu(U_p) = p^12 (p^2-1)^2(p^3-1)^2(p^4-1)^2(p^5-1)(p^5+p^3-p-1)",
                             numerator,
                             LaurentP::monomial(12) * p_power_minus_one(2).pow(2) * p_power_minus_one(3).pow(2) *
                                 p_power_minus_one(4).pow(2) * p_power_minus_one(5) * poly({-1, -1, 0, 1, 0, 1})));
    out.push_back(make_check("b.beta_polynomial", "p^5 (1+p^-2-p^-4-p^-5) = p^5+p^3-p-1", beta.shift(5),
                             poly({-1, -1, 0, 1, 0, 1})));
    out.push_back(make_check("c.group_order", "(p-1)^8 p^16 (p+1)^4 (p^2+1)^2 (p^2+p+1)^2 (p^4+p^3+p^2+p+1) = |GL4(F_p)| |SL5(F_p)|",
                             group, gl_order(4) * sl_order(5)));
    out.push_back(make_check("d.ramified_proportion",
                             "1 - |G(F_p)| p^-40 sum(1/Aut) / mu(U_p) = (p+1)(p^2+p+1)/(p^4+p^3+2p^2+2p+1)",
                             (numerator - group * unram) * poly({1, 2, 2, 1, 1}),
                             poly({1, 1}) * poly({1, 1, 1}) * numerator));
    out.push_back(make_check("e.unramified_factor",
                             "|G(F_p)| p^-40 sum(1/Aut) = (1-p^-1)(1-p^-2)^2(1-p^-3)^2(1-p^-4)^2(1-p^-5)",
                             (group * unram).shift(-40), one_minus_inverse_power(1) * local_zeta_inverse()));
    return out;
}

int wp_exponent(int k) {
    const int floor_term = (20 * k) / 11;
    return std::min(2 * k - 2, floor_term) - 2 * k;
}

WpBound wp_series_bound(long p, int precision_bits) {
    if (p < 2 || !is_probable_prime(Int(p))) throw DimensionMismatch("wp_series_bound needs a prime, got " + std::to_string(p));
    WpBound w;
    w.p = p;
    for (int k = 1; k <= 200; ++k)
        if (2 * k - 2 <= (20 * k) / 11) w.crossover = k;
    const Rat pp(p);
    for (int k = 1; k <= w.crossover; ++k) w.head += rpow(pp, wp_exponent(k));
    // Beyond the crossover the exponent is ⌊20k/11⌋ - 2k, which drops by exactly
    // 2 every 11 steps: the tail is one block divided by (1 - p^-2).
    Rat block = 0;
    for (int k = w.crossover + 1; k <= w.crossover + 11; ++k) {
        if (wp_exponent(k + 11) != wp_exponent(k) - 2) throw DimensionMismatch("unexpected exponent period");
        block += rpow(pp, wp_exponent(k));
    }
    w.tail = block / (1 - rpow(pp, -2));
    w.series = w.head + w.tail;
    w.scaled = pp * pp * w.series;
    const FixedReal z2 = zeta(2, precision_bits).value;
    w.bound.name = "wp_series_bound(" + std::to_string(p) + ")";
    w.bound.value = z2 * FixedReal::from_rat(w.series, z2.bits());
    w.bound.notes = "zeta(2) * sum_k p^(min(2k-2, floor(20k/11)) - 2k)";
    return w;
}

}  // namespace qpl
