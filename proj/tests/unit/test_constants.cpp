/**
 * @file test_constants.cpp
 * @brief Certified zeta values, Euler products, the local-density identity
 *        suite, S5 class data and the W_p series bookkeeping.
 */

#include "doctest.h"

#include "qpl/constants/euler_products.hpp"
#include "qpl/constants/fixed_real.hpp"
#include "qpl/constants/identities.hpp"
#include "qpl/constants/s5_classes.hpp"
#include "qpl/constants/zeta.hpp"
#include "qpl/local/masses.hpp"
#include "qpl/util/errors.hpp"

#include <map>

using namespace qpl;

namespace {

/// Decimal literal as an exact rational.
Rat decimal(const std::string& s) {
    const auto dot = s.find('.');
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    return make_rat(Int(digits), ipow(Int(10), s.size() - dot - 1));
}

const Rat kPi = decimal("3.14159265358979323846264338327950288419716939937510582097494");
const Rat kZeta3 = decimal("1.20205690315959428539973816151144999076498629234049888179227");
const Rat kZeta5 = decimal("1.03692775514336992633136548645703416805708091950191281197419");
const Rat kLiteralError = make_rat(1, ipow(Int(10), 55));

bool encloses(const FixedReal& x, const Rat& q) {
    return abs(x.midpoint() - q) <= x.radius() + kLiteralError;
}

}  // namespace

TEST_CASE("FixedReal enclosures survive arithmetic") {
    const int bits = 40;
    const Rat a(1, 3);
    const Rat b(-7, 11);
    const FixedReal x = FixedReal::from_rat(a, bits);
    const FixedReal y = FixedReal::from_rat(b, bits);
    CHECK(x.contains(a));
    CHECK((x + y).contains(a + b));
    CHECK((x - y).contains(a - b));
    CHECK((x * y).contains(a * b));
    CHECK((x / y).contains(a / b));
    CHECK(x.pow(7).contains(a * a * a * a * a * a * a));
    CHECK(FixedReal::from_int(5, bits).radius() == 0);
    CHECK(FixedReal::from_rat(Rat(3, 4), bits).radius() == 0);
    CHECK(FixedReal::from_rat(Rat(1, 8), 3).to_decimal(4) == "0.1250");
    CHECK(FixedReal::from_rat(Rat(-5, 2), 3).to_decimal(1) == "-2.5");
    CHECK_THROWS_AS(x / FixedReal::from_int(0, bits), DimensionMismatch);
    CHECK_THROWS_AS(x + FixedReal::from_int(1, bits + 1), DimensionMismatch);
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(13) == 0);
}

TEST_CASE("zeta: closed forms, literature values and two-method agreement") {
    const auto z2 = zeta(2, 128);
    const auto z4 = zeta(4, 128);
    CHECK(z2.error_bound() < Rat(1, ipow(Int(10), 20)));
    CHECK(encloses(z2.value, kPi * kPi / 6));
    CHECK(encloses(z4.value, kPi * kPi * kPi * kPi / 90));
    CHECK(encloses(zeta(3, 160).value, kZeta3));
    CHECK(encloses(zeta(5, 160).value, kZeta5));
    CHECK(z2.decimal(20) == "1.64493406684822643647");

    // Direct series with integral tail versus Euler–Maclaurin.
    const auto direct = zeta_direct(3, 100000, 96);
    CHECK(direct.error_bound() < Rat(1, ipow(Int(10), 15)));
    const auto em = zeta(3, 96);
    CHECK(abs(direct.value.midpoint() - em.value.midpoint()) <= direct.error_bound() + em.error_bound());

    // Higher precision stays inside the lower-precision enclosure.
    for (int k = 2; k <= 7; ++k) {
        const auto lo = zeta(k, 48);
        const auto hi = zeta(k, 160);
        CHECK(lo.value.lower() <= hi.value.lower());
        CHECK(hi.value.upper() <= lo.value.upper());
    }
    CHECK_THROWS_AS(zeta(1), DimensionMismatch);
}

TEST_CASE("density constants") {
    CHECK(real_algebra_aut_order(0) == 120);
    CHECK(real_algebra_aut_order(1) == 12);
    CHECK(real_algebra_aut_order(2) == 8);
    const auto c0 = theorem6_constant(0);
    const auto c1 = theorem6_constant(1);
    const auto c2 = theorem6_constant(2);
    for (const auto* c : {&c0, &c1, &c2}) CHECK(c->error_bound() < Rat(1, ipow(Int(10), 12)));
    // Denominators 240 : 24 : 16.
    CHECK(abs(c1.value.midpoint() / c0.value.midpoint() - 10) < Rat(1, ipow(Int(10), 20)));
    CHECK(abs(c2.value.midpoint() / c0.value.midpoint() - 15) < Rat(1, ipow(Int(10), 20)));
    const Rat reference = kPi * kPi / 6 * kPi * kPi / 6 * kZeta3 * kZeta3 * (kPi * kPi * kPi * kPi / 90) *
                          (kPi * kPi * kPi * kPi / 90) * kZeta5 / 240;
    CHECK(encloses(c0.value, reference));
    CHECK_THROWS_AS(theorem6_constant(3), DimensionMismatch);
}

TEST_CASE("Euler tail bound hypotheses") {
    CHECK(primes_up_to(30) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(10000).size() == 1229);
    CHECK_THROWS_AS(euler_tail_bound(LaurentP{{0, 1}, {-1, 1}}, 100), DimensionMismatch);
    CHECK_THROWS_AS(euler_tail_bound(LaurentP{{0, 2}, {-3, 1}}, 100), DimensionMismatch);
    CHECK(euler_tail_bound(LaurentP::constant(1), 100) == 0);
    // The bound really dominates a tail we can compute: ∏_{100 < p <= 20000} β_p.
    const LaurentP beta = beta_closed_form();
    const FixedReal block = euler_partial_product(beta, 20000, 80) / euler_partial_product(beta, 100, 80);
    CHECK(block.upper() - 1 <= euler_tail_bound(beta, 100));
}

TEST_CASE("c5: monotone, Cauchy under its tail bounds") {
    Rat prev_partial = 0;
    for (long pmax : {100L, 200L, 400L, 800L, 1600L}) {
        const auto r = c5_constant(80, pmax);
        CHECK(r.partial.midpoint() > prev_partial);
        prev_partial = r.partial.midpoint();
        const auto doubled = c5_constant(80, 2 * pmax);
        CHECK(doubled.partial.midpoint() - r.partial.midpoint() <= r.partial.upper() * r.tail_relative);
        CHECK(r.report.value.contains(doubled.partial.midpoint()));
    }
    CHECK_THROWS_AS(c5_constant(64, 50), DimensionMismatch);
}

TEST_CASE("c5: two-route agreement at p_max = 10^4") {
    // Route B's local factor is the maximal density with ζ_p(2)ζ_p(3)² restored.
    CHECK(laurent_equal(c5_route_b_factor() * one_minus_inverse_power(2) * one_minus_inverse_power(3).pow(2),
                        maximal_density_numerator().shift(-40)));
    const auto routes = c5_two_route(96, 10000);
    CHECK(routes.overlap);
    CHECK(routes.consistent_within(Rat(1, 100000000)));
    CHECK(routes.combined_error < Rat(1, 100000000));
    const auto direct = c5_constant(96, 10000);
    CHECK(direct.report.value.contains(routes.route_a.value.midpoint()));
}

TEST_CASE("identity suite") {
    const auto checks = euler_factor_identities();
    CHECK(checks.size() == 6);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.verdict);
    }
    CHECK(group_order_formula().eval(Rat(2)) == Rat(Int("201587097600")));
    CHECK((gl_order(4) * sl_order(5)).eval(Rat(2)) == Rat(Int("201587097600")));
    CHECK(gl_order(4).eval(Rat(2)) == 20160);
    CHECK(sl_order(5).eval(Rat(2)) == 9999360);
    CHECK(ramified_proportion(2) == Rat(21, 37));
    for (long p : {2L, 3L, 5L, 7L, 101L}) CHECK(ramified_proportion(p) == ramified_proportion_closed_form(p));
    CHECK(unramified_mass() == 1);

    // A perturbed identity is reported false, not adjusted.
    LaurentP broken = maximal_density_numerator() + LaurentP::monomial(3);
    CHECK_FALSE(laurent_equal(broken, (local_zeta_inverse() * beta_closed_form()).shift(40)));
}

TEST_CASE("s5_class_data from permutation enumeration") {
    const auto classes = s5_class_data();
    REQUIRE(classes.size() == 7);
    std::vector<long> sizes;
    long total = 0;
    for (const auto& c : classes) {
        sizes.push_back(c.size);
        total += c.size;
        CHECK(c.size * c.centralizer_order == 120);
        CHECK(cycle_type(c.representative) == c.cycle_type);
    }
    CHECK(sizes == std::vector<long>{1, 10, 20, 30, 24, 15, 20});
    CHECK(total == 120);
    std::vector<std::string> splits;
    for (const auto& c : classes) splits.push_back(c.splitting_type());
    CHECK(splits == std::vector<std::string>{"(11111)", "(1112)", "(113)", "(14)", "(5)", "(122)", "(23)"});
    CHECK(classes[6].cycle_notation() == "(12)(345)");
    CHECK(classes[0].cycle_notation() == "e");
}

TEST_CASE("wp_series_bound") {
    CHECK(wp_exponent(1) == -2);
    CHECK(wp_exponent(11) == -2);
    CHECK(wp_exponent(12) == -3);
    Rat prev = -1;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L}) {
        const auto w = wp_series_bound(p);
        CHECK(w.crossover == 11);
        CHECK(w.scaled == 11 + Rat(5 * p + 6, p * p - 1));
        // Brute-force partial sums approach the closed form from below.
        Rat partial = 0;
        for (int k = 1; k <= 300; ++k) partial += rpow(Rat(p), wp_exponent(k));
        CHECK(partial < w.series);
        CHECK(w.series - partial < rpow(Rat(p), -50));
        if (prev >= 0) CHECK(w.scaled <= prev);
        prev = w.scaled;
        CHECK(w.bound.value.contains(w.bound.value.midpoint()));
    }
    CHECK_THROWS_AS(wp_series_bound(9), DimensionMismatch);
}
