/**
 * @file factor.cpp
 * @brief Zassenhaus-style factor search for polynomials of degree <= 5.
 */

#include "qpl/algebra/factor.hpp"

#include "qpl/algebra/modp.hpp"
#include "qpl/util/errors.hpp"

#include <algorithm>
#include <random>

namespace qpl {

namespace {

/// ceil(sqrt(sum a_i^2)), an upper bound for the 2-norm.
Int norm2_ceil(const IntPoly& f) {
    Int s = 0;
    for (const auto& a : f.coeffs()) s += a * a;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

/// Degree-0 screen: a few small primes whose factor patterns leave no room for
/// a factor of degree 1 or 2 prove irreducibility cheaply.
bool small_prime_irreducibility_witness(const IntPoly& f) {
    static constexpr unsigned long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    bool may_have_linear = true;
    bool may_have_quadratic = true;
    for (unsigned long p : kPrimes) {
        if (!is_good_prime(f, Int(p))) continue;
        const auto pattern = factor_degree_pattern(ModPoly(f, Int(p)));
        const bool has1 = std::count(pattern.begin(), pattern.end(), 1) >= 1;
        const bool has2 = std::count(pattern.begin(), pattern.end(), 2) >= 1 ||
                          std::count(pattern.begin(), pattern.end(), 1) >= 2;
        may_have_linear = may_have_linear && has1;
        may_have_quadratic = may_have_quadratic && has2;
        if (!may_have_linear && !may_have_quadratic) return true;
    }
    return false;
}

}  // namespace

Int factoring_prime(const IntPoly& f) {
    // Any factor g of f with deg g <= 5 satisfies |g_i| <= 2^5 ||f||_2 and the
    // rescaled factor lc(f)/lc(g)·g has coefficients bounded by |lc f| times that.
    const Int bound = abs(f.lc()) * 32 * norm2_ceil(f);
    Int p = next_prime(2 * bound + 1);
    while (!is_good_prime(f, p)) p = next_prime(p);
    return p;
}

std::vector<IntPoly> factor_small_degree(const IntPoly& input) {
    if (input.degree() < 1 || input.degree() > 5) throw NotQuintic("degree must be in 1..5, got " + std::to_string(input.degree()));
    std::vector<IntPoly> out;
    const Int content = input.content();
    if (content != 1) out.push_back(IntPoly::constant(content));
    IntPoly f = input.primitive();
    if (!is_squarefree(f)) throw NotSquarefree(f.to_string());

    if (f.degree() <= 1 || small_prime_irreducibility_witness(f)) {
        out.push_back(f);
        return out;
    }

    const Int p = factoring_prime(f);
    std::mt19937_64 rng(0x5eed);
    std::vector<ModPoly> modular = factor_squarefree(ModPoly(f, p), rng);

    std::vector<IntPoly> found;
    // Try the modular factors indexed by `subset`; on success divide f by the
    // recovered integer factor and retire those modular factors.
    auto try_subset = [&](std::vector<std::size_t> subset) {
        ModPoly prod = ModPoly::constant(p, f.lc());
        int deg = 0;
        for (auto k : subset) {
            prod = prod * modular[k];
            deg += modular[k].degree();
        }
        IntPoly g = prod.symmetric_lift().primitive();
        IntPoly q;
        if (g.degree() != deg || !divides_exactly(g, f, &q)) return false;
        found.push_back(g);
        f = q.primitive();
        std::sort(subset.rbegin(), subset.rend());
        for (auto k : subset) modular.erase(modular.begin() + static_cast<long>(k));
        return true;
    };
    bool progress = true;
    while (progress && f.degree() >= 2) {
        progress = false;
        for (int target = 1; target <= 2 && 2 * target <= f.degree() && !progress; ++target) {
            const std::size_t r = modular.size();
            for (std::size_t i = 0; i < r && !progress; ++i)
                if (modular[i].degree() == target) progress = try_subset({i});
            for (std::size_t i = 0; i < r && !progress; ++i)
                for (std::size_t j = i + 1; j < r && !progress; ++j)
                    if (modular[i].degree() + modular[j].degree() == target) progress = try_subset({i, j});
        }
    }
    found.push_back(f);
    std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
    });
    out.insert(out.end(), found.begin(), found.end());
    return out;
}

std::vector<IntPoly> factor_quintic(const IntPoly& f) {
    if (f.degree() != 5) throw NotQuintic("degree " + std::to_string(f.degree()));
    return factor_small_degree(f);
}

bool is_irreducible(const IntPoly& f) {
    const auto factors = factor_small_degree(f);
    return std::count_if(factors.begin(), factors.end(), [](const IntPoly& g) { return g.degree() > 0; }) == 1;
}

}  // namespace qpl
