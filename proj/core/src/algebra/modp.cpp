/**
 * @file modp.cpp
 * @brief Arithmetic and factorization of polynomials over F_p.
 */

#include "qpl/algebra/modp.hpp"

#include "qpl/util/errors.hpp"

#include <algorithm>

namespace qpl {

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& a : c_) a = mod(a, p_);
    normalize();
}

ModPoly::ModPoly(const IntPoly& f, const Int& p) : ModPoly(p, f.coeffs()) {}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly ModPoly::constant(const Int& p, const Int& c) { return ModPoly(p, {c}); }
ModPoly ModPoly::x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    const Int inv = inverse_mod(lc(), p_);
    std::vector<Int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * inv;
    return ModPoly(p_, std::move(out));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<Int> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ModPoly(p_, std::move(out));
}

Int ModPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod(acc * x + *it, p_);
    return acc;
}

IntPoly ModPoly::symmetric_lift() const {
    std::vector<Int> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = symmetric_mod(c_[i], p_);
    return IntPoly(std::move(out));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return ModPoly(a.p_ != 0 ? a.p_ : b.p_, std::move(out));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return ModPoly(a.p_ != 0 ? a.p_ : b.p_, std::move(out));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    const Int& p = a.p_ != 0 ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero()) return ModPoly(p, {});
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return ModPoly(p, std::move(out));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero()) throw DimensionMismatch("division by zero polynomial mod p");
    const Int& p = b.modulus();
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    std::vector<Int> r = a.coeffs();
    const int db = b.degree();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Int inv = inverse_mod(b.lc(), p);
    for (int k = a.degree(); k >= db; --k) {
        const Int t = mod(r[static_cast<std::size_t>(k)] * inv, p);
        q[static_cast<std::size_t>(k - db)] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) {
            Int& x = r[static_cast<std::size_t>(k - db + j)];
            x = mod(x - t * b.coeffs()[static_cast<std::size_t>(j)], p);
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a;
    ModPoly y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
    ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
    ModPoly b = base % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

std::vector<DegreeBlock> distinct_degree_factorization(const ModPoly& f) {
    std::vector<DegreeBlock> out;
    const Int& p = f.modulus();
    ModPoly rest = f.monic();
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % rest;  // x^(p^d) mod rest
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = powmod(h, p, rest);
        ModPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.push_back({d, g});
            rest = divmod(rest, g).first;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.push_back({rest.degree(), rest});
    return out;
}

std::vector<int> factor_degree_pattern(const ModPoly& f) {
    std::vector<int> pattern;
    for (const auto& block : distinct_degree_factorization(f))
        for (int k = 0; k < block.product.degree() / block.degree; ++k) pattern.push_back(block.degree);
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

namespace {

Int random_below(const Int& n, std::mt19937_64& rng) {
    // Uniform enough for splitting: draw 64 extra bits beyond n's size.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
    Int r = 0;
    for (std::size_t done = 0; done < bits; done += 64) {
        mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
        mpz_add_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(rng()));
    }
    return mod(r, n);
}

void equal_degree_split(const ModPoly& f, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Int& p = f.modulus();
    // (p^d - 1)/2 exponent for odd p.
    const Int e = (ipow(p, static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        std::vector<Int> coeffs(static_cast<std::size_t>(f.degree()));
        for (auto& c : coeffs) c = random_below(p, rng);
        ModPoly a(p, std::move(coeffs));
        if (a.degree() <= 0) continue;
        ModPoly g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).first, d, rng, out);
            return;
        }
        ModPoly b = powmod(a, e, f) - ModPoly::constant(p, 1);
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModPoly> factor_squarefree(const ModPoly& f, std::mt19937_64& rng) {
    if (f.modulus() == 2) throw DimensionMismatch("Cantor-Zassenhaus needs an odd prime");
    std::vector<ModPoly> out;
    for (const auto& block : distinct_degree_factorization(f)) equal_degree_split(block.product, block.degree, rng, out);
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
    });
    return out;
}

bool is_good_prime(const IntPoly& f, const Int& p) {
    if (f.degree() < 1 || mod(f.lc(), p) == 0) return false;
    const ModPoly fm(f, p);
    return gcd(fm, fm.derivative()).degree() == 0;
}

}  // namespace qpl
