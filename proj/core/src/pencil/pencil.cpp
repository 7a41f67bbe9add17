/**
 * @file pencil.cpp
 * @brief Sub-Pfaffians, quotient algebra, characteristic quintic, classification.
 */

#include "qpl/pencil/pencil.hpp"

#include "qpl/algebra/factor.hpp"
#include "qpl/algebra/modp.hpp"
#include "qpl/algebra/pfaffian.hpp"
#include "qpl/util/errors.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace qpl {

namespace {

/// M(t) as a 5×5 array of linear forms.
std::array<std::array<Form, 5>, 5> pencil_matrix(const Quadruple& q) {
    std::array<std::array<Form, 5>, 5> m;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                Form::linear({q.entry(0, r, c), q.entry(1, r, c), q.entry(2, r, c), q.entry(3, r, c)});
    return m;
}

/// The ideal's degree-d piece as an integer matrix: rows are m·Q_i for every
/// monomial m of degree d − 2, columns are the degree-d monomials.
IntMatrix ideal_piece(const std::array<Form, 5>& qs, int degree) {
    const auto& mult = Form::monomials(degree - 2);
    IntMatrix rows(mult.size() * 5, Form::monomial_count(degree));
    std::size_t r = 0;
    for (const auto& e : mult) {
        const Form m = Form::monomial(e);
        for (const auto& qf : qs) {
            const Form prod = m * qf;
            for (std::size_t c = 0; c < prod.coeffs().size(); ++c) rows(r, c) = prod.coeffs()[c];
            ++r;
        }
    }
    return rows;
}

struct Quotient {
    IntEchelon i3;
    IntEchelon i4;
    std::vector<std::size_t> free3;
    std::vector<std::size_t> free4;
};

Quotient build_quotient(const std::array<Form, 5>& qs) {
    Quotient out{fraction_free_echelon(ideal_piece(qs, 3)), fraction_free_echelon(ideal_piece(qs, 4)), {}, {}};
    out.free3 = out.i3.free_columns();
    out.free4 = out.i4.free_columns();
    if (out.free3.size() != 5 || out.free4.size() != 5)
        throw DegeneratePencil("quotient dimensions (" + std::to_string(out.free3.size()) + ", " +
                               std::to_string(out.free4.size()) + ") in degrees 3, 4; expected (5, 5)");
    return out;
}

Substitution4 identity_substitution() {
    Substitution4 g{};
    for (std::size_t i = 0; i < 4; ++i) g[i][i] = 1;
    return g;
}

Substitution4 random_substitution(std::mt19937_64& rng) {
    const IntMatrix m = GroupElementZ::random(rng, 8).g4();
    Substitution4 g{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g[i][j] = m(i, j);
    return g;
}

Form random_linear(std::mt19937_64& rng, long range) {
    std::uniform_int_distribution<long> d(-range, range);
    std::array<Int, 4> c;
    do {
        for (auto& x : c) x = d(rng);
    } while (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0);
    return Form::linear(c);
}

/// Coordinates of v (degree 4) in the quotient basis, scaled by 1/s.
std::pair<std::vector<Int>, Int> quotient_coords(const Quotient& qt, const Form& v) {
    auto [w, s] = qt.i4.reduce(v.coeffs());
    std::vector<Int> out(qt.free4.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = w[qt.free4[k]];
    return {std::move(out), std::move(s)};
}

/// Builds the two multiplication matrices; nullopt if ℓ0 is not invertible.
std::optional<PencilAlgebra> try_build(const Quotient& qt, const Form& ell0, const Form& ell) {
    PencilAlgebra alg;
    alg.ell0 = ell0;
    alg.ell = ell;
    alg.mult_l0 = IntMatrix(5, 5);
    alg.mult_l = IntMatrix(5, 5);
    const auto& mons3 = Form::monomials(3);
    for (std::size_t j = 0; j < 5; ++j) {
        const Exponent4& e = mons3[qt.free3[j]];
        alg.basis.push_back(e);
        const Form m = Form::monomial(e);
        auto [w0, s0] = quotient_coords(qt, ell0 * m);
        auto [w1, s1] = quotient_coords(qt, ell * m);
        for (std::size_t i = 0; i < 5; ++i) {
            alg.mult_l0(i, j) = w0[i] * s1;
            alg.mult_l(i, j) = w1[i] * s0;
        }
    }
    if (determinant(alg.mult_l0) == 0) return std::nullopt;
    alg.op = inverse(to_rational(alg.mult_l0)) * to_rational(alg.mult_l);
    return alg;
}

/// Coefficients (constant first) of the degree <= n polynomial through
/// (k, ys[k]) for k = 0..n, via Newton divided differences.
std::vector<Rat> interpolate_at_naturals(const std::vector<Int>& ys) {
    const std::size_t n = ys.size();
    std::vector<Rat> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t k = n - 1; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / Rat(static_cast<long>(level));
    // Expand the Newton form: p = dd0 + dd1 x + dd2 x(x-1) + ...
    std::vector<Rat> coeffs(n);
    std::vector<Rat> basis{Rat(1)};  // product (x-0)(x-1)...(x-k+1)
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
        std::vector<Rat> next(basis.size() + 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] -= basis[i] * static_cast<long>(k);
        }
        basis = std::move(next);
    }
    return coeffs;
}

/// Cached per-quadruple state for the retry loop.
struct Builder {
    std::array<Form, 5> qs;
    std::optional<Quotient> quotient;
    std::optional<Quotient> substituted;
    Substitution4 sub = identity_substitution();

    explicit Builder(const Quadruple& q) : qs(sub_pfaffians(q)) {}

    /// Attempt k: fresh linear forms; from the midpoint of the retry budget
    /// on, also a fresh unimodular t-substitution.
    std::optional<PencilAlgebra> attempt(std::uint64_t seed, int k, int cap) {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(k), 0x9e3779b9U};
        std::mt19937_64 rng(sseq);
        const Quotient* qt = nullptr;
        Substitution4 used = identity_substitution();
        if (k < (cap + 1) / 2 || k == 0) {
            if (!quotient) quotient = build_quotient(qs);
            qt = &*quotient;
        } else {
            used = random_substitution(rng);
            std::array<Form, 5> moved;
            for (std::size_t i = 0; i < 5; ++i) moved[i] = qs[i].substitute(used);
            substituted = build_quotient(moved);
            qt = &*substituted;
        }
        const long range = 3 + k;
        const Form ell0 = random_linear(rng, range);
        Form ell = random_linear(rng, range);
        auto alg = try_build(*qt, ell0, ell);
        if (alg) {
            alg->substitution = used;
            alg->attempt = k;
        }
        return alg;
    }
};

}  // namespace

std::array<QuadricForm, 5> sub_pfaffians(const Quadruple& q) {
    const auto m = pencil_matrix(q);
    std::array<QuadricForm, 5> out;
    for (std::size_t i = 0; i < 5; ++i) {
        std::array<std::size_t, 4> keep{};
        std::size_t n = 0;
        for (std::size_t r = 0; r < 5; ++r)
            if (r != i) keep[n++] = r;
        Form pf = pfaffian4_entries<Form>(m[keep[0]][keep[1]], m[keep[0]][keep[2]], m[keep[0]][keep[3]],
                                          m[keep[1]][keep[2]], m[keep[1]][keep[3]], m[keep[2]][keep[3]]);
        out[i] = (i % 2 == 0) ? pf : -pf;  // (−1)^{i+1} with 1-based i
    }
    return out;
}

std::array<Form, 5> kernel_identity_residual(const Quadruple& q) {
    const auto m = pencil_matrix(q);
    const auto qs = sub_pfaffians(q);
    std::array<Form, 5> out;
    for (std::size_t r = 0; r < 5; ++r) {
        Form acc(3);
        for (std::size_t c = 0; c < 5; ++c) acc += m[r][c] * qs[c];
        out[r] = acc;
    }
    return out;
}

PencilAlgebra pencil_algebra(const Quadruple& q, std::uint64_t seed, const PencilOptions& opts) {
    Builder b(q);
    const int cap = std::max(1, opts.retry_cap);
    for (int k = 0; k < cap; ++k)
        if (auto alg = b.attempt(seed, k, cap)) return std::move(*alg);
    throw DegeneratePencil("no invertible linear form found in " + std::to_string(cap) + " attempts");
}

IntPoly char_poly(const PencilAlgebra& alg) {
    // det(x·L0 − L) at x = 0..5, then interpolate.
    std::vector<Int> ys;
    for (long x = 0; x <= 5; ++x) {
        IntMatrix m(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = alg.mult_l0(i, j) * x - alg.mult_l(i, j);
        ys.push_back(determinant(m));
    }
    const auto coeffs = interpolate_at_naturals(ys);
    Int den = 1;
    for (const auto& c : coeffs) den = lcm(den, c.get_den());
    std::vector<Int> ints;
    for (const auto& c : coeffs) ints.push_back(c.get_num() * (den / c.get_den()));
    return IntPoly(std::move(ints)).primitive();
}

IntPoly char_quintic(const Quadruple& q, std::uint64_t seed, const PencilOptions& opts) {
    Builder b(q);
    const int cap = std::max(1, opts.retry_cap);
    std::optional<IntPoly> last;
    for (int k = 0; k < cap; ++k) {
        auto alg = b.attempt(seed, k, cap);
        if (!alg) continue;
        IntPoly f = char_poly(*alg);
        if (is_squarefree(f)) return f;
        last = std::move(f);
    }
    if (last) return *last;
    throw DegeneratePencil("no invertible linear form found in " + std::to_string(cap) + " attempts");
}

S5Certificate s5_certify(const IntPoly& f, int prime_budget) {
    if (f.degree() != 5) throw NotQuintic("s5_certify needs a quintic");
    if (!is_irreducible(f)) throw NotIrreducible(f.to_string());
    S5Certificate cert;
    const Rat disc = poly_discriminant(f);
    const Int bad = disc.get_num() * f.lc();
    Int p = 2;
    // A Frobenius of cycle type (2)(3) cubes to a transposition, so that
    // pattern witnesses a transposition just as {1,1,1,2} does.
    static const std::vector<int> kTransposition{1, 1, 1, 2};
    static const std::vector<int> kTwoThree{2, 3};
    static const std::vector<int> kFiveCycle{5};
    while (cert.primes_examined < prime_budget) {
        ++cert.primes_examined;
        if (mod(bad, p) != 0) {
            const auto pattern = factor_degree_pattern(ModPoly(f, p));
            if ((pattern == kTransposition || pattern == kTwoThree) && cert.transposition_prime == 0) cert.transposition_prime = p.get_si();
            if (pattern == kFiveCycle && cert.five_cycle_prime == 0) cert.five_cycle_prime = p.get_si();
            if (cert.transposition_prime && cert.five_cycle_prime) {
                cert.verdict = S5Status::CertifiedS5;
                return cert;
            }
        }
        p = next_prime(p);
    }
    return cert;
}

Classification classify(const Quadruple& q, std::uint64_t seed, const ClassifyOptions& opts) {
    Classification out;
    IntPoly f;
    try {
        f = char_quintic(q, seed, PencilOptions{opts.retry_cap});
    } catch (const DegeneratePencil&) {
        return out;
    }
    out.char_poly = f;
    if (f.degree() != 5 || !is_squarefree(f)) return out;
    out.status = PencilStatus::Classified;
    out.i = (5 - real_root_count(f)) / 2;
    out.disc_sign = sgn(poly_discriminant(f));
    const auto factors = factor_quintic(f);
    for (const auto& g : factors)
        if (g.degree() > 0) out.factor_degrees.push_back(g.degree());
    std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
    out.reducible = out.factor_degrees.size() > 1;
    if (!out.reducible && opts.certify_s5) out.s5 = s5_certify(f, opts.prime_budget).verdict;
    return out;
}

const char* to_string(PencilStatus s) { return s == PencilStatus::DiscZero ? "DiscZero" : "Classified"; }
const char* to_string(S5Status s) { return s == S5Status::CertifiedS5 ? "CertifiedS5" : "Unknown"; }

}  // namespace qpl
