/**
 * @file matrix.cpp
 * @brief Gaussian elimination over Q and fraction-free elimination over Z.
 */

#include "qpl/algebra/matrix.hpp"

#include <utility>

namespace qpl {

Rref rref(const RatMatrix& m) {
    Rref out{m, {}};
    RatMatrix& a = out.form;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const Rat inv = 1 / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rat factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

RankKernel rank_kernel(const RatMatrix& m) {
    const Rref e = rref(m);
    RankKernel out;
    out.rank = e.pivots.size();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.form(i, free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    RatMatrix a = m;
    Rat det = 1;
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rat factor = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Rref e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DimensionMismatch("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.form(i, n + j);
    return inv;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    IntMatrix a = m;
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            sgn_flip = -sgn_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sgn_flip * a(n - 1, n - 1);
}

IntEchelon fraction_free_echelon(const IntMatrix& m) {
    // Working copy as row vectors so swaps are cheap.
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);

    IntEchelon out;
    out.cols = m.cols();
    Int prev = 1;
    std::size_t r = 0;
    Int tmp;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        const Int& p = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const Int f = a[i][c];
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                // a[i][j] = (p * a[i][j] - f * a[r][j]) / prev, exactly.
                mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[r][j].get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::vector<std::size_t> IntEchelon::free_columns() const {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

std::pair<std::vector<Int>, Int> IntEchelon::reduce(std::vector<Int> v) const {
    if (v.size() != cols) throw DimensionMismatch("echelon reduction");
    Int scale = 1;
    Int g;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t c = pivots[i];
        if (v[c] == 0) continue;
        const Int p = rows[i][c];
        const Int f = v[c];
        for (std::size_t j = 0; j < cols; ++j) {
            v[j] *= p;
            if (j >= c) v[j] -= f * rows[i][j];
        }
        scale *= p;
        // Keep sizes in check: divide out the common content.
        g = scale;
        for (const auto& x : v) {
            if (g == 1) break;
            if (x != 0) g = gcd(g, x);
        }
        if (g != 1 && g != 0) {
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(scale.get_mpz_t(), scale.get_mpz_t(), g.get_mpz_t());
        }
    }
    if (scale < 0) {
        scale = -scale;
        for (auto& x : v) x = -x;
    }
    return {std::move(v), scale};
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

}  // namespace qpl
