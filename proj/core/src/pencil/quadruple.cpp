/**
 * @file quadruple.cpp
 * @brief Quadruple storage and the GL_4(Z) × SL_5(Z) action.
 */

#include "qpl/pencil/quadruple.hpp"

#include "qpl/util/errors.hpp"

#include <sstream>

namespace qpl {

Quadruple Quadruple::from_matrices(const std::array<IntMatrix, 4>& m) {
    Quadruple q;
    for (int letter = 0; letter < 4; ++letter) {
        const IntMatrix& x = m[static_cast<std::size_t>(letter)];
        if (x.rows() != 5 || x.cols() != 5) throw NotSkew("quadruple matrices must be 5x5");
        for (std::size_t r = 0; r < 5; ++r) {
            if (x(r, r) != 0) throw NotSkew("nonzero diagonal entry");
            for (std::size_t c = r + 1; c < 5; ++c)
                if (x(r, c) != -x(c, r)) throw NotSkew("matrix is not skew-symmetric");
        }
        for (int k = 0; k < 10; ++k) {
            const int i = CoordId::kPairs[k][0];
            const int j = CoordId::kPairs[k][1];
            q[CoordId(letter, i, j)] = x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
        }
    }
    return q;
}

Int Quadruple::entry(int letter, int r, int c) const {
    if (r == c) return 0;
    if (r < c) return (*this)[CoordId(letter, r + 1, c + 1)];
    return -(*this)[CoordId(letter, c + 1, r + 1)];
}

IntMatrix Quadruple::matrix(int letter) const {
    IntMatrix m(5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = entry(letter, r, c);
    return m;
}

bool Quadruple::is_zero() const {
    for (const auto& v : x_)
        if (v != 0) return false;
    return true;
}

std::string Quadruple::to_line() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < x_.size(); ++k) os << (k ? " " : "") << x_[k].get_str();
    return os.str();
}

Quadruple random_quadruple(std::mt19937_64& rng, long radius) {
    std::uniform_int_distribution<long> d(-radius, radius);
    std::array<Int, 40> x;
    for (auto& v : x) v = d(rng);
    return Quadruple(std::move(x));
}

GroupElementZ::GroupElementZ() : g4_(IntMatrix::identity(4)), g5_(IntMatrix::identity(5)) {}

GroupElementZ::GroupElementZ(IntMatrix g4, IntMatrix g5) : g4_(std::move(g4)), g5_(std::move(g5)) {
    if (g4_.rows() != 4 || g4_.cols() != 4 || g5_.rows() != 5 || g5_.cols() != 5)
        throw BadDeterminant("group element needs 4x4 and 5x5 factors");
    const Int d4 = determinant(g4_);
    if (d4 != 1 && d4 != -1) throw BadDeterminant("det g4 = " + d4.get_str());
    const Int d5 = determinant(g5_);
    if (d5 != 1) throw BadDeterminant("det g5 = " + d5.get_str());
}

GroupElementZ operator*(const GroupElementZ& x, const GroupElementZ& y) {
    GroupElementZ out;
    out.g4_ = x.g4_ * y.g4_;
    out.g5_ = x.g5_ * y.g5_;
    return out;
}

namespace {

/// Product of `steps` elementary transvections I + s·E_ij with s = ±1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        while (j == i) j = idx(rng);
        const long sign = (rng() & 1U) ? 1 : -1;
        // Row operation: row_i += sign * row_j.
        for (std::size_t c = 0; c < n; ++c) m(i, c) += sign * m(j, c);
    }
    return m;
}

}  // namespace

GroupElementZ GroupElementZ::random(std::mt19937_64& rng, int steps) {
    IntMatrix g4 = random_unimodular(rng, 4, steps);
    if (rng() & 1U)  // flip a row to reach determinant -1 half the time
        for (std::size_t c = 0; c < 4; ++c) g4(0, c) = -g4(0, c);
    IntMatrix g5 = random_unimodular(rng, 5, steps);
    return GroupElementZ(std::move(g4), std::move(g5));
}

Quadruple act(const GroupElementZ& g, const Quadruple& q) {
    std::array<IntMatrix, 4> conj;
    const IntMatrix g5t = g.g5().transpose();
    for (int l = 0; l < 4; ++l) conj[static_cast<std::size_t>(l)] = g.g5() * q.matrix(l) * g5t;
    std::array<IntMatrix, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = IntMatrix(5, 5);
        for (std::size_t l = 0; l < 4; ++l) {
            const Int& c = g.g4()(k, l);
            if (c == 0) continue;
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t s = 0; s < 5; ++s) out[k](r, s) += c * conj[l](r, s);
        }
    }
    return Quadruple::from_matrices(out);
}

}  // namespace qpl
