#pragma once

/**
 * @file pfaffian.hpp
 * @brief Pfaffians of 4×4 skew-symmetric matrices.
 *
 * The Pfaffian is the polynomial square root of the determinant.  The
 * convention Pf = m12·m34 − m13·m24 + m14·m23 fixes the global sign.
 */

#include "qpl/algebra/matrix.hpp"
#include "qpl/util/errors.hpp"

#include <array>

namespace qpl {

/// True iff Mᵀ = −M (in particular the diagonal vanishes).
template <typename T>
bool is_skew(const Matrix<T>& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

/**
 * Pfaffian of a 4×4 skew matrix given by its six upper entries
 * (m12, m13, m14, m23, m24, m34).  Generic over any commutative ring type,
 * which lets the pencil module evaluate it on polynomial entries.
 */
template <typename R>
R pfaffian4_entries(const R& m12, const R& m13, const R& m14, const R& m23, const R& m24, const R& m34) {
    return m12 * m34 - m13 * m24 + m14 * m23;
}

/// Pfaffian of a 4×4 skew-symmetric matrix; throws NotSkew otherwise.
template <typename T>
T pfaffian4(const Matrix<T>& m) {
    if (m.rows() != 4 || m.cols() != 4) throw NotSkew("pfaffian4 needs a 4x4 matrix");
    if (!is_skew(m)) throw NotSkew("matrix is not skew-symmetric");
    return pfaffian4_entries<T>(m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3));
}

}  // namespace qpl
