/**
 * @file weights.cpp
 * @brief Coordinate weights and root-character sums.
 */

#include "qpl/cusp/weights.hpp"

#include <sstream>

namespace qpl {

const std::array<std::array<int, 3>, 4>& gl4_torus_diagonal() {
    // a4(s) = diag(s1^-3 s2^-1 s3^-1, s1 s2^-1 s3^-1, s1 s2 s3^-1, s1 s2 s3^3).
    static constexpr std::array<std::array<int, 3>, 4> d{{{-3, -1, -1}, {1, -1, -1}, {1, 1, -1}, {1, 1, 3}}};
    return d;
}

const std::array<std::array<int, 4>, 5>& sl5_torus_diagonal() {
    // a5(s) = diag(s4^-4 s5^-3 s6^-2 s7^-1, s4 s5^-3 s6^-2 s7^-1, s4 s5^2 s6^-2 s7^-1,
    //              s4 s5^2 s6^3 s7^-1, s4 s5^2 s6^3 s7^4).
    static constexpr std::array<std::array<int, 4>, 5> e{
        {{-4, -3, -2, -1}, {1, -3, -2, -1}, {1, 2, -2, -1}, {1, 2, 3, -1}, {1, 2, 3, 4}}};
    return e;
}

WeightMonomial coordinate_weight(CoordId c) {
    std::array<int, WeightMonomial::kSize> e{};
    e[0] = 1;
    const auto& d = gl4_torus_diagonal()[static_cast<std::size_t>(c.letter())];
    for (std::size_t k = 0; k < 3; ++k) e[1 + k] = d[k];
    const auto& ei = sl5_torus_diagonal()[static_cast<std::size_t>(c.i() - 1)];
    const auto& ej = sl5_torus_diagonal()[static_cast<std::size_t>(c.j() - 1)];
    for (std::size_t k = 0; k < 4; ++k) e[4 + k] = ei[k] + ej[k];
    return WeightMonomial(e);
}

std::array<int, 7> haar_exponents() {
    std::array<int, 7> total{};
    // Conjugation a·n̄(u)·a⁻¹ multiplies the (i, j) entry, i > j, by d_i/d_j.
    const auto& d = gl4_torus_diagonal();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < 3; ++k) total[k] -= d[i][k] - d[j][k];
    const auto& e = sl5_torus_diagonal();
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < i; ++j)
            for (std::size_t k = 0; k < 4; ++k) total[3 + k] -= e[i][k] - e[j][k];
    return total;
}

std::string WeightMonomial::to_string() const {
    std::ostringstream os;
    os << "λ";
    if (e_[0] != 1) os << "^" << e_[0];
    for (std::size_t k = 1; k < kSize; ++k) {
        if (e_[k] == 0) continue;
        os << "·s" << k;
        if (e_[k] != 1) os << "^" << e_[k];
    }
    return os.str();
}

}  // namespace qpl
