#pragma once

/**
 * @file coords.hpp
 * @brief Names of the forty coordinates a_ij, b_ij, c_ij, d_ij of a quadruple.
 *
 * A coordinate is a matrix letter (a, b, c, d for the four 5×5 skew matrices)
 * and a pair 1 ≤ i < j ≤ 5.  Its index is letter·10 + rank(i, j) where pairs
 * are ranked 12, 13, 14, 15, 23, 24, 25, 34, 35, 45 — the order used by the
 * quadruple text format.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qpl {

class CoordId {
public:
    static constexpr int kCount = 40;

    constexpr CoordId() = default;
    /// letter in 0..3 (a..d), 1 <= i < j <= 5; no validation beyond debug use.
    constexpr CoordId(int letter, int i, int j) : index_(static_cast<std::uint8_t>(letter * 10 + pair_rank(i, j))) {}

    static constexpr CoordId from_index(int index) {
        CoordId c;
        c.index_ = static_cast<std::uint8_t>(index);
        return c;
    }

    [[nodiscard]] constexpr int index() const noexcept { return index_; }
    [[nodiscard]] constexpr int letter() const noexcept { return index_ / 10; }
    [[nodiscard]] constexpr int i() const noexcept { return kPairs[index_ % 10][0]; }
    [[nodiscard]] constexpr int j() const noexcept { return kPairs[index_ % 10][1]; }

    [[nodiscard]] std::string name() const {
        std::string s;
        s += static_cast<char>('a' + letter());
        s += static_cast<char>('0' + i());
        s += static_cast<char>('0' + j());
        return s;
    }

    /// Parses names like "a12" or "d45"; std::nullopt on anything else.
    static std::optional<CoordId> parse(std::string_view s) {
        if (s.size() != 3) return std::nullopt;
        const int letter = s[0] - 'a';
        const int i = s[1] - '0';
        const int j = s[2] - '0';
        if (letter < 0 || letter > 3 || i < 1 || j > 5 || i >= j) return std::nullopt;
        return CoordId(letter, i, j);
    }

    static constexpr std::array<CoordId, kCount> all() {
        std::array<CoordId, kCount> out{};
        for (int k = 0; k < kCount; ++k) out[static_cast<std::size_t>(k)] = from_index(k);
        return out;
    }

    friend constexpr auto operator<=>(CoordId, CoordId) = default;

    /// Rank of the pair (i, j) in the order 12, 13, 14, 15, 23, ..., 45.
    static constexpr int pair_rank(int i, int j) {
        for (int k = 0; k < 10; ++k)
            if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
        return -1;
    }

    static constexpr int kPairs[10][2] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                          {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};

private:
    std::uint8_t index_ = 0;
};

}  // namespace qpl
