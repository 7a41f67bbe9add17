#pragma once

/**
 * @file s5_classes.hpp
 * @brief Conjugacy classes of S5 from raw permutation enumeration.
 */

#include <array>
#include <string>
#include <vector>

namespace qpl {

using Permutation5 = std::array<int, 5>;

/// One conjugacy class of S5.
struct S5Class {
    std::vector<int> cycle_type;  ///< cycle lengths, descending, including fixed points
    Permutation5 representative{};
    long size = 0;
    long centralizer_order = 0;

    /// Splitting type of an unramified prime with this Frobenius, e.g. "(1112)".
    [[nodiscard]] std::string splitting_type() const;
    /// Cycle notation of the representative, e.g. "(12)(345)".
    [[nodiscard]] std::string cycle_notation() const;
};

/// All 120 permutations of {0..4} in lexicographic order.
std::vector<Permutation5> s5_elements();

/// Cycle lengths (descending) of a permutation.
std::vector<int> cycle_type(const Permutation5& p);

/**
 * The seven classes, sorted by number of non-trivial cycles then by cycle
 * lengths: e, (12), (123), (1234), (12345), (12)(34), (12)(345).
 * Sizes are counted and centralizers found by testing all 120 elements.
 */
std::vector<S5Class> s5_class_data();

}  // namespace qpl
