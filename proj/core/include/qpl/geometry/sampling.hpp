#pragma once

/**
 * @file sampling.hpp
 * @brief Random sampling of integer quadruples from a box, classified at
 *        scale, with G_Z-invariance spot checks.
 */

#include "qpl/pencil/pencil.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

namespace qpl {

/// (status, i, reducible, s5) of one classification.
struct SampleKey {
    PencilStatus status = PencilStatus::DiscZero;
    int i = -1;
    bool reducible = false;
    S5Status s5 = S5Status::Unknown;

    friend auto operator<=>(const SampleKey&, const SampleKey&) = default;
    [[nodiscard]] std::string to_string() const;
};

struct SampleOptions {
    int spot_check_every = 10;  ///< every k-th sample is re-classified after a random G_Z move
    int jobs = 1;               ///< worker threads (results do not depend on this)
    ClassifyOptions classify;
};

struct SampleStats {
    long radius = 0;
    long count = 0;
    std::uint64_t seed = 0;
    std::map<SampleKey, long> histogram;
    long spot_checks = 0;
    long spot_checks_passed = 0;

    [[nodiscard]] bool invariance_ok() const { return spot_checks == spot_checks_passed; }
    friend bool operator==(const SampleStats&, const SampleStats&) = default;
};

/**
 * Draws `n` quadruples with coordinates uniform in [-radius, radius] (sample
 * k uses its own generator seeded from (seed, k), so results are identical
 * for any number of jobs), classifies each one and tallies the outcomes.
 */
SampleStats sample_box(long radius, long n, std::uint64_t seed, const SampleOptions& opts = {});

}  // namespace qpl
