/**
 * @file sampling.cpp
 * @brief Box sampling of quadruples with deterministic per-sample seeds.
 */

#include "qpl/geometry/sampling.hpp"

#include "qpl/util/errors.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

namespace qpl {

namespace {

struct Outcome {
    SampleKey key;
    bool checked = false;
    bool passed = false;
};

std::mt19937_64 sample_rng(std::uint64_t seed, long k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(static_cast<std::uint64_t>(k) >> 32)};
    return std::mt19937_64(seq);
}

Outcome run_one(long radius, std::uint64_t seed, long k, const SampleOptions& opts) {
    auto rng = sample_rng(seed, k);
    const Quadruple q = random_quadruple(rng, radius);
    const std::uint64_t cseed = rng();
    const Classification c = classify(q, cseed, opts.classify);
    Outcome o;
    o.key = {c.status, c.i, c.reducible, c.s5};
    if (opts.spot_check_every > 0 && k % opts.spot_check_every == 0) {
        const GroupElementZ g = GroupElementZ::random(rng);
        const Classification moved = classify(act(g, q), cseed, opts.classify);
        o.checked = true;
        o.passed = moved.same_type(c);
    }
    return o;
}

}  // namespace

std::string SampleKey::to_string() const {
    std::string s = qpl::to_string(status);
    if (status == PencilStatus::Classified) {
        s += " i=" + std::to_string(i);
        s += reducible ? " reducible" : " irreducible";
        if (!reducible) s += std::string(" ") + qpl::to_string(s5);
    }
    return s;
}

SampleStats sample_box(long radius, long n, std::uint64_t seed, const SampleOptions& opts) {
    if (radius < 0 || n < 0) throw DimensionMismatch("sample_box needs radius >= 0 and n >= 0");
    std::vector<Outcome> outcomes(static_cast<std::size_t>(n));
    const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(std::max<long>(n, 1))));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (long k = w; k < n; k += jobs) outcomes[static_cast<std::size_t>(k)] = run_one(radius, seed, k, opts);
        });
    for (auto& t : workers) t.join();

    SampleStats s;
    s.radius = radius;
    s.count = n;
    s.seed = seed;
    for (const auto& o : outcomes) {
        ++s.histogram[o.key];
        if (o.checked) {
            ++s.spot_checks;
            if (o.passed) ++s.spot_checks_passed;
        }
    }
    return s;
}

}  // namespace qpl
