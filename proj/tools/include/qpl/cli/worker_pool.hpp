#pragma once

/**
 * @file worker_pool.hpp
 * @brief Fixed-size pool of threads mapping a function over task indices with
 *        results returned in index order.
 */

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace qpl::cli {

class WorkerPool {
public:
    explicit WorkerPool(int jobs) : jobs_(std::max(1, jobs)) {}

    [[nodiscard]] int jobs() const noexcept { return jobs_; }

    /**
     * Evaluates f(0), ..., f(n-1) on up to jobs() threads.  The result vector
     * is in index order whatever the completion order.  If tasks throw, the
     * exception of the lowest failing index is rethrown after all threads
     * have joined, so failures are deterministic too.
     */
    template <class F>
    auto map(std::size_t n, F&& f) const -> std::vector<std::invoke_result_t<F&, std::size_t>> {
        using R = std::invoke_result_t<F&, std::size_t>;
        std::vector<std::optional<R>> slots(n);
        std::vector<std::exception_ptr> errors(n);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < n;) {
                try {
                    slots[k].emplace(f(k));
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        };
        const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(jobs_), n);
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(threads);
            for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        }
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        std::vector<R> out;
        out.reserve(n);
        for (auto& s : slots) out.push_back(std::move(*s));
        return out;
    }

private:
    int jobs_;
};

}  // namespace qpl::cli
