#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "nyldon/errors.hpp"

namespace nyldon {

// Resource limits for exhaustive searches: a cap on the number of enumerated
// items and an optional wall-clock deadline.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    static constexpr std::uint64_t default_max_items = std::uint64_t{1} << 26;

    Budget() = default;
    explicit Budget(std::uint64_t max_items, std::optional<std::chrono::milliseconds> time_limit = {});

    // Reads NYLDON_BUDGET_MS; other limits keep their defaults.
    static Budget from_env();

    std::uint64_t max_items() const noexcept { return max_items_; }

    // Throws BudgetExceededError when `items` is over the item cap.
    void require_items(long double items, const std::string& what) const;
    // Throws BudgetExceededError once the deadline has passed.
    void check_time() const;

private:
    std::uint64_t max_items_ = default_max_items;
    std::optional<Clock::time_point> deadline_;
};

// |A|^0 + ... + |A|^max_len as a floating estimate for budget checks.
long double words_up_to(std::size_t alphabet_size, std::size_t max_len);

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Results must be
// written by index so the output order does not depend on scheduling. The
// first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::mutex mu;
    std::exception_ptr failure;
    std::vector<std::thread> workers;
    const std::size_t n_workers = std::min<std::size_t>(jobs, count);
    workers.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += n_workers) {
                    {
                        std::lock_guard lock(mu);
                        if (failure) return;
                    }
                    fn(i);
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace nyldon
