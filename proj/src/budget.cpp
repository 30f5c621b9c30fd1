#include "nyldon/budget.hpp"

#include <cmath>
#include <cstdlib>

namespace nyldon {

Budget::Budget(std::uint64_t max_items, std::optional<std::chrono::milliseconds> time_limit)
    : max_items_(max_items) {
    if (time_limit) deadline_ = Clock::now() + *time_limit;
}

Budget Budget::from_env() {
    Budget b;
    if (const char* ms = std::getenv("NYLDON_BUDGET_MS"); ms && *ms) {
        char* end = nullptr;
        const long long value = std::strtoll(ms, &end, 10);
        if (end && *end == '\0' && value > 0) {
            b.deadline_ = Clock::now() + std::chrono::milliseconds(value);
        }
    }
    return b;
}

void Budget::require_items(long double items, const std::string& what) const {
    if (items > static_cast<long double>(max_items_)) {
        throw BudgetExceededError(what + " needs about " + std::to_string(static_cast<double>(items)) +
                                  " items, budget is " + std::to_string(max_items_));
    }
}

void Budget::check_time() const {
    if (deadline_ && Clock::now() > *deadline_) {
        throw BudgetExceededError("time budget exceeded (NYLDON_BUDGET_MS)");
    }
}

long double words_up_to(std::size_t alphabet_size, std::size_t max_len) {
    long double total = 0, term = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += term;
        term *= static_cast<long double>(alphabet_size);
    }
    return total;
}

}  // namespace nyldon
