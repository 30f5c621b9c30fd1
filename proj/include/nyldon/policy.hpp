#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nyldon/word.hpp"

namespace nyldon {

// A total order on nonempty words: the order of a Nyldon-like set, or the
// order of a Hall set in general.
class OrderPolicy {
public:
    using Comparator = std::function<std::strong_ordering(LetterSpan, LetterSpan)>;

    struct Traits {
        // Plain lexicographic order; lets callers substitute a suffix-array
        // comparison engine.
        bool lexicographic = false;
        // f < fg holds for every pair of words, so every set generated under
        // this order satisfies the Nyldon-like condition.
        bool prefix_increasing = false;
    };

    OrderPolicy(std::string id, Comparator compare, Traits traits);

    const std::string& id() const noexcept { return id_; }
    const Traits& traits() const noexcept { return traits_; }

    std::strong_ordering compare(LetterSpan a, LetterSpan b) const { return compare_(a, b); }
    std::strong_ordering compare(const Word& a, const Word& b) const {
        return compare_(a.letters(), b.letters());
    }

private:
    std::string id_;
    Comparator compare_;
    Traits traits_;
};

// <_lex; its Nyldon-like set is the Nyldon words.
OrderPolicy lex_policy();
// Lexicographic with the letter order reversed (m < ... < 1 < 0).
OrderPolicy reversed_alphabet_policy();
// Shorter words first, ties broken lexicographically.
OrderPolicy deglex_policy();
// u precedes v iff u >_lex v. Nondecreasing under this order is
// nonincreasing lexicographically, so its G-set is the Lyndon words.
OrderPolicy lyndon_policy();

std::optional<OrderPolicy> find_policy(const std::string& id);
const std::vector<std::string>& policy_ids();
// Throws PreconditionError for unknown ids.
OrderPolicy policy_by_id(const std::string& id);

}  // namespace nyldon
