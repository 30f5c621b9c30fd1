#include "nyldon/policy.hpp"

#include <algorithm>

namespace nyldon {

OrderPolicy::OrderPolicy(std::string id, Comparator compare, Traits traits)
    : id_(std::move(id)), compare_(std::move(compare)), traits_(traits) {}

OrderPolicy lex_policy() {
    return OrderPolicy("lex", [](LetterSpan a, LetterSpan b) { return lex_compare(a, b); },
                       {.lexicographic = true, .prefix_increasing = true});
}

OrderPolicy reversed_alphabet_policy() {
    return OrderPolicy(
        "revalpha",
        [](LetterSpan a, LetterSpan b) {
            return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end(),
                                                          [](Letter x, Letter y) { return y <=> x; });
        },
        {.lexicographic = false, .prefix_increasing = true});
}

OrderPolicy deglex_policy() {
    return OrderPolicy(
        "deglex",
        [](LetterSpan a, LetterSpan b) {
            if (auto c = a.size() <=> b.size(); c != 0) return c;
            return lex_compare(a, b);
        },
        {.lexicographic = false, .prefix_increasing = true});
}

OrderPolicy lyndon_policy() {
    return OrderPolicy("lyndon", [](LetterSpan a, LetterSpan b) { return lex_compare(b, a); },
                       {.lexicographic = false, .prefix_increasing = false});
}

const std::vector<std::string>& policy_ids() {
    static const std::vector<std::string> ids{"lex", "revalpha", "deglex", "lyndon"};
    return ids;
}

std::optional<OrderPolicy> find_policy(const std::string& id) {
    if (id == "lex") return lex_policy();
    if (id == "revalpha") return reversed_alphabet_policy();
    if (id == "deglex") return deglex_policy();
    if (id == "lyndon") return lyndon_policy();
    return std::nullopt;
}

OrderPolicy policy_by_id(const std::string& id) {
    if (auto p = find_policy(id)) return *p;
    throw PreconditionError("unknown order policy '" + id + "'");
}

}  // namespace nyldon
