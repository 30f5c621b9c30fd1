#pragma once

// Definition-faithful reference implementations. Everything here is
// exponential or high-degree polynomial and meant for desk-scale lengths;
// the fast algorithms are tested against it.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nyldon/budget.hpp"
#include "nyldon/policy.hpp"
#include "nyldon/word.hpp"

namespace nyldon::oracle {

// Longest word the substring tables accept.
inline constexpr std::size_t max_query_length = 128;

// A truncated Nyldon-like set G (or Hall set H, Lazard base F): every
// member has length <= max_len.
struct GeneratedSet {
    Alphabet alphabet;
    std::size_t max_len = 0;
    std::string policy_id;
    std::set<Word> members;

    bool contains(const Word& w) const { return members.contains(w); }
    std::size_t size() const noexcept { return members.size(); }
    // counts[len] = number of members of that length; counts[0] is 0.
    std::vector<std::size_t> counts_by_length() const;
    std::vector<Word> of_length(std::size_t len) const;

    // Plain-text form: one JSON header line (alphabet, max_len, policy_id,
    // count) followed by the members in sorted order, one per line.
    std::string to_text() const;
    static GeneratedSet from_text(std::string_view text);
};

// Membership of the substring [start, start + len) of the query word.
using MemberFn = std::function<bool(std::size_t start, std::size_t len)>;

struct FactorizationCount {
    std::uint64_t count = 0;  // saturates at UINT64_MAX
    // Ranges (start, len) of one factorization, empty when count == 0.
    std::vector<std::pair<std::size_t, std::size_t>> example;
};

// Counts factorizations of w into parts accepted by `member` that are
// nondecreasing under `policy`. With allow_single == false only
// factorizations into at least two parts are counted.
FactorizationCount count_factorizations(const Word& w, const OrderPolicy& policy, const MemberFn& member,
                                        bool allow_single = true);

// Recursive membership: single letters are members; a longer word is a
// member iff it has no nondecreasing factorization into >= 2 shorter
// members. Memoized over substrings, O(|w|^4) comparisons.
bool is_g_word_bruteforce(const Word& w, const OrderPolicy& policy);
bool is_nyldon_bruteforce(const Word& w);
bool is_lyndon_bruteforce(const Word& w);

// The G-factorization found by exhaustive search. Uniqueness is asserted for
// |w| <= uniqueness_cap: a count other than one throws std::logic_error.
Factorization g_factorization_bruteforce(const Word& w, const OrderPolicy& policy,
                                         std::size_t uniqueness_cap = max_query_length);
Factorization nyldon_factorization_bruteforce(const Word& w, std::size_t uniqueness_cap = max_query_length);

// Generation rule applied length by length against the shorter members
// already generated.
GeneratedSet enumerate_generated(const OrderPolicy& policy, Alphabet alphabet, std::size_t max_len,
                                 const Budget& budget = {});
GeneratedSet enumerate_nyldon(Alphabet alphabet, std::size_t max_len, const Budget& budget = {});

// Generation rule for one word against the members of `set`.
bool is_member_bruteforce(const Word& w, const GeneratedSet& set);

}  // namespace nyldon::oracle
