#pragma once

// Lazard elimination truncated at length n, with the minimal-choice rule:
//   Y_1 = A,  Y_{i+1} = (Y_i \ {u_i}) u_i^*  (words of length <= n),
// where u_i is the lexicographically least word of Y_i. The chosen words
// u_1 < u_2 < ... are exactly the Nyldon words of length <= n.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nyldon/budget.hpp"
#include "nyldon/word.hpp"

namespace nyldon::lazard {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// State before step `step`: `chosen` holds u_1 .. u_{step-1} and `current`
// holds Y_step restricted to lengths <= n.
struct LazardState {
    Alphabet alphabet;
    std::size_t n = 0;
    std::size_t step = 1;
    std::vector<Word> chosen;
    std::set<Word> current;

    bool done() const noexcept { return current.empty(); }
    // u_step, the least word of the current set.
    const Word& choice() const;
};

// Incremental driver. Words are bucketed by length so that a step only
// walks the buckets that can still be extended by u.
class LazardProcedure {
public:
    LazardProcedure(Alphabet alphabet, std::size_t n);

    bool done() const noexcept { return size_ == 0; }
    std::size_t step() const noexcept { return step_; }
    std::size_t current_size() const noexcept { return size_; }
    const std::vector<Word>& chosen() const noexcept { return chosen_; }

    const Word& next_choice() const;
    // Performs one step and returns the chosen word.
    Word advance();
    LazardState snapshot() const;

private:
    Alphabet alphabet_;
    std::size_t n_;
    std::size_t step_ = 1;
    std::size_t size_ = 0;
    std::vector<std::set<Word>> buckets_;  // index = length
    std::vector<Word> chosen_;
};

// States Y_1 .. Y_{k+1} (the last one empty).
std::vector<LazardState> lazard_run(Alphabet alphabet, std::size_t n, const Budget& budget = {});

struct LazardReport {
    std::size_t n = 0;
    std::size_t total_steps = 0;
    // Least i with Y_i covering every Nyldon word of length <= n not yet chosen.
    std::size_t finishing_step = 0;
    // u_{finishing_step - 1}; empty when the first state already finishes.
    std::optional<Word> stop_word;
    std::size_t words_after_stop = 0;
};

// From an explicit trace; checks coverage set-wise.
LazardReport finishing_step(const std::vector<LazardState>& trace);
// Streaming version for large n. Relies on Y_i of length <= n being a set of
// Nyldon words, so coverage reduces to (i - 1) + |Y_i| == total.
LazardReport lazard_report(Alphabet alphabet, std::size_t n, const Budget& budget = {});

// Closed forms for the stop word and the number of Nyldon words after it
// (alphabet {0..m}). The count formula only holds for odd l >= 15 and even
// l >= 18; other lengths throw PreconditionError.
Word predicted_stop_word(Alphabet alphabet, std::size_t ell);
BigInt count_words_after_stop(Alphabet alphabet, std::size_t ell);

// Number of words of each length 0..L in the untruncated Y_step, from the
// chosen words alone. Requires L >= the longest chosen word.
std::vector<BigInt> length_counts(const LazardState& state, std::size_t L);
// Sum over Y_step of |A|^{-|y|}, truncated to lengths <= L.
Rational kraft_sum(const LazardState& state, std::size_t L);

// Untruncated Y_step restricted to lengths <= L, built explicitly.
std::set<Word> materialize(const LazardState& state, std::size_t L, const Budget& budget = {});

struct CodeCheck {
    bool uniquely_decodable = true;
    // Shortest word (then least) with two distinct parses.
    std::optional<Word> witness;
};

// Unique decodability of the product code^* up to length L.
CodeCheck code_check(const std::vector<Word>& code, std::size_t L, const Budget& budget = {});
CodeCheck lazard_code_check(const LazardState& state, std::size_t L, const Budget& budget = {});

}  // namespace nyldon::lazard
