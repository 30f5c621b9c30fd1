#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "nyldon/word.hpp"

namespace nyldon {

// Index range [start, start + len) of a base word.
struct Range {
    std::size_t start = 0;
    std::size_t len = 0;

    friend bool operator==(Range, Range) = default;
};

// O(1) lexicographic comparison of substrings of one base word: suffix
// array, Kasai LCP array, and a sparse table for range-minimum queries.
class ComparisonEngine {
public:
    explicit ComparisonEngine(LetterSpan base);
    explicit ComparisonEngine(const Word& base) : ComparisonEngine(base.letters()) {}

    std::size_t size() const noexcept { return base_.size(); }
    const std::vector<std::size_t>& suffix_array() const noexcept { return sa_; }
    const std::vector<std::size_t>& rank() const noexcept { return rank_; }
    // lcp()[i] = LCP of the suffixes at sorted positions i-1 and i; lcp()[0] = 0.
    const std::vector<std::size_t>& lcp() const noexcept { return lcp_; }

    // Longest common prefix of the suffixes starting at a and b.
    std::size_t lcp_of_suffixes(std::size_t a, std::size_t b) const;
    std::strong_ordering compare(Range a, Range b) const;

private:
    std::size_t range_min(std::size_t lo, std::size_t hi) const;  // inclusive

    std::vector<Letter> base_;
    std::vector<std::size_t> sa_;
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> lcp_;
    std::vector<std::vector<std::size_t>> sparse_;
    std::vector<unsigned> log2_;
};

// Substring comparison used by the stack factorization.
enum class CompareMode { engine, naive };

struct FastFactorResult {
    Factorization factorization;
    std::uint64_t comparisons = 0;
};

// Right-to-left stack factorization: prepend each letter, then merge the two
// leftmost factors while the first is lexicographically greater than the
// second. Uses at most 2|w| - 1 comparisons.
FastFactorResult nyldon_factorize_counted(const Word& w, CompareMode mode = CompareMode::engine);
Factorization nyldon_factorize(const Word& w, CompareMode mode = CompareMode::engine);
bool is_nyldon(const Word& w);

}  // namespace nyldon
