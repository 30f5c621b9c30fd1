#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "nyldon/budget.hpp"
#include "nyldon/word.hpp"

namespace nyldon::analysis {

// --- circular codes -------------------------------------------------------

struct CircularWitness {
    std::vector<Word> sequence;
    std::size_t offset = 0;
    // The rotated concatenation cut into codewords.
    std::vector<Word> rotated_parse;
};

struct CircularCodeVerdict {
    std::vector<Word> code;
    std::size_t word_length = 0;
    std::size_t max_blocks = 0;
    bool is_circular = true;
    std::optional<CircularWitness> witness;
    std::uint64_t sequences_checked = 0;
};

// Left-rotates the concatenation of `sequence` by `offset` and cuts it into
// blocks of the common length; returns the blocks iff all are codewords.
std::optional<std::vector<Word>> rotation_parse(const std::set<Word>& code, const std::vector<Word>& sequence,
                                                std::size_t offset);

// Tries every sequence of 1..max_blocks codewords (in lexicographic order of
// sequences) and every offset that is not a multiple of the word length.
// The first failing (sequence, offset) is the witness.
CircularCodeVerdict circular_code_check(const std::vector<Word>& code, std::size_t max_blocks,
                                        const Budget& budget = {}, unsigned jobs = 1);

// --- powers -----------------------------------------------------------------

struct PowerProfile {
    Word w;
    Word n;  // Nyldon conjugate of w
    std::size_t k = 0;
    std::vector<Word> prefix_factors;
    std::size_t central_copies = 0;
    std::vector<Word> suffix_factors;
    std::size_t K = 0;  // k - central_copies
    // floor(log2 |w|) + 1
    std::size_t bound = 0;
    bool within_bound = true;  // vacuous when central_copies == 0
};

PowerProfile power_profile(const Word& w, std::size_t k);

std::size_t floor_log2(std::size_t x);
// floor(log2 max_len) + 3
std::size_t default_scan_power(std::size_t max_len);

struct KScanEntry {
    Word w;
    std::size_t K = 0;
    std::size_t central_copies = 0;
    bool stable = true;
};

struct KBoundReport {
    std::size_t max_len = 0;
    std::size_t k = 0;
    std::size_t words_scanned = 0;
    std::size_t classes = 0;
    std::size_t max_K = 0;
    std::optional<Word> max_K_witness;
    std::size_t violations = 0;
    std::vector<Word> violation_words;
    // Powers without a central copy of n at the tested k.
    std::vector<Word> no_central;
    // Prefix/suffix factors or K differ across k, k+1, k+2.
    std::vector<Word> unstable;
    std::vector<KScanEntry> entries;  // filled when keep_entries is set
};

// Profiles every primitive word of length <= max_len (all rotations) at k,
// k+1 and k+2. k = 0 selects default_scan_power(max_len).
KBoundReport k_bound_scan(Alphabet alphabet, std::size_t max_len, std::size_t k = 0, const Budget& budget = {},
                          unsigned jobs = 1, bool keep_entries = false);

// s n^k a is not Nyldon, and the factorization of n^k a starts with a
// factor x with |x| >= |n| and x >= n.
bool sn_ka_check(const Word& n, const Word& s, const Word& a, std::size_t k);

// --- Lyndon suffix theorem --------------------------------------------------

// True iff w is lexicographically below each of its Lyndon proper suffixes.
bool below_lyndon_suffixes(const Word& w);

struct LyndonSuffixReport {
    bool holds = true;
    std::size_t words_checked = 0;
    std::size_t hypothesis_count = 0;
    std::optional<Word> counterexample;
};

LyndonSuffixReport lyndon_suffix_check(Alphabet alphabet, std::size_t max_len, const Budget& budget = {},
                                       unsigned jobs = 1);

}  // namespace nyldon::analysis
