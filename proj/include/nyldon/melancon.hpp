#pragma once

// Melancon's contraction algorithm over a generic order policy.
//
// Blocks start as single letters. A contraction appends a minimal block to
// its left neighbour, provided the neighbour is different (and therefore
// strictly greater). In circular mode the chain wraps around and ends with
// the unique G-word conjugate; in linear mode a leading minimal block is
// emitted as the next G-factor instead.

#include <cstdint>
#include <optional>
#include <vector>

#include "nyldon/policy.hpp"
#include "nyldon/word.hpp"

namespace nyldon {

enum class ChainMode { circular, linear };

enum class MelanconStrategy {
    // Priority queue of (block, version) entries, O(|w| log |w|) comparisons.
    heap,
    // Whole passes: each pass fixes the current minimum and absorbs every
    // run of minimal blocks into its left neighbour. Produces the traces.
    passes,
};

struct MelanconOptions {
    MelanconStrategy strategy = MelanconStrategy::heap;
    // Assert fg > f > g on every contraction. Defaults to the policy's
    // prefix_increasing trait; a failure throws PolicyViolationError.
    std::optional<bool> check_growth;
    // Lexicographic policies compare blocks through a suffix-array engine.
    bool use_engine = true;
};

struct MelanconStats {
    std::uint64_t comparisons = 0;
    std::uint64_t contractions = 0;
};

struct MelanconResult {
    // The G-word conjugate (one block) in circular mode, the G-factors in
    // linear mode.
    std::vector<Word> blocks;
    MelanconStats stats;
};

// One pass of the trace: blocks in chain order, plus (linear mode) the
// factors emitted so far.
struct ChainSnapshot {
    std::vector<Word> blocks;
    std::vector<Word> emitted;

    friend bool operator==(const ChainSnapshot&, const ChainSnapshot&) = default;
};

MelanconResult melancon_run(const Word& w, const OrderPolicy& policy, ChainMode mode,
                            const MelanconOptions& options = {});

// Unique G-word conjugate of a primitive word; NotPrimitiveError otherwise.
Word conjugate(const Word& w, const OrderPolicy& policy, const MelanconOptions& options = {});
// Unique nondecreasing G-factorization.
Factorization factorize(const Word& w, const OrderPolicy& policy, const MelanconOptions& options = {});

// Initial chain, then one snapshot after every pass. In linear mode the
// final pass that empties the chain is not recorded.
std::vector<ChainSnapshot> contraction_trace(const Word& w, const OrderPolicy& policy, ChainMode mode);

}  // namespace nyldon
