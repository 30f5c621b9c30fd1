#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nyldon/budget.hpp"
#include "nyldon/melancon.hpp"
#include "nyldon/oracle.hpp"
#include "nyldon/policy.hpp"

namespace nyldon::hallsets {

using oracle::GeneratedSet;

struct Counterexample {
    Word f;
    Word g;
    std::string clause;  // "nyldon_like", "right_hall" or "left_hall"
};

// Verdicts only speak about words of length <= truncation.
struct HallVerdict {
    std::string policy_id;
    std::size_t truncation = 0;
    bool is_factorization = false;
    bool is_right_hall = false;
    bool is_left_hall = false;
    bool is_viennot = false;
    bool nyldon_like_ok = false;
    std::optional<Word> factorization_witness;
    std::vector<Counterexample> counterexamples;
};

struct GenerateOptions {
    // Throw PolicyViolationError when the result breaks f < fg.
    bool enforce_nyldon_like = true;
    // Every n-th word of each length is re-checked with the brute-force
    // oracle; 0 disables the cross-check.
    std::size_t oracle_sample_stride = 17;
};

// Length-increasing generation: a word joins the set iff Melancon's
// factorization under the policy returns it as a single factor.
GeneratedSet generate(const OrderPolicy& policy, Alphabet alphabet, std::size_t max_len, const Budget& budget = {},
                      const GenerateOptions& options = {});

struct NyldonLikeCheck {
    bool ok = true;
    std::vector<Counterexample> violations;
};

// For all members f, g with fg a member: f < fg.
NyldonLikeCheck validate_nyldon_like(const GeneratedSet& set, const OrderPolicy& policy);

struct FactorizationCheck {
    bool holds = true;
    std::size_t words_checked = 0;
    // First word whose count of nondecreasing factorizations is not 1.
    std::optional<Word> witness;
    std::uint64_t witness_count = 0;
};

// Exhaustive: every word of length <= test_len has exactly one
// nondecreasing factorization into members.
FactorizationCheck verify_factorization_property(const GeneratedSet& set, const OrderPolicy& policy,
                                                 std::size_t test_len, const Budget& budget = {});

// Right Hall: fg > g; left Hall: fg < f; both require the set to be a
// factorization of the free monoid (checked up to the truncation).
HallVerdict verify_hall(const GeneratedSet& set, const OrderPolicy& policy, const Budget& budget = {});

}  // namespace nyldon::hallsets
