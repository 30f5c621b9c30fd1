#include "nyldon/hallsets.hpp"

#include <stdexcept>

namespace nyldon::hallsets {
namespace {

constexpr std::size_t max_counterexamples_per_clause = 16;

void require_policy(const GeneratedSet& set, const OrderPolicy& policy) {
    if (set.policy_id != policy.id()) {
        throw PreconditionError("set was generated under policy '" + set.policy_id + "', not '" + policy.id() + "'");
    }
}

// Calls visit(f, g, fg) for every member fg with both halves members.
template <class Visit>
void for_each_member_split(const GeneratedSet& set, Visit&& visit) {
    for (const auto& fg : set.members) {
        for (std::size_t k = 1; k < fg.size(); ++k) {
            Word f = fg.substr(0, k);
            if (!set.contains(f)) continue;
            Word g = fg.substr(k, fg.size() - k);
            if (!set.contains(g)) continue;
            visit(f, g, fg);
        }
    }
}

}  // namespace

GeneratedSet generate(const OrderPolicy& policy, Alphabet alphabet, std::size_t max_len, const Budget& budget,
                      const GenerateOptions& options) {
    if (max_len == 0) throw PreconditionError("generate: max_len must be at least 1");
    budget.require_items(words_up_to(alphabet.size(), max_len), "generate");

    MelanconOptions melancon;
    melancon.check_growth = false;  // validated on the finished set instead

    GeneratedSet set{alphabet, max_len, policy.id(), {}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        budget.check_time();
        std::vector<Word> fresh;
        std::size_t index = 0;
        for (const auto& w : all_words(alphabet, len)) {
            const bool member = factorize(w, policy, melancon).size() == 1;
            if (options.oracle_sample_stride != 0 && index++ % options.oracle_sample_stride == 0 &&
                len <= oracle::max_query_length && len > 1) {
                if (member != oracle::is_member_bruteforce(w, set)) {
                    throw std::logic_error("generate: Melancon and the brute-force oracle disagree on " +
                                           to_string(w) + " under policy '" + policy.id() + "'");
                }
            }
            if (member) fresh.push_back(w);
        }
        set.members.insert(fresh.begin(), fresh.end());
    }

    if (options.enforce_nyldon_like) {
        const auto check = validate_nyldon_like(set, policy);
        if (!check.ok) {
            const auto& v = check.violations.front();
            throw PolicyViolationError("policy '" + policy.id() + "' violates the Nyldon-like condition: f = " +
                                       to_string(v.f) + ", g = " + to_string(v.g) + ", fg = " +
                                       to_string(v.f + v.g) + " but f is not below fg");
        }
    }
    return set;
}

NyldonLikeCheck validate_nyldon_like(const GeneratedSet& set, const OrderPolicy& policy) {
    require_policy(set, policy);
    NyldonLikeCheck out;
    for_each_member_split(set, [&](const Word& f, const Word& g, const Word& fg) {
        if (policy.compare(f, fg) < 0) return;
        out.ok = false;
        if (out.violations.size() < max_counterexamples_per_clause) out.violations.push_back({f, g, "nyldon_like"});
    });
    return out;
}

FactorizationCheck verify_factorization_property(const GeneratedSet& set, const OrderPolicy& policy,
                                                 std::size_t test_len, const Budget& budget) {
    require_policy(set, policy);
    if (test_len > set.max_len) {
        throw PreconditionError("verify_factorization_property: test_len exceeds the set's max_len");
    }
    budget.require_items(words_up_to(set.alphabet.size(), test_len), "factorization check");

    FactorizationCheck out;
    for (std::size_t len = 1; len <= test_len && out.holds; ++len) {
        budget.check_time();
        for (const auto& w : all_words(set.alphabet, len)) {
            ++out.words_checked;
            const auto counted = oracle::count_factorizations(
                w, policy, [&](std::size_t start, std::size_t l) { return set.contains(w.substr(start, l)); });
            if (counted.count != 1) {
                out.holds = false;
                out.witness = w;
                out.witness_count = counted.count;
                break;
            }
        }
    }
    return out;
}

HallVerdict verify_hall(const GeneratedSet& set, const OrderPolicy& policy, const Budget& budget) {
    require_policy(set, policy);
    HallVerdict verdict;
    verdict.policy_id = policy.id();
    verdict.truncation = set.max_len;

    const auto factorization = verify_factorization_property(set, policy, set.max_len, budget);
    verdict.is_factorization = factorization.holds;
    verdict.factorization_witness = factorization.witness;

    bool right = true, left = true, nyldon_like = true;
    std::size_t n_right = 0, n_left = 0, n_like = 0;
    for_each_member_split(set, [&](const Word& f, const Word& g, const Word& fg) {
        if (policy.compare(f, fg) >= 0) {
            nyldon_like = false;
            if (n_like++ < max_counterexamples_per_clause) verdict.counterexamples.push_back({f, g, "nyldon_like"});
        }
        if (policy.compare(fg, g) <= 0) {
            right = false;
            if (n_right++ < max_counterexamples_per_clause) verdict.counterexamples.push_back({f, g, "right_hall"});
        }
        if (policy.compare(fg, f) >= 0) {
            left = false;
            if (n_left++ < max_counterexamples_per_clause) verdict.counterexamples.push_back({f, g, "left_hall"});
        }
    });
    verdict.nyldon_like_ok = nyldon_like;
    verdict.is_right_hall = verdict.is_factorization && right;
    verdict.is_left_hall = verdict.is_factorization && left;
    verdict.is_viennot = verdict.is_right_hall && verdict.is_left_hall;
    return verdict;
}

}  // namespace nyldon::hallsets
