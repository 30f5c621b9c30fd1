#include "nyldon/oracle.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nyldon::oracle {
namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add_saturating(std::uint64_t a, std::uint64_t b) {
    return a > saturated - b ? saturated : a + b;
}

void check_query(const Word& w, const char* what) {
    if (w.empty()) throw PreconditionError(std::string(what) + ": empty word");
    if (w.size() > max_query_length) {
        throw PreconditionError(std::string(what) + ": word longer than " + std::to_string(max_query_length) +
                                " letters is beyond the brute-force oracle");
    }
}

// Membership of every substring of one word under the recursive definition.
class SubstringMembership {
public:
    SubstringMembership(const Word& w, const OrderPolicy& policy)
        : w_(w), policy_(policy), n_(w.size()), member_(n_ * (n_ + 1), 0),
          tail_((n_ + 1) * (n_ + 1) * (n_ + 1), unknown) {
        for (std::size_t len = 1; len <= n_; ++len) {
            for (std::size_t i = 0; i + len <= n_; ++i) {
                set_member(i, len, len == 1 || !has_split(i, i + len));
            }
        }
    }

    bool member(std::size_t start, std::size_t len) const { return member_[start * (n_ + 1) + len] != 0; }

private:
    static constexpr char unknown = 2;

    void set_member(std::size_t start, std::size_t len, bool v) { member_[start * (n_ + 1) + len] = v; }

    std::strong_ordering compare(std::size_t a, std::size_t la, std::size_t b, std::size_t lb) const {
        const auto s = w_.letters();
        return policy_.compare(s.subspan(a, la), s.subspan(b, lb));
    }

    // Is there a nondecreasing factorization of [i, j) into >= 2 members?
    bool has_split(std::size_t i, std::size_t j) {
        for (std::size_t e = i + 1; e < j; ++e) {
            if (member(i, e - i) && tail_ok(i, e, j)) return true;
        }
        return false;
    }

    // Can [k, j) be factorized into members, nondecreasing, each at least
    // the previous part [p, k)?
    bool tail_ok(std::size_t p, std::size_t k, std::size_t j) {
        if (k == j) return true;
        char& slot = tail_[(j * (n_ + 1) + p) * (n_ + 1) + k];
        if (slot != unknown) return slot != 0;
        bool ok = false;
        for (std::size_t e = k + 1; e <= j && !ok; ++e) {
            ok = member(k, e - k) && compare(k, e - k, p, k - p) >= 0 && tail_ok(k, e, j);
        }
        slot = ok;
        return ok;
    }

    const Word& w_;
    const OrderPolicy& policy_;
    std::size_t n_;
    std::vector<char> member_;
    std::vector<char> tail_;
};

nlohmann::json header_json(const GeneratedSet& set) {
    return {{"alphabet", set.alphabet.size()},
            {"max_len", set.max_len},
            {"policy_id", set.policy_id},
            {"count", set.members.size()}};
}

}  // namespace

std::vector<std::size_t> GeneratedSet::counts_by_length() const {
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (const auto& w : members) {
        if (w.size() >= counts.size()) counts.resize(w.size() + 1, 0);
        ++counts[w.size()];
    }
    return counts;
}

std::vector<Word> GeneratedSet::of_length(std::size_t len) const {
    std::vector<Word> out;
    for (const auto& w : members) {
        if (w.size() == len) out.push_back(w);
    }
    return out;
}

std::string GeneratedSet::to_text() const {
    std::string out = header_json(*this).dump() + "\n";
    for (const auto& w : members) {
        out += to_string(w);
        out += '\n';
    }
    return out;
}

GeneratedSet GeneratedSet::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw PreconditionError("generated set: missing header line");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("generated set: bad header: ") + e.what());
    }
    GeneratedSet set;
    set.alphabet = Alphabet(header.at("alphabet").get<std::size_t>());
    set.max_len = header.at("max_len").get<std::size_t>();
    set.policy_id = header.at("policy_id").get<std::string>();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        set.members.insert(parse_word(line, set.alphabet));
    }
    if (set.members.size() != header.at("count").get<std::size_t>()) {
        throw PreconditionError("generated set: header count does not match the word lines");
    }
    return set;
}

FactorizationCount count_factorizations(const Word& w, const OrderPolicy& policy, const MemberFn& member,
                                        bool allow_single) {
    check_query(w, "count_factorizations");
    const std::size_t n = w.size();
    const auto s = w.letters();
    // ways[p * (n + 1) + k]: factorizations of [k, n) whose first part is at
    // least [p, k) under the policy.
    std::vector<std::uint64_t> ways((n + 1) * (n + 1), 0);
    std::vector<std::vector<char>> is_member(n + 1, std::vector<char>(n + 1, 0));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t e = k + 1; e <= n; ++e) is_member[k][e] = member(k, e - k);
    }
    for (std::size_t k = n + 1; k-- > 1;) {
        for (std::size_t p = 0; p < k; ++p) {
            std::uint64_t total = k == n ? 1 : 0;
            for (std::size_t e = k + 1; e <= n && k < n; ++e) {
                if (!is_member[k][e]) continue;
                if (policy.compare(s.subspan(k, e - k), s.subspan(p, k - p)) < 0) continue;
                total = add_saturating(total, ways[k * (n + 1) + e]);
            }
            ways[p * (n + 1) + k] = total;
        }
    }
    FactorizationCount result;
    const std::size_t last_first_end = allow_single ? n : n - 1;
    for (std::size_t e = 1; e <= last_first_end; ++e) {
        if (is_member[0][e]) result.count = add_saturating(result.count, ways[e]);
    }
    if (result.count == 0) return result;

    // Walk one factorization back out of the table.
    std::size_t p = 0, k = 0;
    for (std::size_t e = 1; e <= last_first_end; ++e) {
        if (is_member[0][e] && ways[e] > 0) {
            k = e;
            break;
        }
    }
    result.example.emplace_back(0, k);
    while (k < n) {
        for (std::size_t e = k + 1; e <= n; ++e) {
            if (is_member[k][e] && policy.compare(s.subspan(k, e - k), s.subspan(p, k - p)) >= 0 &&
                ways[k * (n + 1) + e] > 0) {
                result.example.emplace_back(k, e - k);
                p = k;
                k = e;
                break;
            }
        }
    }
    return result;
}

bool is_g_word_bruteforce(const Word& w, const OrderPolicy& policy) {
    check_query(w, "is_g_word_bruteforce");
    return SubstringMembership(w, policy).member(0, w.size());
}

bool is_nyldon_bruteforce(const Word& w) { return is_g_word_bruteforce(w, lex_policy()); }

bool is_lyndon_bruteforce(const Word& w) { return is_g_word_bruteforce(w, lyndon_policy()); }

Factorization g_factorization_bruteforce(const Word& w, const OrderPolicy& policy, std::size_t uniqueness_cap) {
    check_query(w, "g_factorization_bruteforce");
    const SubstringMembership table(w, policy);
    const auto counted = count_factorizations(
        w, policy, [&](std::size_t start, std::size_t len) { return table.member(start, len); });
    if (counted.count == 0) {
        throw std::logic_error("no G-factorization found for " + to_string(w));
    }
    if (w.size() <= uniqueness_cap && counted.count != 1) {
        throw std::logic_error("G-factorization of " + to_string(w) + " is not unique (" +
                               std::to_string(counted.count) + " found)");
    }
    Factorization out;
    out.order_id = policy.id();
    for (auto [start, len] : counted.example) out.factors.push_back(w.substr(start, len));
    return out;
}

Factorization nyldon_factorization_bruteforce(const Word& w, std::size_t uniqueness_cap) {
    return g_factorization_bruteforce(w, lex_policy(), uniqueness_cap);
}

GeneratedSet enumerate_generated(const OrderPolicy& policy, Alphabet alphabet, std::size_t max_len,
                                 const Budget& budget) {
    if (max_len == 0) throw PreconditionError("enumerate: max_len must be at least 1");
    if (max_len > max_query_length) throw PreconditionError("enumerate: max_len beyond the oracle limit");
    budget.require_items(words_up_to(alphabet.size(), max_len), "enumeration");

    GeneratedSet set{alphabet, max_len, policy.id(), {}};
    for (Letter a = 0; a < alphabet.size(); ++a) set.members.insert(Word(alphabet, {a}));
    for (std::size_t len = 2; len <= max_len; ++len) {
        budget.check_time();
        std::vector<Word> fresh;
        for (const auto& w : all_words(alphabet, len)) {
            if (is_member_bruteforce(w, set)) fresh.push_back(w);
        }
        set.members.insert(fresh.begin(), fresh.end());
    }
    return set;
}

GeneratedSet enumerate_nyldon(Alphabet alphabet, std::size_t max_len, const Budget& budget) {
    return enumerate_generated(lex_policy(), alphabet, max_len, budget);
}

bool is_member_bruteforce(const Word& w, const GeneratedSet& set) {
    check_query(w, "is_member_bruteforce");
    if (w.size() > set.max_len) {
        throw PreconditionError("is_member_bruteforce: word longer than the set's max_len");
    }
    if (w.size() == 1) return true;
    const OrderPolicy policy = policy_by_id(set.policy_id);
    const auto counted = count_factorizations(
        w, policy,
        [&](std::size_t start, std::size_t len) { return len < w.size() && set.contains(w.substr(start, len)); },
        /*allow_single=*/false);
    return counted.count == 0;
}

}  // namespace nyldon::oracle
