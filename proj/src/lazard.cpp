#include "nyldon/lazard.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nyldon::lazard {
namespace {

Word letter_word(Alphabet alphabet, Letter a) { return Word(alphabet, {a}); }

std::set<Word> letters_of(Alphabet alphabet) {
    std::set<Word> out;
    for (Letter a = 0; a < alphabet.size(); ++a) out.insert(letter_word(alphabet, a));
    return out;
}

// (Y \ {u}) u^*, keeping lengths <= limit.
std::set<Word> eliminate(const std::set<Word>& y, const Word& u, std::size_t limit) {
    std::set<Word> out;
    for (const auto& x : y) {
        if (x == u) continue;
        Word cur = x;
        out.insert(cur);
        while (cur.size() + u.size() <= limit) {
            cur = cur + u;
            out.insert(cur);
        }
    }
    return out;
}

}  // namespace

const Word& LazardState::choice() const {
    if (current.empty()) throw PreconditionError("lazard: the procedure has finished");
    return *current.begin();
}

LazardProcedure::LazardProcedure(Alphabet alphabet, std::size_t n) : alphabet_(alphabet), n_(n), buckets_(n + 1) {
    if (n == 0) throw PreconditionError("lazard: n must be at least 1");
    buckets_[1] = letters_of(alphabet);
    size_ = alphabet.size();
}

const Word& LazardProcedure::next_choice() const {
    const Word* best = nullptr;
    for (const auto& bucket : buckets_) {
        if (!bucket.empty() && (best == nullptr || *bucket.begin() < *best)) best = &*bucket.begin();
    }
    if (best == nullptr) throw PreconditionError("lazard: the procedure has finished");
    return *best;
}

Word LazardProcedure::advance() {
    Word u = next_choice();
    buckets_[u.size()].erase(u);
    --size_;
    // Only x with |x| + |u| <= n gain new words.
    std::vector<Word> fresh;
    for (std::size_t len = 1; len + u.size() <= n_; ++len) {
        for (const auto& x : buckets_[len]) {
            Word cur = x;
            while (cur.size() + u.size() <= n_) {
                cur = cur + u;
                fresh.push_back(cur);
            }
        }
    }
    for (auto& w : fresh) {
        if (buckets_[w.size()].insert(std::move(w)).second) ++size_;
    }
    chosen_.push_back(u);
    ++step_;
    return u;
}

LazardState LazardProcedure::snapshot() const {
    LazardState s{alphabet_, n_, step_, chosen_, {}};
    for (const auto& bucket : buckets_) s.current.insert(bucket.begin(), bucket.end());
    return s;
}

std::vector<LazardState> lazard_run(Alphabet alphabet, std::size_t n, const Budget& budget) {
    budget.require_items(words_up_to(alphabet.size(), n), "lazard_run");
    LazardProcedure proc(alphabet, n);
    std::vector<LazardState> trace;
    std::uint64_t stored = 0;
    while (true) {
        budget.check_time();
        trace.push_back(proc.snapshot());
        stored += trace.back().current.size() + trace.back().chosen.size();
        budget.require_items(static_cast<long double>(stored), "lazard_run trace");
        if (proc.done()) break;
        proc.advance();
    }
    return trace;
}

LazardReport finishing_step(const std::vector<LazardState>& trace) {
    if (trace.empty() || !trace.back().done()) throw PreconditionError("finishing_step: incomplete trace");
    const auto& all = trace.back().chosen;
    const std::set<Word> target(all.begin(), all.end());

    LazardReport report;
    report.n = trace.front().n;
    report.total_steps = all.size();
    for (const auto& state : trace) {
        std::set<Word> covered(state.chosen.begin(), state.chosen.end());
        covered.insert(state.current.begin(), state.current.end());
        if (std::includes(covered.begin(), covered.end(), target.begin(), target.end())) {
            report.finishing_step = state.step;
            break;
        }
    }
    if (report.finishing_step > 1) report.stop_word = all[report.finishing_step - 2];
    report.words_after_stop = report.total_steps - (report.finishing_step - 1);
    return report;
}

LazardReport lazard_report(Alphabet alphabet, std::size_t n, const Budget& budget) {
    budget.require_items(words_up_to(alphabet.size(), n), "lazard_report");
    LazardProcedure proc(alphabet, n);
    // sizes[i - 1] = |Y_i of length <= n|
    std::vector<std::size_t> sizes;
    while (!proc.done()) {
        sizes.push_back(proc.current_size());
        proc.advance();
        if ((proc.step() & 255) == 0) budget.check_time();
    }
    LazardReport report;
    report.n = n;
    report.total_steps = proc.chosen().size();
    for (std::size_t i = 1; i <= sizes.size(); ++i) {
        if ((i - 1) + sizes[i - 1] == report.total_steps) {
            report.finishing_step = i;
            break;
        }
    }
    if (report.finishing_step > 1) report.stop_word = proc.chosen()[report.finishing_step - 2];
    report.words_after_stop = report.total_steps - (report.finishing_step - 1);
    return report;
}

Word predicted_stop_word(Alphabet alphabet, std::size_t ell) {
    if (ell < 5) throw PreconditionError("predicted_stop_word: length must be at least 5");
    const Letter m = alphabet.max_letter();
    std::vector<Letter> letters{m, m - 1};
    if (ell % 2 == 1) {
        letters.insert(letters.end(), (ell - 5) / 2, m);
    } else {
        letters.insert(letters.end(), (ell - 6) / 2, m);
        letters.push_back(m - 1);
    }
    return Word(alphabet, std::move(letters));
}

BigInt count_words_after_stop(Alphabet alphabet, std::size_t ell) {
    const BigInt a = alphabet.size();
    const std::size_t half = ell / 2;
    if (ell % 2 == 1) {
        if (half < 7) {
            throw PreconditionError("count_words_after_stop: odd lengths need l >= 15; use lazard_report to measure");
        }
        const BigInt top = boost::multiprecision::pow(a, static_cast<unsigned>(half + 2));
        return (top - a) / (a - 1) - (a * a * a + a * a + 2 * a + 2);
    }
    if (half < 9) {
        throw PreconditionError("count_words_after_stop: even lengths need l >= 18; use lazard_report to measure");
    }
    const BigInt top = boost::multiprecision::pow(a, static_cast<unsigned>(half));
    return (top - a) / (a - 1) - (a * a * a * a + a * a * a + a * a + a + 3);
}

std::vector<BigInt> length_counts(const LazardState& state, std::size_t L) {
    std::vector<BigInt> c(L + 1);
    if (L >= 1) c[1] = state.alphabet.size();
    for (const auto& u : state.chosen) {
        const std::size_t k = u.size();
        if (k > L) throw PreconditionError("length_counts: L is shorter than a chosen word");
        if (c[k] == 0) throw std::logic_error("length_counts: chosen word missing from Y");
        c[k] -= 1;
        // c'[l] = sum_{j >= 0} c[l - j k]
        for (std::size_t l = k + 1; l <= L; ++l) c[l] += c[l - k];
    }
    return c;
}

Rational kraft_sum(const LazardState& state, std::size_t L) {
    const auto c = length_counts(state, L);
    const BigInt a = state.alphabet.size();
    Rational sum = 0;
    BigInt denom = 1;
    for (std::size_t l = 1; l <= L; ++l) {
        denom *= a;
        sum += Rational(c[l], denom);
    }
    return sum;
}

std::set<Word> materialize(const LazardState& state, std::size_t L, const Budget& budget) {
    budget.require_items(words_up_to(state.alphabet.size(), L), "materialize");
    std::set<Word> y = letters_of(state.alphabet);
    for (const auto& u : state.chosen) {
        if (!y.count(u)) throw std::logic_error("materialize: chosen word missing from Y");
        y = eliminate(y, u, L);
    }
    return y;
}

CodeCheck code_check(const std::vector<Word>& code, std::size_t L, const Budget& budget) {
    CodeCheck out;
    // parses[l] maps each word of length l in code^* to its number of parses.
    std::vector<std::map<Word, std::uint64_t>> parses(L + 1);
    parses[0][Word(code.empty() ? Alphabet{} : code.front().alphabet(), {})] = 1;
    std::uint64_t entries = 1;
    for (std::size_t l = 1; l <= L; ++l) {
        budget.check_time();
        for (const auto& c : code) {
            if (c.empty()) {
                // The empty word makes every parse ambiguous.
                out.uniquely_decodable = false;
                out.witness = c;
                return out;
            }
            if (c.size() > l) continue;
            for (const auto& [prefix, ways] : parses[l - c.size()]) {
                auto& slot = parses[l][prefix + c];
                if (slot == 0) ++entries;
                slot += ways;
            }
        }
        budget.require_items(static_cast<long double>(entries), "code_check");
        for (const auto& [w, ways] : parses[l]) {
            if (ways > 1) {
                out.uniquely_decodable = false;
                out.witness = w;
                return out;
            }
        }
    }
    return out;
}

CodeCheck lazard_code_check(const LazardState& state, std::size_t L, const Budget& budget) {
    const auto y = materialize(state, L, budget);
    return code_check(std::vector<Word>(y.begin(), y.end()), L, budget);
}

}  // namespace nyldon::lazard
