#include "nyldon/analysis.hpp"

#include <algorithm>
#include <bit>

#include "nyldon/fastfactor.hpp"
#include "nyldon/melancon.hpp"
#include "nyldon/policy.hpp"

namespace nyldon::analysis {
namespace {

long double ipow(long double base, std::size_t e) {
    long double r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Decodes `ordinal` as a base-|code| numeral of `blocks` digits.
std::vector<Word> nth_sequence(const std::vector<Word>& code, std::size_t blocks, std::uint64_t ordinal) {
    std::vector<Word> seq(blocks);
    for (std::size_t i = blocks; i-- > 0;) {
        seq[i] = code[ordinal % code.size()];
        ordinal /= code.size();
    }
    return seq;
}

// Smaller than every proper rotation; deliberately independent of Duval.
bool lyndon_by_rotation(LetterSpan w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = w[i], b = w[(i + r) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == n) return false;  // equal rotation: periodic
        }
    }
    return true;
}

}  // namespace

std::optional<std::vector<Word>> rotation_parse(const std::set<Word>& code, const std::vector<Word>& sequence,
                                                std::size_t offset) {
    if (sequence.empty()) return std::nullopt;
    const std::size_t ell = sequence.front().size();
    std::vector<Letter> s;
    for (const auto& c : sequence) s.insert(s.end(), c.letters().begin(), c.letters().end());
    if (ell == 0 || s.size() % ell != 0) return std::nullopt;
    std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(offset % s.size()), s.end());
    std::vector<Word> blocks;
    for (std::size_t i = 0; i < s.size(); i += ell) {
        Word b(sequence.front().alphabet(), std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                                                s.begin() + static_cast<std::ptrdiff_t>(i + ell)));
        if (!code.count(b)) return std::nullopt;
        blocks.push_back(std::move(b));
    }
    return blocks;
}

CircularCodeVerdict circular_code_check(const std::vector<Word>& code_in, std::size_t max_blocks,
                                        const Budget& budget, unsigned jobs) {
    CircularCodeVerdict v;
    const std::set<Word> code(code_in.begin(), code_in.end());
    v.code.assign(code.begin(), code.end());
    v.max_blocks = max_blocks;
    if (v.code.empty()) return v;
    v.word_length = v.code.front().size();
    if (v.word_length == 0) throw PreconditionError("circular_code_check: empty codeword");
    for (const auto& c : v.code) {
        if (c.size() != v.word_length) throw PreconditionError("circular_code_check: codewords of mixed lengths");
    }
    const std::size_t ell = v.word_length;
    const std::size_t size = v.code.size();
    long double total = 0;
    for (std::size_t b = 1; b <= max_blocks; ++b) total += ipow(static_cast<long double>(size), b);
    budget.require_items(total, "circular_code_check");

    for (std::size_t b = 1; b <= max_blocks; ++b) {
        budget.check_time();
        const std::uint64_t per_first = static_cast<std::uint64_t>(ipow(static_cast<long double>(size), b - 1));
        // first_hit[i] = (ordinal within the first-letter slice, offset)
        std::vector<std::optional<std::pair<std::uint64_t, std::size_t>>> first_hit(size);
        parallel_for(size, jobs, [&](std::size_t i) {
            for (std::uint64_t local = 0; local < per_first; ++local) {
                const auto seq = nth_sequence(v.code, b, i * per_first + local);
                for (std::size_t off = 1; off < b * ell; ++off) {
                    if (off % ell == 0) continue;
                    if (rotation_parse(code, seq, off)) {
                        first_hit[i] = {local, off};
                        return;
                    }
                }
            }
        });
        for (std::size_t i = 0; i < size; ++i) {
            if (!first_hit[i]) continue;
            const auto [local, off] = *first_hit[i];
            const std::uint64_t ordinal = i * per_first + local;
            v.sequences_checked += ordinal + 1;
            v.is_circular = false;
            CircularWitness w;
            w.sequence = nth_sequence(v.code, b, ordinal);
            w.offset = off;
            w.rotated_parse = *rotation_parse(code, w.sequence, off);
            v.witness = std::move(w);
            return v;
        }
        v.sequences_checked += per_first * size;
    }
    return v;
}

std::size_t floor_log2(std::size_t x) {
    if (x == 0) throw PreconditionError("floor_log2: zero");
    return static_cast<std::size_t>(std::bit_width(x)) - 1;
}

std::size_t default_scan_power(std::size_t max_len) { return floor_log2(max_len) + 3; }

PowerProfile power_profile(const Word& w, std::size_t k) {
    if (w.empty()) throw PreconditionError("power_profile: empty word");
    if (k == 0) throw PreconditionError("power_profile: k must be at least 1");
    if (!is_primitive(w)) throw NotPrimitiveError(to_string(primitive_root(w)));

    PowerProfile p;
    p.w = w;
    p.k = k;
    p.n = conjugate(w, lex_policy());
    p.bound = floor_log2(w.size()) + 1;
    const auto factors = nyldon_factorize(w.power(k)).factors;

    // Longest run of factors equal to n, first one on ties.
    std::size_t best_start = 0, best_len = 0;
    for (std::size_t i = 0; i < factors.size();) {
        if (factors[i] != p.n) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < factors.size() && factors[j] == p.n) ++j;
        if (j - i > best_len) {
            best_start = i;
            best_len = j - i;
        }
        i = j;
    }
    if (best_len == 0) {
        p.prefix_factors = factors;
    } else {
        p.prefix_factors.assign(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(best_start));
        p.suffix_factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(best_start + best_len), factors.end());
    }
    p.central_copies = best_len;
    p.K = k - best_len;
    p.within_bound = best_len == 0 || p.K <= p.bound;
    return p;
}

KBoundReport k_bound_scan(Alphabet alphabet, std::size_t max_len, std::size_t k, const Budget& budget, unsigned jobs,
                          bool keep_entries) {
    if (max_len == 0) throw PreconditionError("k_bound_scan: max_len must be at least 1");
    KBoundReport report;
    report.max_len = max_len;
    report.k = k == 0 ? default_scan_power(max_len) : k;
    budget.require_items(words_up_to(alphabet.size(), max_len) * 3, "k_bound_scan");

    std::vector<Word> words;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (auto& w : all_words(alphabet, len)) {
            if (is_primitive(w)) words.push_back(std::move(w));
        }
    }

    struct Outcome {
        KScanEntry entry;
        bool central = false;
        bool violation = false;
    };
    std::vector<Outcome> outcomes(words.size());
    parallel_for(words.size(), jobs, [&](std::size_t i) {
        if ((i & 1023) == 0) budget.check_time();
        const auto p0 = power_profile(words[i], report.k);
        const auto p1 = power_profile(words[i], report.k + 1);
        const auto p2 = power_profile(words[i], report.k + 2);
        Outcome& o = outcomes[i];
        o.entry.w = words[i];
        o.entry.K = p0.K;
        o.entry.central_copies = p0.central_copies;
        o.central = p0.central_copies > 0;
        o.violation = !p0.within_bound || !p1.within_bound || !p2.within_bound;
        o.entry.stable = o.central && p1.central_copies > 0 && p2.central_copies > 0 && p0.K == p1.K &&
                         p1.K == p2.K && p0.prefix_factors == p1.prefix_factors &&
                         p1.prefix_factors == p2.prefix_factors && p0.suffix_factors == p1.suffix_factors &&
                         p1.suffix_factors == p2.suffix_factors;
    });

    report.words_scanned = words.size();
    for (const auto& o : outcomes) {
        if (is_lyndon(o.entry.w)) ++report.classes;
        if (o.violation) {
            ++report.violations;
            report.violation_words.push_back(o.entry.w);
        }
        if (!o.central) {
            report.no_central.push_back(o.entry.w);
        } else {
            if (!o.entry.stable) report.unstable.push_back(o.entry.w);
            if (!report.max_K_witness || o.entry.K > report.max_K) {
                report.max_K = o.entry.K;
                report.max_K_witness = o.entry.w;
            }
        }
        if (keep_entries) report.entries.push_back(o.entry);
    }
    return report;
}

bool sn_ka_check(const Word& n, const Word& s, const Word& a, std::size_t k) {
    if (n.empty() || !is_nyldon(n)) throw PreconditionError("sn_ka_check: n must be a Nyldon word");
    if (s.empty() || s.size() > n.size() || s != n.substr(n.size() - s.size(), s.size())) {
        throw PreconditionError("sn_ka_check: s must be a nonempty suffix of n");
    }
    if (k >= 64 || (std::uint64_t{1} << k) <= n.size()) {
        throw PreconditionError("sn_ka_check: k must exceed log2 |n|");
    }
    const Word nk = n.power(k);
    if (is_nyldon(s + nk + a)) return false;
    const auto first = nyldon_factorize(nk + a).factors.front();
    return first.size() >= n.size() && first >= n;
}

bool below_lyndon_suffixes(const Word& w) {
    const auto letters = w.letters();
    for (std::size_t start = 1; start < w.size(); ++start) {
        const auto suffix = letters.subspan(start);
        if (lyndon_by_rotation(suffix) && lex_compare(letters, suffix) >= 0) return false;
    }
    return true;
}

LyndonSuffixReport lyndon_suffix_check(Alphabet alphabet, std::size_t max_len, const Budget& budget, unsigned jobs) {
    budget.require_items(words_up_to(alphabet.size(), max_len), "lyndon_suffix_check");
    LyndonSuffixReport report;
    for (std::size_t len = 1; len <= max_len && report.holds; ++len) {
        budget.check_time();
        const auto words = all_words(alphabet, len);
        std::vector<char> hypothesis(words.size()), lyndon(words.size());
        parallel_for(words.size(), jobs, [&](std::size_t i) {
            hypothesis[i] = below_lyndon_suffixes(words[i]);
            if (hypothesis[i]) lyndon[i] = duval_lyndon_factorization(words[i]).size() == 1;
        });
        for (std::size_t i = 0; i < words.size(); ++i) {
            ++report.words_checked;
            if (!hypothesis[i]) continue;
            ++report.hypothesis_count;
            if (!lyndon[i]) {
                report.holds = false;
                report.counterexample = words[i];
                break;
            }
        }
    }
    return report;
}

}  // namespace nyldon::analysis
