#include "nyldon/fastfactor.hpp"

#include <algorithm>
#include <optional>

namespace nyldon {
namespace {

// Prefix doubling with a stable counting sort per round; stops as soon as
// all ranks are distinct.
std::vector<std::size_t> build_suffix_array(LetterSpan s, std::vector<std::size_t>& rank) {
    const std::size_t n = s.size();
    std::vector<std::size_t> sa(n), order(n), next_rank(n), count(n + 1);
    rank.assign(n, 0);
    if (n == 0) return sa;

    std::vector<Letter> letters(s.begin(), s.end());
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<std::size_t>(std::lower_bound(letters.begin(), letters.end(), s[i]) - letters.begin());
    }

    auto sort_by_rank = [&](const std::vector<std::size_t>& in, std::vector<std::size_t>& out) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i : in) ++count[rank[i] + 1];
        for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
        for (std::size_t i : in) out[count[rank[i]]++] = i;
    };

    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    sort_by_rank(order, sa);
    std::size_t classes = letters.size();

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // Order by the second half first: suffixes shorter than k + 1 have
        // an empty second half and come first.
        std::size_t p = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i) order[p++] = i;
        for (std::size_t i : sa) {
            if (i >= k) order[p++] = i - k;
        }
        sort_by_rank(order, sa);

        auto second = [&](std::size_t i) { return i + k < n ? rank[i + k] + 1 : 0; };
        next_rank[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            const std::size_t a = sa[i - 1], b = sa[i];
            const bool same = rank[a] == rank[b] && second(a) == second(b);
            next_rank[b] = next_rank[a] + (same ? 0 : 1);
        }
        rank.swap(next_rank);
        classes = rank[sa[n - 1]] + 1;
    }
    return sa;
}

}  // namespace

ComparisonEngine::ComparisonEngine(LetterSpan base) : base_(base.begin(), base.end()) {
    const std::size_t n = base_.size();
    sa_ = build_suffix_array(base_, rank_);

    // Kasai et al.
    lcp_.assign(n, 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa_[rank_[i] - 1];
        while (i + h < n && j + h < n && base_[i + h] == base_[j + h]) ++h;
        lcp_[rank_[i]] = h;
        if (h > 0) --h;
    }

    log2_.assign(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
    sparse_.clear();
    sparse_.push_back(lcp_);
    for (std::size_t level = 1; (std::size_t{1} << level) <= n; ++level) {
        const auto& prev = sparse_.back();
        const std::size_t half = std::size_t{1} << (level - 1);
        std::vector<std::size_t> row(n - (std::size_t{1} << level) + 1);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::min(prev[i], prev[i + half]);
        sparse_.push_back(std::move(row));
    }
}

std::size_t ComparisonEngine::range_min(std::size_t lo, std::size_t hi) const {
    const unsigned level = log2_[hi - lo + 1];
    return std::min(sparse_[level][lo], sparse_[level][hi + 1 - (std::size_t{1} << level)]);
}

std::size_t ComparisonEngine::lcp_of_suffixes(std::size_t a, std::size_t b) const {
    if (a == b) return base_.size() - a;
    const std::size_t ra = rank_[a], rb = rank_[b];
    return range_min(std::min(ra, rb) + 1, std::max(ra, rb));
}

std::strong_ordering ComparisonEngine::compare(Range a, Range b) const {
    const std::size_t common = std::min(a.len, b.len);
    const std::size_t l = lcp_of_suffixes(a.start, b.start);
    if (l >= common) return a.len <=> b.len;
    return base_[a.start + l] <=> base_[b.start + l];
}

FastFactorResult nyldon_factorize_counted(const Word& w, CompareMode mode) {
    if (w.empty()) throw PreconditionError("nyldon_factorize: empty word");
    const auto s = w.letters();
    std::optional<ComparisonEngine> engine;
    if (mode == CompareMode::engine) engine.emplace(s);
    auto greater = [&](Range a, Range b) {
        if (engine) return engine->compare(a, b) > 0;
        return lex_compare(s.subspan(a.start, a.len), s.subspan(b.start, b.len)) > 0;
    };

    FastFactorResult out;
    // Back of the vector is the leftmost factor.
    std::vector<Range> stack;
    for (std::size_t i = s.size(); i-- > 0;) {
        stack.push_back({i, 1});
        while (stack.size() >= 2) {
            ++out.comparisons;
            const Range first = stack[stack.size() - 1];
            const Range second = stack[stack.size() - 2];
            if (!greater(first, second)) break;
            stack.pop_back();
            stack.back() = {first.start, first.len + second.len};
        }
    }
    out.factorization.order_id = "lex";
    out.factorization.factors.reserve(stack.size());
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        out.factorization.factors.push_back(w.substr(it->start, it->len));
    }
    return out;
}

Factorization nyldon_factorize(const Word& w, CompareMode mode) {
    return nyldon_factorize_counted(w, mode).factorization;
}

bool is_nyldon(const Word& w) { return nyldon_factorize(w).size() == 1; }

}  // namespace nyldon
