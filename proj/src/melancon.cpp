#include "nyldon/melancon.hpp"

#include <limits>
#include <queue>

#include "nyldon/fastfactor.hpp"

namespace nyldon {
namespace {

constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

// Block comparisons over the base word (doubled in circular mode), counted.
class BlockOrder {
public:
    BlockOrder(std::vector<Letter> base, const OrderPolicy& policy, bool use_engine, bool check_growth,
               MelanconStats& stats)
        : base_(std::move(base)), policy_(policy), check_growth_(check_growth), stats_(stats) {
        if (use_engine && policy.traits().lexicographic) engine_.emplace(LetterSpan(base_));
    }

    std::strong_ordering operator()(Range a, Range b) const {
        ++stats_.comparisons;
        if (engine_) return engine_->compare(a, b);
        const LetterSpan s(base_);
        return policy_.compare(s.subspan(a.start, a.len), s.subspan(b.start, b.len));
    }

    // Appends `tail` to `head`; both must be adjacent in the base word.
    Range contract(Range head, Range tail) const {
        ++stats_.contractions;
        const Range merged{head.start, head.len + tail.len};
        if (check_growth_ && !((*this)(merged, head) > 0 && (*this)(head, tail) > 0)) {
            throw PolicyViolationError("contraction of " + text(head) + " and " + text(tail) + " under policy '" +
                                       policy_.id() + "' does not satisfy fg > f > g");
        }
        return merged;
    }

    std::string text(Range r) const {
        return to_string(LetterSpan(base_).subspan(r.start, r.len), alphabet_);
    }
    Word word(Range r) const {
        return Word(alphabet_, std::vector<Letter>(base_.begin() + static_cast<std::ptrdiff_t>(r.start),
                                                   base_.begin() + static_cast<std::ptrdiff_t>(r.start + r.len)));
    }

    void set_alphabet(Alphabet a) { alphabet_ = a; }

private:
    std::vector<Letter> base_;
    const OrderPolicy& policy_;
    std::optional<ComparisonEngine> engine_;
    bool check_growth_;
    MelanconStats& stats_;
    Alphabet alphabet_{};
};

std::vector<Letter> base_for(const Word& w, ChainMode mode) {
    std::vector<Letter> base(w.letters().begin(), w.letters().end());
    if (mode == ChainMode::circular) base.insert(base.end(), w.letters().begin(), w.letters().end());
    return base;
}

std::vector<Word> words_of(const BlockOrder& order, const std::vector<Range>& ranges) {
    std::vector<Word> out;
    out.reserve(ranges.size());
    for (Range r : ranges) out.push_back(order.word(r));
    return out;
}

// Pass-by-pass contraction; `record` receives the chain after every pass.
template <class Record>
std::vector<Range> run_passes(const Word& w, ChainMode mode, const BlockOrder& order, Record&& record) {
    std::vector<Range> chain, emitted;
    for (std::size_t i = 0; i < w.size(); ++i) chain.push_back({i, 1});
    record(chain, emitted);

    while (mode == ChainMode::circular ? chain.size() > 1 : !chain.empty()) {
        Range least = chain.front();
        for (Range r : chain) {
            if (order(r, least) < 0) least = r;
        }
        std::vector<char> minimal(chain.size());
        for (std::size_t i = 0; i < chain.size(); ++i) minimal[i] = order(chain[i], least) == 0;

        std::vector<Range> next;
        if (mode == ChainMode::circular) {
            std::size_t first = 0;
            while (first < chain.size() && minimal[first]) ++first;
            if (first == chain.size()) {
                throw NotPrimitiveError(order.text(chain.front()));
            }
            for (std::size_t t = 0; t < chain.size(); ++t) {
                const std::size_t idx = (first + t) % chain.size();
                if (minimal[idx]) {
                    next.back() = order.contract(next.back(), chain[idx]);
                } else {
                    next.push_back(chain[idx]);
                }
            }
        } else {
            std::size_t head = 0;
            while (head < chain.size() && minimal[head]) emitted.push_back(chain[head++]);
            for (std::size_t idx = head; idx < chain.size(); ++idx) {
                if (minimal[idx]) {
                    next.back() = order.contract(next.back(), chain[idx]);
                } else {
                    next.push_back(chain[idx]);
                }
            }
        }
        chain = std::move(next);
        if (!chain.empty()) record(chain, emitted);
    }
    return mode == ChainMode::circular ? chain : emitted;
}

// Priority-queue contraction over a doubly linked chain of blocks. Each pop
// extracts the whole class of blocks equal to the current minimum; every
// maximal run of them is absorbed by the block to its left.
std::vector<Range> run_heap(const Word& w, ChainMode mode, const BlockOrder& order) {
    const std::size_t n = w.size();
    struct Node {
        Range range;
        std::size_t prev, next;
        std::uint32_t version = 0;
        bool alive = true;
    };
    std::vector<Node> nodes(n);
    for (std::size_t i = 0; i < n; ++i) {
        nodes[i].range = {i, 1};
        nodes[i].prev = i == 0 ? (mode == ChainMode::circular ? n - 1 : none) : i - 1;
        nodes[i].next = i + 1 == n ? (mode == ChainMode::circular ? 0 : none) : i + 1;
    }

    // Entries carry the range they were pushed with so that the heap order
    // never changes under a stale entry.
    struct Entry {
        std::size_t id;
        std::uint32_t version;
        Range range;
    };
    auto after = [&](const Entry& a, const Entry& b) {
        const auto c = order(a.range, b.range);
        return c != 0 ? c > 0 : a.id > b.id;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(after)> heap(after);
    for (std::size_t i = 0; i < n; ++i) heap.push({i, 0, nodes[i].range});
    auto stale = [&](const Entry& e) { return !nodes[e.id].alive || nodes[e.id].version != e.version; };

    auto unlink = [&](std::size_t id) {
        Node& node = nodes[id];
        node.alive = false;
        if (node.prev != none) nodes[node.prev].next = node.next;
        if (node.next != none) nodes[node.next].prev = node.prev;
    };

    std::vector<char> in_class(n, 0);
    std::vector<std::size_t> cls;
    std::vector<Range> emitted;
    std::size_t alive = n;
    std::size_t head = 0;

    while (mode == ChainMode::circular ? alive > 1 : head != none) {
        while (stale(heap.top())) heap.pop();
        const Entry top = heap.top();
        heap.pop();
        const Range least = nodes[top.id].range;
        cls.assign(1, top.id);
        while (!heap.empty()) {
            const Entry e = heap.top();
            if (stale(e)) {
                heap.pop();
                continue;
            }
            if (order(e.range, least) != 0) break;
            cls.push_back(e.id);
            heap.pop();
        }
        for (std::size_t id : cls) in_class[id] = 1;

        if (mode == ChainMode::circular && cls.size() == alive) {
            throw NotPrimitiveError(order.text(least));
        }
        if (mode == ChainMode::linear) {
            while (head != none && in_class[head]) {
                emitted.push_back(nodes[head].range);
                const std::size_t next = nodes[head].next;
                unlink(head);
                --alive;
                head = next;
            }
        }
        for (std::size_t id : cls) {
            if (!nodes[id].alive || nodes[id].prev == none || in_class[nodes[id].prev]) continue;
            const std::size_t leader = nodes[id].prev;
            std::size_t x = id;
            while (x != none && x != leader && in_class[x]) {
                nodes[leader].range = order.contract(nodes[leader].range, nodes[x].range);
                const std::size_t next = nodes[x].next;
                unlink(x);
                --alive;
                x = next;
            }
            ++nodes[leader].version;
            heap.push({leader, nodes[leader].version, nodes[leader].range});
        }
        for (std::size_t id : cls) in_class[id] = 0;
    }

    if (mode == ChainMode::linear) return emitted;
    for (const auto& node : nodes) {
        if (node.alive) return {node.range};
    }
    return {};
}

}  // namespace

MelanconResult melancon_run(const Word& w, const OrderPolicy& policy, ChainMode mode, const MelanconOptions& options) {
    if (w.empty()) throw PreconditionError("melancon: empty word");
    if (mode == ChainMode::circular && !is_primitive(w)) {
        throw NotPrimitiveError(to_string(primitive_root(w)));
    }
    MelanconResult result;
    const bool check = options.check_growth.value_or(policy.traits().prefix_increasing);
    BlockOrder order(base_for(w, mode), policy, options.use_engine, check, result.stats);
    order.set_alphabet(w.alphabet());

    const auto ranges = options.strategy == MelanconStrategy::heap
                            ? run_heap(w, mode, order)
                            : run_passes(w, mode, order, [](const auto&, const auto&) {});
    result.blocks = words_of(order, ranges);
    return result;
}

Word conjugate(const Word& w, const OrderPolicy& policy, const MelanconOptions& options) {
    return melancon_run(w, policy, ChainMode::circular, options).blocks.front();
}

Factorization factorize(const Word& w, const OrderPolicy& policy, const MelanconOptions& options) {
    Factorization out;
    out.order_id = policy.id();
    out.factors = melancon_run(w, policy, ChainMode::linear, options).blocks;
    return out;
}

std::vector<ChainSnapshot> contraction_trace(const Word& w, const OrderPolicy& policy, ChainMode mode) {
    if (w.empty()) throw PreconditionError("contraction_trace: empty word");
    if (mode == ChainMode::circular && !is_primitive(w)) {
        throw NotPrimitiveError(to_string(primitive_root(w)));
    }
    MelanconStats stats;
    BlockOrder order(base_for(w, mode), policy, true, policy.traits().prefix_increasing, stats);
    order.set_alphabet(w.alphabet());
    std::vector<ChainSnapshot> trace;
    run_passes(w, mode, order, [&](const std::vector<Range>& chain, const std::vector<Range>& emitted) {
        trace.push_back({words_of(order, chain), words_of(order, emitted)});
    });
    return trace;
}

}  // namespace nyldon
