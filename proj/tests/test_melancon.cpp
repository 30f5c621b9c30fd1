#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nyldon/fastfactor.hpp"
#include "nyldon/melancon.hpp"
#include "nyldon/oracle.hpp"

using namespace nyldon;

namespace {

std::vector<std::vector<std::string>> block_texts(const std::vector<ChainSnapshot>& trace) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : trace) out.push_back(testing::texts(s.blocks));
    return out;
}

// One contraction at a time in random order: any minimal block whose left
// neighbour differs from it is appended to that neighbour.
Word random_order_conjugate(const Word& w, const OrderPolicy& p, std::mt19937_64& rng) {
    std::vector<Word> ring;
    for (std::size_t i = 0; i < w.size(); ++i) ring.push_back(w.substr(i, 1));
    while (ring.size() > 1) {
        Word least = ring.front();
        for (const auto& b : ring) {
            if (p.compare(b, least) < 0) least = b;
        }
        std::vector<std::size_t> movable;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const std::size_t left = (i + ring.size() - 1) % ring.size();
            if (ring[i] == least && ring[left] != least) movable.push_back(i);
        }
        REQUIRE_FALSE(movable.empty());
        const std::size_t i = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
        const std::size_t left = (i + ring.size() - 1) % ring.size();
        ring[left] = ring[left] + ring[i];
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return ring.front();
}

}  // namespace

TEST_SUITE("melancon") {
    TEST_CASE("conjugate pass list") {
        const auto trace = contraction_trace(binary("10001011010101"), lex_policy(), ChainMode::circular);
        const std::vector<std::vector<std::string>> expected = {
            {"1", "0", "0", "0", "1", "0", "1", "1", "0", "1", "0", "1", "0", "1"},
            {"1000", "10", "1", "10", "10", "10", "1"},
            {"1000", "101", "10", "10", "101"},
            {"1000", "1011010", "101"},
            {"1011010", "1011000"},
            {"10110101011000"},
        };
        CHECK(block_texts(trace) == expected);
        CHECK(to_string(conjugate(binary("10001011010101"), lex_policy())) == "10110101011000");
    }

    TEST_CASE("factorization pass list") {
        const auto trace = contraction_trace(binary("10001011010101"), lex_policy(), ChainMode::linear);
        REQUIRE(trace.size() == 6);
        CHECK(testing::texts(trace[4].blocks) == std::vector<std::string>{"1011010", "101"});
        CHECK(testing::texts(trace[4].emitted) == std::vector<std::string>{"1000"});
        CHECK(testing::texts(trace[5].blocks) == std::vector<std::string>{"1011010101"});
        const auto f = factorize(binary("10001011010101"), lex_policy());
        CHECK(to_string(f) == "1000 1011010101");
    }

    TEST_CASE("periodic words") {
        for (auto strategy : {MelanconStrategy::heap, MelanconStrategy::passes}) {
            MelanconOptions o;
            o.strategy = strategy;
            try {
                conjugate(binary("1010"), lex_policy(), o);
                FAIL("expected NotPrimitiveError");
            } catch (const NotPrimitiveError& e) {
                CHECK(e.root() == "10");
                CHECK(std::string(e.what()) == "word is periodic (period 10)");
            }
        }
        CHECK_THROWS_AS(contraction_trace(binary("000"), lex_policy(), ChainMode::circular), NotPrimitiveError);
        // linear mode accepts periodic words
        CHECK(testing::texts(factorize(binary("1010"), lex_policy()).factors) ==
              std::vector<std::string>{"10", "10"});
    }

    TEST_CASE("single letters") {
        CHECK(conjugate(binary("1"), lex_policy()) == binary("1"));
        CHECK(factorize(binary("0"), lex_policy()).size() == 1);
    }

    TEST_CASE("heap and passes agree with Algorithm 2 and the oracle") {
        MelanconOptions passes;
        passes.strategy = MelanconStrategy::passes;
        MelanconOptions plain;
        plain.use_engine = false;
        for (const auto& w : testing::words_up_to(Alphabet(2), 11)) {
            const auto fast = nyldon_factorize(w);
            CHECK(factorize(w, lex_policy()).factors == fast.factors);
            CHECK(factorize(w, lex_policy(), passes).factors == fast.factors);
            CHECK(factorize(w, lex_policy(), plain).factors == fast.factors);
            if (is_primitive(w)) {
                const Word n = conjugate(w, lex_policy());
                CHECK(n == conjugate(w, lex_policy(), passes));
                CHECK(is_nyldon(n));
            }
        }
    }

    TEST_CASE("conjugate is invariant under rotation") {
        for (const auto& w : testing::words_up_to(Alphabet(3), 6)) {
            if (!is_primitive(w)) continue;
            const Word n = conjugate(w, lex_policy());
            for (const auto& r : conjugates(w)) CHECK(conjugate(r, lex_policy()) == n);
        }
    }

    TEST_CASE("randomized contraction order reaches the same conjugate") {
        std::mt19937_64 rng(2024);
        for (const auto& id : policy_ids()) {
            const auto p = policy_by_id(id);
            for (const auto& w : testing::words_up_to(Alphabet(2), 10)) {
                if (!is_primitive(w)) continue;
                CHECK_MESSAGE(random_order_conjugate(w, p, rng) == conjugate(w, p), id << " " << to_string(w));
            }
        }
    }

    TEST_CASE("non-lex policies agree with their brute-force sets") {
        for (const auto& id : policy_ids()) {
            const auto p = policy_by_id(id);
            for (const auto& w : testing::words_up_to(Alphabet(2), 8)) {
                CHECK_MESSAGE(factorize(w, p) == oracle::g_factorization_bruteforce(w, p), id << " " << to_string(w));
            }
        }
    }

    TEST_CASE("growth check: fg > f > g on every contraction") {
        MelanconOptions o;
        o.check_growth = true;
        for (const char* id : {"lex", "revalpha", "deglex"}) {
            for (const auto& w : testing::words_up_to(Alphabet(2), 10)) {
                CHECK_NOTHROW(factorize(w, policy_by_id(id), o));
            }
        }
        // Lyndon contractions append larger blocks: g > f under lex
        CHECK_THROWS_AS(factorize(binary("011"), lyndon_policy(), o), PolicyViolationError);
    }

    TEST_CASE("stats") {
        const auto r = melancon_run(binary("10001011010101"), lex_policy(), ChainMode::circular);
        CHECK(r.stats.contractions == 13);
        CHECK(r.stats.comparisons > 0);
        CHECK_THROWS_AS(melancon_run(Word(Alphabet(2), {}), lex_policy(), ChainMode::linear), PreconditionError);
    }
}
