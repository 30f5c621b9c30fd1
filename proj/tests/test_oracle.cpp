#include <doctest.h>

#include "helpers.hpp"
#include "nyldon/oracle.hpp"

using namespace nyldon;
using namespace nyldon::oracle;

namespace {

// Table 1 of the literature, listed by length.
const std::vector<std::string> table1 = {
    "0",       "1",       "10",      "100",     "101",     "1000",    "1001",    "1011",    "10000",
    "10001",   "10010",   "10011",   "10110",   "10111",   "100000",  "100001",  "100010",  "100011",
    "100110",  "100111",  "101100",  "101110",  "101111",  "1000000", "1000001", "1000010", "1000011",
    "1000100", "1000110", "1000111", "1001010", "1001100", "1001110", "1001111", "1011000", "1011001",
    "1011010", "1011100", "1011101", "1011110", "1011111"};

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("Table 1") {
        const auto set = enumerate_nyldon(Alphabet(2), 7);
        std::vector<std::string> got;
        for (std::size_t len = 1; len <= 7; ++len) {
            for (const auto& w : set.of_length(len)) got.push_back(to_string(w));
        }
        CHECK(got == table1);
        CHECK(set.counts_by_length() == std::vector<std::size_t>{0, 2, 1, 2, 3, 6, 9, 18});
    }

    TEST_CASE("membership by definition") {
        CHECK(is_nyldon_bruteforce(binary("0")));
        CHECK(is_nyldon_bruteforce(binary("10")));
        CHECK_FALSE(is_nyldon_bruteforce(binary("01")));
        CHECK_FALSE(is_nyldon_bruteforce(binary("1010")));
        CHECK(is_nyldon_bruteforce(binary("10110101011000")));
        CHECK_FALSE(is_nyldon_bruteforce(binary("10001011010101")));
    }

    TEST_CASE("brute-force Lyndon agrees with Duval") {
        for (const auto& w : testing::words_up_to(Alphabet(2), 10)) {
            CHECK_MESSAGE(is_lyndon_bruteforce(w) == is_lyndon(w), to_string(w));
        }
        for (const auto& w : testing::words_up_to(Alphabet(3), 6)) {
            CHECK_MESSAGE(is_lyndon_bruteforce(w) == is_lyndon(w), to_string(w));
        }
    }

    TEST_CASE("factorization counting") {
        const auto lex = lex_policy();
        const Word w = binary("0000");
        auto any = [](std::size_t, std::size_t) { return true; };
        // 0^a <= 0^b iff a <= b, so these are the partitions of 4
        CHECK(count_factorizations(w, lex, any).count == 5);
        CHECK(count_factorizations(w, lex, any, false).count == 4);
        auto letters = [](std::size_t, std::size_t len) { return len == 1; };
        const auto one = count_factorizations(binary("0110"), lex, letters);
        CHECK(one.count == 0);
        const auto ex = count_factorizations(binary("0011"), lex, letters);
        CHECK(ex.count == 1);
        CHECK(ex.example.size() == 4);
    }

    TEST_CASE("unique factorization example") {
        const auto f = nyldon_factorization_bruteforce(binary("10001011010101"));
        CHECK(testing::texts(f.factors) == std::vector<std::string>{"1000", "1011010101"});
        CHECK(f.order_id == "lex");
        const auto g = nyldon_factorization_bruteforce(binary("0101"));
        CHECK(testing::texts(g.factors) == std::vector<std::string>{"0", "101"});
    }

    TEST_CASE("unique factorization for every short word") {
        for (const auto& w : testing::words_up_to(Alphabet(2), 9)) {
            const auto f = nyldon_factorization_bruteforce(w);
            CHECK(f.concatenation() == w);
            for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f.factors[i] <= f.factors[i + 1]);
        }
    }

    TEST_CASE("necklace counts") {
        // Binary Lyndon (and Nyldon) words per length: (1/n) sum mu(d) 2^{n/d}
        const std::vector<std::size_t> necklaces{0, 2, 1, 2, 3, 6, 9, 18, 30, 56, 99};
        const auto set = enumerate_nyldon(Alphabet(2), 10);
        CHECK(set.counts_by_length() == necklaces);
        const auto ternary = enumerate_nyldon(Alphabet(3), 5);
        CHECK(ternary.counts_by_length() == std::vector<std::size_t>{0, 3, 3, 8, 18, 48});
    }

    TEST_CASE("generated set text round trip") {
        const auto set = enumerate_generated(deglex_policy(), Alphabet(3), 4);
        const auto text = set.to_text();
        const auto back = GeneratedSet::from_text(text);
        CHECK(back.members == set.members);
        CHECK(back.policy_id == "deglex");
        CHECK(back.max_len == 4);
        CHECK(back.alphabet == Alphabet(3));
        CHECK(back.to_text() == text);
        CHECK_THROWS_AS(GeneratedSet::from_text(""), PreconditionError);
    }

    TEST_CASE("budget guard") {
        CHECK_THROWS_AS(enumerate_nyldon(Alphabet(2), 20, Budget(1000)), BudgetExceededError);
    }

    TEST_CASE("member test against a set") {
        const auto set = enumerate_nyldon(Alphabet(2), 7);
        CHECK(is_member_bruteforce(binary("1011010"), set));
        CHECK_FALSE(is_member_bruteforce(binary("0111111"), set));
    }
}
