#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nyldon/fastfactor.hpp"
#include "nyldon/oracle.hpp"

using namespace nyldon;

namespace {

Word random_word(std::mt19937_64& rng, Alphabet a, std::size_t len) {
    std::uniform_int_distribution<Letter> letter(0, a.max_letter());
    std::vector<Letter> letters(len);
    for (auto& x : letters) x = letter(rng);
    return Word(a, std::move(letters));
}

}  // namespace

TEST_SUITE("fastfactor") {
    TEST_CASE("suffix array and LCP of a small word") {
        // "banana" with a=0, b=1, n=2
        const Word w(Alphabet(3), {1, 0, 2, 0, 2, 0});
        const ComparisonEngine e(w);
        CHECK(e.suffix_array() == std::vector<std::size_t>{5, 3, 1, 0, 4, 2});
        CHECK(e.lcp() == std::vector<std::size_t>{0, 1, 3, 0, 0, 2});
        CHECK(e.lcp_of_suffixes(1, 3) == 3);
        CHECK(e.lcp_of_suffixes(0, 2) == 0);
        CHECK(e.lcp_of_suffixes(2, 2) == 4);
    }

    TEST_CASE("suffix array on a unary word") {
        const ComparisonEngine e(binary("0000"));
        CHECK(e.suffix_array() == std::vector<std::size_t>{3, 2, 1, 0});
        CHECK(e.compare({0, 2}, {2, 2}) == 0);
        CHECK(e.compare({0, 3}, {1, 2}) > 0);
    }

    TEST_CASE("engine comparisons agree with plain lex") {
        std::mt19937_64 rng(7);
        for (int round = 0; round < 40; ++round) {
            const Word w = random_word(rng, Alphabet(2 + round % 3), 1 + round * 7);
            const ComparisonEngine e(w);
            std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
            for (int q = 0; q < 200; ++q) {
                const std::size_t a = pos(rng), b = pos(rng);
                const Range ra{a, 1 + pos(rng) % (w.size() - a)};
                const Range rb{b, 1 + pos(rng) % (w.size() - b)};
                const auto expect = lex_compare(w.letters().subspan(ra.start, ra.len), w.letters().subspan(rb.start, rb.len));
                CHECK(e.compare(ra, rb) == expect);
            }
        }
    }

    TEST_CASE("worked factorization") {
        const auto f = nyldon_factorize(binary("10001011010101"));
        CHECK(testing::texts(f.factors) == std::vector<std::string>{"1000", "1011010101"});
        CHECK(is_nyldon(binary("10110101011000")));
        CHECK_FALSE(is_nyldon(binary("1010")));
        CHECK(nyldon_factorize(binary("1")).size() == 1);
        CHECK_THROWS_AS(nyldon_factorize(Word(Alphabet(2), {})), PreconditionError);
    }

    TEST_CASE("matches the brute-force oracle") {
        for (const auto& w : testing::words_up_to(Alphabet(2), 11)) {
            CHECK(nyldon_factorize(w) == oracle::nyldon_factorization_bruteforce(w));
        }
        for (const auto& w : testing::words_up_to(Alphabet(4), 5)) {
            CHECK(nyldon_factorize(w) == oracle::nyldon_factorization_bruteforce(w));
        }
    }

    TEST_CASE("both comparison modes give identical runs") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const Word w = random_word(rng, Alphabet(2 + i % 2), 1 + i * 5);
            const auto a = nyldon_factorize_counted(w, CompareMode::engine);
            const auto b = nyldon_factorize_counted(w, CompareMode::naive);
            CHECK(a.factorization == b.factorization);
            CHECK(a.comparisons == b.comparisons);
        }
    }

    TEST_CASE("at most 2|w| - 1 comparisons") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            const std::size_t len = 1 + (i * 37) % 2000;
            const Word w = random_word(rng, Alphabet(2 + i % 3), len);
            CHECK(nyldon_factorize_counted(w, CompareMode::naive).comparisons <= 2 * len - 1);
        }
        // adversarial shapes: powers, long runs, the worked example repeated
        for (const char* d : {"0", "1", "10", "01", "110", "10001011010101"}) {
            for (std::size_t k : {1u, 7u, 100u}) {
                const Word w = binary(d).power(k);
                CHECK(nyldon_factorize_counted(w).comparisons <= 2 * w.size() - 1);
            }
        }
    }
}
