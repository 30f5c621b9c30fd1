#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nyldon/policy.hpp"

using namespace nyldon;

TEST_SUITE("core") {
    TEST_CASE("word text syntax") {
        CHECK(to_string(binary("10110")) == "10110");
        const Alphabet big(12);
        const Word w = parse_word("3,0,11,2", big);
        CHECK(w.size() == 4);
        CHECK(w[2] == 11);
        CHECK(to_string(w) == "3,0,11,2");
        CHECK(parse_word(to_string(w), big) == w);
        CHECK(to_string(parse_word("2012", Alphabet(3))) == "2012");
        CHECK_THROWS_AS(parse_word("102", Alphabet(2)), PreconditionError);
        CHECK_THROWS_AS(parse_word("1x", Alphabet(2)), PreconditionError);
        CHECK_THROWS_AS(Alphabet(1), PreconditionError);
    }

    TEST_CASE("lexicographic order: proper prefix is smaller") {
        CHECK(binary("10") < binary("100"));
        CHECK(binary("100") < binary("101"));
        CHECK(binary("1") > binary("0111"));
        CHECK(lex_compare(binary("10"), binary("10")) == 0);
        CHECK_THROWS_AS(lex_compare(binary("0"), parse_word("0", Alphabet(3))), PreconditionError);
    }

    TEST_CASE("substr, power, rotate, concatenation") {
        const Word w = binary("10010");
        CHECK(w.substr(1, 3) == binary("001"));
        CHECK(binary("10").power(3) == binary("101010"));
        CHECK(w.rotate(2) == binary("01010"));
        CHECK(w.rotate(0) == w);
        CHECK(binary("10") + binary("0") == binary("100"));
        CHECK(conjugates(binary("100")) == testing::words({"100", "001", "010"}));
    }

    TEST_CASE("periodicity") {
        CHECK(min_period(binary("1010").letters()) == 2);
        CHECK(min_period(binary("10101").letters()) == 2);
        CHECK(primitive_root(binary("101010")) == binary("10"));
        CHECK(primitive_root(binary("10101")) == binary("10101"));
        CHECK_FALSE(is_primitive(binary("1010")));
        CHECK_FALSE(is_primitive(binary("00")));
        CHECK(is_primitive(binary("0")));
        CHECK(is_primitive(binary("1011")));
    }

    TEST_CASE("Duval factorization") {
        CHECK(duval_lyndon_factorization(binary("0011")).size() == 1);
        const auto f = duval_lyndon_factorization(binary("10"));
        CHECK(testing::texts(f.factors) == std::vector<std::string>{"1", "0"});
        CHECK(f.monotonicity == Monotonicity::nonincreasing);
        CHECK(testing::texts(duval_lyndon_factorization(binary("0101001")).factors) ==
              std::vector<std::string>{"01", "01", "001"});
        CHECK(is_lyndon(binary("001011")));
        CHECK_FALSE(is_lyndon(binary("0101")));
    }

    TEST_CASE("Lyndon words by rotation agree with Duval") {
        for (const auto& w : testing::words_up_to(Alphabet(3), 7)) {
            bool smallest = true;
            for (std::size_t r = 1; r < w.size(); ++r) smallest = smallest && w < w.rotate(r);
            CHECK_MESSAGE(is_lyndon(w) == smallest, to_string(w));
        }
    }

    TEST_CASE("all_words is lexicographic and complete") {
        const auto ws = all_words(Alphabet(3), 4);
        CHECK(ws.size() == 81);
        CHECK(std::is_sorted(ws.begin(), ws.end()));
        CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
    }

    TEST_CASE("factorization rendering") {
        Factorization f{testing::words({"1000", "1011010101"})};
        CHECK(to_string(f) == "1000 1011010101");
        CHECK(to_string(f, ", ") == "1000, 1011010101");
        CHECK(f.concatenation() == binary("10001011010101"));
    }

    TEST_CASE("policies") {
        const auto lex = lex_policy();
        const auto rev = reversed_alphabet_policy();
        const auto deg = deglex_policy();
        const auto lyn = lyndon_policy();
        CHECK(lex.compare(binary("0"), binary("1")) < 0);
        CHECK(rev.compare(binary("1"), binary("0")) < 0);
        CHECK(rev.compare(binary("1"), binary("10")) < 0);
        CHECK(deg.compare(binary("1"), binary("00")) < 0);
        CHECK(deg.compare(binary("01"), binary("10")) < 0);
        CHECK(lyn.compare(binary("1"), binary("0")) < 0);
        CHECK(lyn.compare(binary("10"), binary("1")) < 0);
        CHECK(lex.traits().lexicographic);
        CHECK_FALSE(lyn.traits().prefix_increasing);
        CHECK(find_policy("deglex").has_value());
        CHECK_FALSE(find_policy("nope").has_value());
        CHECK_THROWS_AS(policy_by_id("nope"), PreconditionError);
    }

    TEST_CASE("policies are total orders") {
        const auto ws = testing::words_up_to(Alphabet(2), 5);
        for (const auto& id : policy_ids()) {
            const auto p = policy_by_id(id);
            for (const auto& a : ws) {
                for (const auto& b : ws) {
                    const auto ab = p.compare(a, b);
                    CHECK((ab == 0) == (a == b));
                    CHECK((ab < 0) == (p.compare(b, a) > 0));
                }
            }
            // transitivity on a sorted copy
            auto sorted = ws;
            std::sort(sorted.begin(), sorted.end(), [&](const Word& a, const Word& b) { return p.compare(a, b) < 0; });
            for (std::size_t i = 0; i + 2 < sorted.size(); i += 3) {
                CHECK(p.compare(sorted[i], sorted[i + 2]) < 0);
            }
        }
    }

    TEST_CASE("prefix-increasing trait holds where claimed") {
        const auto ws = testing::words_up_to(Alphabet(2), 5);
        for (const auto& id : policy_ids()) {
            const auto p = policy_by_id(id);
            if (!p.traits().prefix_increasing) continue;
            for (const auto& f : ws) {
                for (const auto& g : ws) CHECK(p.compare(f, f + g) < 0);
            }
        }
    }
}
