#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nyldon/analysis.hpp"
#include "nyldon/fastfactor.hpp"
#include "nyldon/oracle.hpp"

using namespace nyldon;
using namespace nyldon::analysis;

namespace {

std::vector<Word> nyldon_of_length(Alphabet a, std::size_t len) {
    std::vector<Word> out;
    for (auto& w : all_words(a, len)) {
        if (is_nyldon(w)) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

TEST_SUITE("analysis") {
    TEST_CASE("Nyldon words of a fixed length are circular codes") {
        for (std::size_t ell = 1; ell <= 6; ++ell) {
            const auto v = circular_code_check(nyldon_of_length(Alphabet(2), ell), 3);
            CHECK_MESSAGE(v.is_circular, ell);
            CHECK_FALSE(v.witness.has_value());
        }
        CHECK(circular_code_check(nyldon_of_length(Alphabet(3), 3), 3).is_circular);
        CHECK(circular_code_check(nyldon_of_length(Alphabet(2), 5), 4, {}, 3).is_circular);
    }

    TEST_CASE("{00, 01, 10} is not circular") {
        const auto code = testing::words({"00", "01", "10"});
        const auto v = circular_code_check(code, 2);
        CHECK_FALSE(v.is_circular);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->offset % 2 != 0);
        const std::set<Word> code_set(code.begin(), code.end());
        CHECK(rotation_parse(code_set, v.witness->sequence, v.witness->offset) == v.witness->rotated_parse);
        // the classical pair: 0010 rotated by one is 0100 = 01 00
        const auto parse = rotation_parse(code_set, testing::words({"00", "10"}), 1);
        REQUIRE(parse.has_value());
        CHECK(testing::texts(*parse) == std::vector<std::string>{"01", "00"});
        // same verdict with parallel workers
        const auto w = circular_code_check(code, 2, {}, 4);
        CHECK(w.witness->sequence == v.witness->sequence);
        CHECK(w.witness->offset == v.witness->offset);
    }

    TEST_CASE("verdicts are rotation symmetric") {
        // xy rotated by r is yx rotated by r - |x|
        const auto code = testing::words({"010", "100", "011"});
        const std::set<Word> code_set(code.begin(), code.end());
        for (const auto& x : code) {
            for (const auto& y : code) {
                for (std::size_t off = 1; off < 6; ++off) {
                    if (off % 3 == 0) continue;
                    CHECK(rotation_parse(code_set, {x, y}, off).has_value() ==
                          rotation_parse(code_set, {y, x}, (off + 3) % 6).has_value());
                }
            }
        }
        const auto v = circular_code_check(code, 3);
        const auto swapped = circular_code_check({code[2], code[0], code[1]}, 3);
        CHECK(v.is_circular == swapped.is_circular);
    }

    TEST_CASE("singletons and mixed lengths") {
        CHECK(circular_code_check(testing::words({"10110"}), 4).is_circular);
        CHECK_FALSE(circular_code_check(testing::words({"1010"}), 1).is_circular);
        CHECK_THROWS_AS(circular_code_check(testing::words({"10", "100"}), 2), PreconditionError);
        CHECK_THROWS_AS(circular_code_check(nyldon_of_length(Alphabet(2), 12), 5, Budget(1000)),
                        BudgetExceededError);
    }

    TEST_CASE("the 23-letter power example") {
        const auto p = power_profile(binary("01111011011111011110111"), 5);
        CHECK(to_string(p.n) == "10111101101111101111011");
        CHECK(p.central_copies == 1);
        CHECK(p.K == 4);
        CHECK(p.bound == 5);
        CHECK(p.within_bound);
        Factorization f{p.prefix_factors};
        f.factors.push_back(p.n);
        f.factors.insert(f.factors.end(), p.suffix_factors.begin(), p.suffix_factors.end());
        CHECK(f.factors == nyldon_factorize(p.w.power(5)).factors);
    }

    TEST_CASE("small profiles") {
        const auto a = power_profile(binary("10"), 6);
        CHECK(to_string(a.n) == "10");
        CHECK(a.central_copies == 6);
        CHECK(a.K == 0);
        const auto b = power_profile(binary("0"), 3);
        CHECK(b.central_copies == 3);
        CHECK(b.K == 0);
        CHECK_THROWS_AS(power_profile(binary("1010"), 2), NotPrimitiveError);
        CHECK_THROWS_AS(power_profile(binary("10"), 0), PreconditionError);
    }

    TEST_CASE("K scan") {
        const auto one = k_bound_scan(Alphabet(2), 1);
        CHECK(one.max_K == 0);
        CHECK(one.words_scanned == 2);
        const auto ten = k_bound_scan(Alphabet(2), 10, 0, {}, 2);
        CHECK(ten.k == 6);
        CHECK(ten.violations == 0);
        CHECK(ten.max_K <= 4);
        CHECK(ten.unstable.empty());
        CHECK(ten.classes == 2 + 1 + 2 + 3 + 6 + 9 + 18 + 30 + 56 + 99);
        CHECK(ten.words_scanned == 2 + 2 + 6 + 12 + 30 + 54 + 126 + 240 + 504 + 990);
    }

    TEST_CASE("K table at max_len 7 against brute-force factorization of the powers") {
        const auto scan = k_bound_scan(Alphabet(2), 7, 0, {}, 1, true);
        REQUIRE(scan.k == 5);
        for (const auto& e : scan.entries) {
            const auto f = oracle::nyldon_factorization_bruteforce(e.w.power(scan.k));
            const Word n = power_profile(e.w, 1).n;
            std::size_t best = 0;
            for (std::size_t i = 0; i < f.size();) {
                std::size_t j = i;
                while (j < f.size() && f.factors[j] == n) ++j;
                best = std::max(best, j - i);
                i = j == i ? i + 1 : j;
            }
            CHECK_MESSAGE(e.central_copies == best, to_string(e.w));
            CHECK(e.K == scan.k - best);
        }
    }

    TEST_CASE("s n^k a") {
        CHECK(sn_ka_check(binary("10"), binary("0"), binary("1"), 2));
        std::mt19937_64 rng(99);
        std::size_t checked = 0;
        for (std::size_t len = 1; len <= 8; ++len) {
            for (const auto& n : nyldon_of_length(Alphabet(2), len)) {
                const std::size_t k = floor_log2(len) + 1;
                for (int t = 0; t < 4; ++t) {
                    const std::size_t s_len = 1 + rng() % len;
                    const Word s = n.substr(len - s_len, s_len);
                    std::vector<Letter> a(rng() % 6);
                    for (auto& x : a) x = static_cast<Letter>(rng() % 2);
                    CHECK_MESSAGE(sn_ka_check(n, s, Word(Alphabet(2), a), k), to_string(n));
                    ++checked;
                }
            }
        }
        CHECK(checked > 0);
        CHECK_THROWS_AS(sn_ka_check(binary("01"), binary("1"), binary("1"), 2), PreconditionError);
        CHECK_THROWS_AS(sn_ka_check(binary("10"), binary("1"), binary("1"), 2), PreconditionError);
        CHECK_THROWS_AS(sn_ka_check(binary("100"), binary("0"), binary("1"), 1), PreconditionError);
    }

    TEST_CASE("a^2 ab is never Nyldon") {
        for (const auto& w : testing::words_up_to(Alphabet(2), 10)) {
            if (w.size() < 2 || !is_nyldon(w)) continue;
            for (std::size_t cut = 1; cut < w.size(); ++cut) {
                const Word a = w.substr(0, cut);
                CHECK_FALSE_MESSAGE(is_nyldon(a + a + w), to_string(w));
            }
        }
    }

    TEST_CASE("Lyndon suffix theorem") {
        CHECK(below_lyndon_suffixes(binary("0011")));
        CHECK(is_lyndon(binary("0011")));
        CHECK_FALSE(below_lyndon_suffixes(binary("10")));
        const auto r = lyndon_suffix_check(Alphabet(2), 12);
        CHECK(r.holds);
        CHECK(r.words_checked == (std::size_t{1} << 13) - 2);
        CHECK(lyndon_suffix_check(Alphabet(3), 7, {}, 2).holds);
    }
}
