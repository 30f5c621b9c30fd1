#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nyldon/errors.hpp"

namespace nyldon {

using Letter = std::uint32_t;
using LetterSpan = std::span<const Letter>;

// Alphabet {0, 1, ..., size-1}, ordered by letter code.
class Alphabet {
public:
    explicit Alphabet(std::size_t size = 2);

    std::size_t size() const noexcept { return size_; }
    Letter max_letter() const noexcept { return static_cast<Letter>(size_ - 1); }
    bool contains(Letter a) const noexcept { return a < size_; }

    friend bool operator==(Alphabet, Alphabet) = default;
    friend auto operator<=>(Alphabet, Alphabet) = default;

private:
    std::size_t size_;
};

// A finite word over an alphabet. Immutable value; the empty word is
// representable but most operations reject it.
class Word {
public:
    Word() = default;
    Word(Alphabet alphabet, std::vector<Letter> letters);
    Word(Alphabet alphabet, std::initializer_list<Letter> letters);

    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    LetterSpan letters() const noexcept { return letters_; }
    const std::vector<Letter>& data() const noexcept { return letters_; }

    Word substr(std::size_t start, std::size_t len) const;
    Word power(std::size_t k) const;
    // Left rotation: letters [r, n) followed by [0, r).
    Word rotate(std::size_t r) const;

    friend Word operator+(const Word& a, const Word& b);

    // Lexicographic on letters (a proper prefix is smaller); alphabet size
    // breaks ties so that the ordering stays consistent with ==.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    Alphabet alphabet_{};
    std::vector<Letter> letters_;
};

// Plain lexicographic comparison of letter sequences.
std::strong_ordering lex_compare(LetterSpan u, LetterSpan v) noexcept;
// Same, with the alphabet check: throws PreconditionError on mismatch.
std::strong_ordering lex_compare(const Word& u, const Word& v);

// Smallest p >= 1 with w[i] == w[i+p] for all valid i (border function).
std::size_t min_period(LetterSpan w);
std::size_t primitive_root_length(LetterSpan w);
bool is_primitive(const Word& w);
Word primitive_root(const Word& w);

// All |w| left rotations in offset order, duplicates kept.
std::vector<Word> conjugates(const Word& w);

enum class Monotonicity { nondecreasing, nonincreasing };

struct Factorization {
    std::vector<Word> factors;
    std::string order_id = "lex";
    Monotonicity monotonicity = Monotonicity::nondecreasing;

    std::size_t size() const noexcept { return factors.size(); }
    Word concatenation() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Chen-Fox-Lyndon factorization (nonincreasing Lyndon factors), O(|w|).
Factorization duval_lyndon_factorization(const Word& w);
bool is_lyndon(const Word& w);

// Word text syntax: digit strings ("10110") for alphabets of size <= 10,
// comma separated codes ("3,0,11,2") for any size.
Word parse_word(std::string_view text, Alphabet alphabet);
std::string to_string(const Word& w);
std::string to_string(LetterSpan letters, Alphabet alphabet);
std::string to_string(const Factorization& f, std::string_view separator = " ");

// Convenience for tests and examples: binary word from a digit string.
Word binary(std::string_view digits);

// Every word of exactly `len` letters, in lexicographic order.
std::vector<Word> all_words(Alphabet alphabet, std::size_t len);

}  // namespace nyldon
