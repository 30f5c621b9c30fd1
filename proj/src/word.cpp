#include "nyldon/word.hpp"

#include <algorithm>
#include <charconv>

namespace nyldon {

Alphabet::Alphabet(std::size_t size) : size_(size) {
    if (size < 2) {
        throw PreconditionError("alphabet size must be at least 2, got " + std::to_string(size));
    }
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
    for (Letter a : letters_) {
        if (!alphabet_.contains(a)) {
            throw PreconditionError("letter " + std::to_string(a) + " outside alphabet of size " +
                                    std::to_string(alphabet_.size()));
        }
    }
}

Word::Word(Alphabet alphabet, std::initializer_list<Letter> letters)
    : Word(alphabet, std::vector<Letter>(letters)) {}

Word Word::substr(std::size_t start, std::size_t len) const {
    if (start > size() || len > size() - start) {
        throw PreconditionError("substring range out of bounds");
    }
    Word out;
    out.alphabet_ = alphabet_;
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(start),
                        letters_.begin() + static_cast<std::ptrdiff_t>(start + len));
    return out;
}

Word Word::power(std::size_t k) const {
    Word out;
    out.alphabet_ = alphabet_;
    out.letters_.reserve(size() * k);
    for (std::size_t i = 0; i < k; ++i) {
        out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
    }
    return out;
}

Word Word::rotate(std::size_t r) const {
    if (empty()) return *this;
    Word out = *this;
    std::rotate(out.letters_.begin(), out.letters_.begin() + static_cast<std::ptrdiff_t>(r % size()),
                out.letters_.end());
    return out;
}

Word operator+(const Word& a, const Word& b) {
    if (a.alphabet_ != b.alphabet_) {
        throw PreconditionError("cannot concatenate words over different alphabets");
    }
    Word out = a;
    out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = lex_compare(a.letters(), b.letters()); c != 0) return c;
    return a.alphabet_.size() <=> b.alphabet_.size();
}

std::strong_ordering lex_compare(LetterSpan u, LetterSpan v) noexcept {
    return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::strong_ordering lex_compare(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet()) {
        throw PreconditionError("lex_compare: words over different alphabets");
    }
    return lex_compare(u.letters(), v.letters());
}

std::size_t min_period(LetterSpan w) {
    if (w.empty()) throw PreconditionError("period of the empty word");
    // failure[i] = length of the longest proper border of w[0..i]
    std::vector<std::size_t> failure(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::size_t k = failure[i - 1];
        while (k > 0 && w[i] != w[k]) k = failure[k - 1];
        if (w[i] == w[k]) ++k;
        failure[i] = k;
    }
    return w.size() - failure.back();
}

std::size_t primitive_root_length(LetterSpan w) {
    const std::size_t p = min_period(w);
    return w.size() % p == 0 ? p : w.size();
}

bool is_primitive(const Word& w) {
    if (w.empty()) throw PreconditionError("is_primitive: empty word");
    return primitive_root_length(w.letters()) == w.size();
}

Word primitive_root(const Word& w) {
    if (w.empty()) throw PreconditionError("primitive_root: empty word");
    return w.substr(0, primitive_root_length(w.letters()));
}

std::vector<Word> conjugates(const Word& w) {
    if (w.empty()) throw PreconditionError("conjugates: empty word");
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t r = 0; r < w.size(); ++r) out.push_back(w.rotate(r));
    return out;
}

Word Factorization::concatenation() const {
    if (factors.empty()) return {};
    Word out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = out + factors[i];
    return out;
}

Factorization duval_lyndon_factorization(const Word& w) {
    if (w.empty()) throw PreconditionError("duval_lyndon_factorization: empty word");
    Factorization out;
    out.monotonicity = Monotonicity::nonincreasing;
    const auto s = w.letters();
    const std::size_t n = s.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && s[k] <= s[j]) {
            k = s[k] < s[j] ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.factors.push_back(w.substr(i, j - k));
            i += j - k;
        }
    }
    return out;
}

bool is_lyndon(const Word& w) { return duval_lyndon_factorization(w).size() == 1; }

Word parse_word(std::string_view text, Alphabet alphabet) {
    std::vector<Letter> letters;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t end = std::min(text.find(',', pos), text.size());
            const auto field = text.substr(pos, end - pos);
            Letter value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
                throw PreconditionError("malformed letter code '" + std::string(field) + "'");
            }
            letters.push_back(value);
            pos = end + 1;
        }
    } else {
        if (alphabet.size() > 10) {
            throw PreconditionError("digit syntax needs alphabet size <= 10; use comma separated codes");
        }
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw PreconditionError(std::string("malformed word character '") + c + "'");
            }
            letters.push_back(static_cast<Letter>(c - '0'));
        }
    }
    return Word(alphabet, std::move(letters));
}

std::string to_string(LetterSpan letters, Alphabet alphabet) {
    std::string out;
    if (alphabet.size() <= 10) {
        out.reserve(letters.size());
        for (Letter a : letters) out.push_back(static_cast<char>('0' + a));
        return out;
    }
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(letters[i]);
    }
    return out;
}

std::string to_string(const Word& w) { return to_string(w.letters(), w.alphabet()); }

std::string to_string(const Factorization& f, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
        if (i) out += separator;
        out += to_string(f.factors[i]);
    }
    return out;
}

Word binary(std::string_view digits) { return parse_word(digits, Alphabet(2)); }

std::vector<Word> all_words(Alphabet alphabet, std::size_t len) {
    std::vector<Word> out;
    std::vector<Letter> cur(len, 0);
    while (true) {
        out.emplace_back(alphabet, cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] == alphabet.max_letter()) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

}  // namespace nyldon
