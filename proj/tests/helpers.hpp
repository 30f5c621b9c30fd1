#pragma once

#include <string>
#include <vector>

#include "nyldon/word.hpp"

namespace testing {

inline std::vector<nyldon::Word> words(std::initializer_list<const char*> digits) {
    std::vector<nyldon::Word> out;
    for (const char* d : digits) out.push_back(nyldon::binary(d));
    return out;
}

inline std::vector<std::string> texts(const std::vector<nyldon::Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(nyldon::to_string(w));
    return out;
}

// All words over the alphabet with length in [1, max_len].
inline std::vector<nyldon::Word> words_up_to(nyldon::Alphabet a, std::size_t max_len) {
    std::vector<nyldon::Word> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        auto ws = nyldon::all_words(a, len);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

}  // namespace testing
