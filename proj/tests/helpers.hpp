#pragma once

#include <initializer_list>
#include <string>

#include "symshift/core.hpp"

namespace testing {

inline symshift::Alphabet binary() { return symshift::Alphabet({"0", "1"}); }
inline symshift::Alphabet ternary() { return symshift::Alphabet({"0", "1", "2"}); }

inline symshift::Word word(const symshift::Alphabet &a, const std::string &text) { return a.parse_word(text); }
inline symshift::Word bits(const std::string &text) { return binary().parse_word(text); }

/// SFT from forbidden words written as bare strings, e.g. sft(binary(), {"11"}).
inline symshift::SftSpec sft(const symshift::Alphabet &a, std::initializer_list<const char *> forbidden) {
    std::vector<symshift::Word> words;
    for (const char *f : forbidden)
        words.push_back(a.parse_word(f));
    return symshift::SftSpec(a, words);
}

inline symshift::SftSpec golden() { return sft(binary(), {"11"}); }
inline symshift::SftSpec full2() { return sft(binary(), {}); }
inline symshift::SftSpec onesided() { return sft(binary(), {"01"}); }

} // namespace testing
