#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexsimp {

// Text normalization used for every equality test in the pipeline:
// trim ASCII whitespace, then lowercase each codepoint via its simple
// (single-codepoint) case mapping. Invalid UTF-8 bytes pass through
// untouched.

std::string_view trim(std::string_view s);

char32_t fold_codepoint(char32_t cp);

std::string fold_case(std::string_view s);

// trim + fold_case
std::string normalize(std::string_view s);

// Decoded codepoint plus the byte offset where it starts. The final
// entry is a sentinel {0, s.size()} so offsets[i+1] always gives the
// end of codepoint i.
struct CodepointRun {
  std::vector<char32_t> codepoints;
  std::vector<std::size_t> offsets;
};

CodepointRun decode_utf8(std::string_view s);

void append_utf8(std::string& out, char32_t cp);

// Word characters for whole-token boundaries: ASCII letters plus any
// non-ASCII codepoint.
bool is_word_codepoint(char32_t cp);

bool is_ascii_alpha(char c);

// True when every codepoint is a word character (used for the
// alphabetic-only candidate filter).
bool is_alphabetic_word(std::string_view s);

std::size_t codepoint_length(std::string_view s);

// If pattern starts with an uppercase ASCII letter, uppercase the first
// letter of s; otherwise return s unchanged.
std::string match_capitalization(std::string_view s, std::string_view pattern);

}  // namespace lexsimp
