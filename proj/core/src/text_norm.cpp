#include "lexsimp/text_norm.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace lexsimp {

namespace {

struct FoldPair {
  uint32_t from;
  uint32_t to;
};

constexpr FoldPair kFoldTable[] = {
#include "case_fold_table.inc"
};

constexpr std::size_t kFoldTableSize = sizeof(kFoldTable) / sizeof(kFoldTable[0]);

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

char32_t fold_codepoint(char32_t cp) {
  if (cp < 0x80) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    return cp;
  }
  const FoldPair* begin = kFoldTable;
  const FoldPair* end = kFoldTable + kFoldTableSize;
  const FoldPair* it = std::lower_bound(
      begin, end, cp, [](const FoldPair& p, char32_t v) { return p.from < v; });
  if (it != end && it->from == cp) return it->to;
  return cp;
}

CodepointRun decode_utf8(std::string_view s) {
  CodepointRun run;
  run.codepoints.reserve(s.size());
  run.offsets.reserve(s.size() + 1);
  std::size_t i = 0;
  while (i < s.size()) {
    run.offsets.push_back(i);
    unsigned char c = static_cast<unsigned char>(s[i]);
    char32_t cp = c;
    std::size_t len = 1;
    if (c >= 0xF0 && c <= 0xF4)
      len = 4, cp = c & 0x07u;
    else if (c >= 0xE0)
      len = 3, cp = c & 0x0Fu;
    else if (c >= 0xC2)
      len = 2, cp = c & 0x1Fu;
    if (len > 1) {
      if (i + len > s.size()) len = 1, cp = c;
      for (std::size_t k = 1; k < len; ++k) {
        unsigned char cc = static_cast<unsigned char>(s[i + k]);
        if ((cc & 0xC0u) != 0x80u) {
          // malformed sequence: emit the lead byte alone
          len = 1;
          cp = c;
          break;
        }
        cp = (cp << 6) | (cc & 0x3Fu);
      }
    }
    run.codepoints.push_back(cp);
    i += len;
  }
  run.offsets.push_back(s.size());
  return run;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  // ASCII fast path until the first non-ASCII byte
  std::size_t i = 0;
  while (i < s.size() && static_cast<unsigned char>(s[i]) < 0x80) {
    char c = s[i];
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c);
    ++i;
  }
  if (i == s.size()) return out;
  CodepointRun run = decode_utf8(s.substr(i));
  for (char32_t cp : run.codepoints) append_utf8(out, fold_codepoint(cp));
  return out;
}

std::string normalize(std::string_view s) { return fold_case(trim(s)); }

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_word_codepoint(char32_t cp) {
  if (cp < 0x80)
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  return true;
}

bool is_alphabetic_word(std::string_view s) {
  if (s.empty()) return false;
  CodepointRun run = decode_utf8(s);
  for (char32_t cp : run.codepoints)
    if (!is_word_codepoint(cp)) return false;
  return true;
}

std::size_t codepoint_length(std::string_view s) {
  return decode_utf8(s).codepoints.size();
}

std::string match_capitalization(std::string_view s, std::string_view pattern) {
  if (pattern.empty() || s.empty()) return std::string(s);
  char p = pattern.front();
  if (p >= 'A' && p <= 'Z' && s.front() >= 'a' && s.front() <= 'z') {
    std::string out(s);
    out.front() = static_cast<char>(out.front() - 0x20);
    return out;
  }
  return std::string(s);
}

}  // namespace lexsimp
