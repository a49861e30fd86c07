#include "lexsimp/pos_tagger.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

const std::unordered_set<std::string_view> kVerbCues = {
    "to",    "will",  "would",  "can",   "could",  "may",   "might",
    "must",  "shall", "should", "do",    "does",   "did",   "not",
    "don't", "doesn't", "didn't", "won't", "can't", "cannot"};

const std::unordered_set<std::string_view> kPronounSubjects = {
    "i", "we", "you", "they", "he", "she", "it", "who"};

const std::unordered_set<std::string_view> kDeterminers = {
    "the",  "a",    "an",   "this", "that",  "these", "those",
    "my",   "your", "his",  "her",  "its",   "our",   "their",
    "no",   "any",  "some", "each", "every", "another"};

const std::unordered_set<std::string_view> kAdjCues = {
    "is",   "are",  "was",  "were", "be",   "been", "being", "seems",
    "seem", "looks", "look", "very", "quite", "so",  "too",  "more",
    "most", "rather", "really"};

POSCategory tag_from_letter(char c) {
  switch (c) {
    case 'N': return POSCategory::Noun;
    case 'V': return POSCategory::Verb;
    case 'J': return POSCategory::Adj;
    default: return POSCategory::Other;  // R (adverb) and O
  }
}

bool has(const std::vector<POSCategory>& tags, POSCategory t) {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

struct Token {
  std::string_view text;
  std::size_t begin;
  std::size_t end;
};

std::vector<Token> tokenize(std::string_view context) {
  std::vector<Token> tokens;
  CodepointRun run = decode_utf8(context);
  std::size_t i = 0;
  const std::size_t n = run.codepoints.size();
  while (i < n) {
    char32_t cp = run.codepoints[i];
    if (is_word_codepoint(cp) || cp == U'\'') {
      std::size_t j = i;
      while (j < n &&
             (is_word_codepoint(run.codepoints[j]) || run.codepoints[j] == U'\''))
        ++j;
      tokens.push_back({context.substr(run.offsets[i],
                                       run.offsets[j] - run.offsets[i]),
                        run.offsets[i], run.offsets[j]});
      i = j;
    } else {
      ++i;
    }
  }
  return tokens;
}

// Suffix guesses for words outside the lexicon, longest suffix first.
POSCategory guess_by_suffix(std::string_view w) {
  static const std::pair<std::string_view, char> kSuffixes[] = {
      {"ology", 'N'}, {"ization", 'N'}, {"ements", 'N'}, {"nesses", 'N'},
      {"ation", 'N'}, {"ments", 'N'},  {"tion", 'N'},  {"sion", 'N'},
      {"ment", 'N'},  {"ness", 'N'},   {"ship", 'N'},  {"hood", 'N'},
      {"ance", 'N'},  {"ence", 'N'},   {"ities", 'N'}, {"ity", 'N'},
      {"isms", 'N'},  {"ism", 'N'},    {"ists", 'N'},  {"ist", 'N'},
      {"dom", 'N'},   {"ures", 'N'},   {"ure", 'N'},   {"ages", 'N'},
      {"ible", 'J'},  {"able", 'J'},   {"ious", 'J'},  {"ous", 'J'},
      {"ful", 'J'},   {"less", 'J'},   {"ish", 'J'},   {"ive", 'J'},
      {"ical", 'J'},  {"ic", 'J'},     {"al", 'J'},
      {"ize", 'V'},   {"ise", 'V'},    {"ify", 'V'},   {"izes", 'V'},
      {"ized", 'V'},  {"izing", 'V'},
      {"ly", 'R'},
  };
  for (const auto& [suffix, letter] : kSuffixes) {
    if (w.size() > suffix.size() + 1 && w.ends_with(suffix))
      return tag_from_letter(letter);
  }
  // bare inflection endings
  if (w.size() > 4 && (w.ends_with("ing") || w.ends_with("ed")))
    return POSCategory::Verb;
  return POSCategory::Other;
}

}  // namespace

LexiconPosTagger LexiconPosTagger::load(std::istream& in,
                                        const std::string& source_name) {
  LexiconPosTagger tagger;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(source_name, line_no, "expected word\\ttags");
    std::string word = normalize(line.substr(0, tab));
    std::string tags;
    for (char c : line.substr(tab + 1)) {
      if (c == ' ' || c == '\t') continue;
      if (c != 'N' && c != 'V' && c != 'J' && c != 'R' && c != 'O')
        throw ParseError(source_name, line_no,
                         std::string("unknown tag letter '") + c + "'");
      if (tags.find(c) == std::string::npos) tags.push_back(c);
    }
    if (word.empty() || tags.empty())
      throw ParseError(source_name, line_no, "empty word or tag list");
    tagger.lexicon_[word] = tags;
  }
  return tagger;
}

LexiconPosTagger LexiconPosTagger::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open POS lexicon: " + path);
  return load(in, path);
}

std::vector<POSCategory> LexiconPosTagger::lookup(
    std::string_view folded_word) const {
  std::vector<POSCategory> tags;
  auto it = lexicon_.find(std::string(folded_word));
  if (it == lexicon_.end()) return tags;
  for (char c : it->second) {
    POSCategory t = tag_from_letter(c);
    if (!has(tags, t)) tags.push_back(t);
  }
  return tags;
}

POSCategory LexiconPosTagger::preferred(std::string_view folded_word) const {
  auto it = lexicon_.find(std::string(folded_word));
  if (it == lexicon_.end() || it->second.empty()) return POSCategory::Other;
  return tag_from_letter(it->second[0]);
}

POSCategory LexiconPosTagger::tag(std::string_view context,
                                  Span target_span) const {
  auto tokens = tokenize(context);
  if (tokens.empty()) return POSCategory::Other;

  // first token of the target decides (verb-particle / noun-compound head)
  std::size_t target_idx = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].begin >= target_span.begin && tokens[i].begin < target_span.end) {
      target_idx = i;
      break;
    }
  }
  if (target_idx == tokens.size()) return POSCategory::Other;

  std::string word = fold_case(tokens[target_idx].text);
  std::vector<POSCategory> tags = lookup(word);
  if (tags.empty()) {
    // unknown word: unwrap an inflection suffix, then guess
    POSCategory guess = guess_by_suffix(word);
    return guess;
  }
  if (tags.size() == 1) return tags[0];

  std::string prev = target_idx > 0
                         ? fold_case(tokens[target_idx - 1].text)
                         : std::string();
  std::size_t after = target_idx;
  while (after + 1 < tokens.size() && tokens[after + 1].begin < target_span.end)
    ++after;  // skip remaining tokens of a multiword target
  std::string next = after + 1 < tokens.size()
                         ? fold_case(tokens[after + 1].text)
                         : std::string();

  if (!prev.empty() && kVerbCues.count(prev) && has(tags, POSCategory::Verb))
    return POSCategory::Verb;
  if (!prev.empty() && kPronounSubjects.count(prev) && has(tags, POSCategory::Verb))
    return POSCategory::Verb;
  if (!prev.empty() && kDeterminers.count(prev)) {
    if (!next.empty() && preferred(next) == POSCategory::Noun &&
        has(tags, POSCategory::Adj))
      return POSCategory::Adj;
    if (has(tags, POSCategory::Noun)) return POSCategory::Noun;
    if (has(tags, POSCategory::Adj)) return POSCategory::Adj;
  }
  if (!prev.empty() && kAdjCues.count(prev) && has(tags, POSCategory::Adj))
    return POSCategory::Adj;
  if (!prev.empty() && preferred(prev) == POSCategory::Noun &&
      has(tags, POSCategory::Verb))
    return POSCategory::Verb;
  if (!next.empty() && preferred(next) == POSCategory::Noun &&
      has(tags, POSCategory::Adj))
    return POSCategory::Adj;

  return tags[0];
}

}  // namespace lexsimp
