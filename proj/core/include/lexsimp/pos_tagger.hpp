#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexsimp/routing.hpp"

namespace lexsimp {

// Rule-based tagger over a bundled closed lexicon of word -> coarse tag
// lists (preferred tag first), with suffix heuristics for unknown words
// and a handful of neighbor-token disambiguation rules. Total: returns
// OTHER when unsure. Hermetic stand-in for an external tagger process.
class LexiconPosTagger : public ContextualPOSTagger {
 public:
  // TSV: word \t tags, tags being space-separated letters from
  // {N, V, J, R, O}, most frequent first.
  static LexiconPosTagger load(std::istream& in, const std::string& source_name);
  static LexiconPosTagger load_file(const std::string& path);

  POSCategory tag(std::string_view context, Span target_span) const override;

  std::size_t entries() const { return lexicon_.size(); }

 private:
  std::vector<POSCategory> lookup(std::string_view folded_word) const;
  POSCategory preferred(std::string_view folded_word) const;

  std::unordered_map<std::string, std::string> lexicon_;  // folded word -> tag letters
};

}  // namespace lexsimp
