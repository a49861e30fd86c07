#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexsimp/candidate.hpp"
#include "lexsimp/dataset.hpp"

namespace lexsimp {

// One paraphrase record from the lexical package.
struct ParaphraseEntry {
  std::string source;
  std::string target;
  std::string syntactic_tag;  // "[NN]", "[JJ]", "[VB]", ...
  double quality = 0.0;       // PPDB2.0Score, higher is better
  std::string entailment;
};

struct PpdbLoadReport {
  std::size_t entries = 0;
  std::size_t skipped_lines = 0;       // fewer than 6 fields
  std::size_t missing_score = 0;       // no PPDB2.0Score feature
  std::size_t self_paraphrases = 0;    // source == target after normalization
  std::size_t collapsed_duplicates = 0;
};

struct PpdbConfig {
  int limit = 15;
};

class ParaphraseIndex {
 public:
  // Record format: LHS tag ||| source ||| target ||| features |||
  // alignment ||| entailment. Irregular lines are skipped and counted.
  static ParaphraseIndex load(std::istream& in, const std::string& source_name,
                              PpdbLoadReport* report = nullptr);
  static ParaphraseIndex load_file(const std::string& path,
                                   PpdbLoadReport* report = nullptr);

  // Entries whose tag is compatible with pos (prefix rule: NOUN "[N",
  // ADJ "[J", VERB "[V"; OTHER unfiltered), best quality first.
  std::vector<Candidate> paraphrases_for(std::string_view word,
                                         POSCategory pos, int limit) const;

  const std::vector<ParaphraseEntry>* entries_for(std::string_view word) const;
  std::size_t size() const { return entry_count_; }

 private:
  std::unordered_map<std::string, std::vector<ParaphraseEntry>> index_;
  std::size_t entry_count_ = 0;
};

bool tag_compatible(std::string_view syntactic_tag, POSCategory pos);

}  // namespace lexsimp
