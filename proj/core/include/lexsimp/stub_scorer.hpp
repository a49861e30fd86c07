#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexsimp/masked_lm.hpp"

namespace lexsimp {

// Deterministic, context-independent scorer over a bundled unigram
// frequency table: log((count + 1) / (T + V)) with add-one smoothing,
// summed over whitespace-split tokens. The hermetic backend every test
// runs against.
class UnigramStubScorer : public MaskedLMScorer {
 public:
  // TSV: word \t count
  static UnigramStubScorer load(std::istream& in, const std::string& source_name);
  static UnigramStubScorer load_file(const std::string& path);

  std::vector<ScoredText> generate(const MaskedContext& ctx,
                                   int top_n) const override;
  std::vector<ScoredText> score(
      const MaskedContext& ctx,
      const std::vector<std::string>& texts) const override;

  double stub_score(std::string_view text) const;

  std::size_t vocabulary_size() const { return counts_.size(); }
  std::uint64_t total_count() const { return total_; }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::vector<std::string> by_frequency_;  // count desc, then lexicographic
  std::uint64_t total_ = 0;
};

}  // namespace lexsimp
