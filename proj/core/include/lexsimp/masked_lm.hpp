#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/candidate.hpp"
#include "lexsimp/dataset.hpp"

namespace lexsimp {

// Context split at the target span; left + original + right is exactly
// the instance context.
struct MaskedContext {
  std::string left;
  std::string right;
  std::string original;
};

struct ScoredText {
  std::string text;
  double log_prob = 0.0;  // natural log
};

// Single abstraction over masked-LM functionality: predict fillers for
// the slot, and score given texts filled into the slot. Implementations
// must be deterministic and safe for concurrent calls.
class MaskedLMScorer {
 public:
  virtual ~MaskedLMScorer() = default;

  // At most top_n items, log_prob descending.
  virtual std::vector<ScoredText> generate(const MaskedContext& ctx,
                                           int top_n) const = 0;

  // One score per input text, in input order.
  virtual std::vector<ScoredText> score(
      const MaskedContext& ctx, const std::vector<std::string>& texts) const = 0;
};

MaskedContext make_masked_context(const Instance& instance);

struct MlmConfig {
  int top_n = 30;  // generated before filtering
};

// Fill candidates for the slot, filtered: alphabetic, length >= 2, not
// the original surface or its lemma, subword fragments dropped.
std::vector<Candidate> generate_fill_candidates(const MaskedLMScorer& scorer,
                                                const MaskedContext& ctx,
                                                const MlmConfig& cfg,
                                                std::string_view target_lemma);

// Scores texts in the slot and orders them best-first (ties break
// lexicographically). Scorer failures propagate.
std::vector<ScoredText> fill_rank(const MaskedLMScorer& scorer,
                                  const MaskedContext& ctx,
                                  const std::vector<std::string>& texts);

}  // namespace lexsimp
