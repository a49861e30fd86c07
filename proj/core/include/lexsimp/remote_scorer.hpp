#pragma once

#include <memory>
#include <string>

#include "lexsimp/masked_lm.hpp"

namespace lexsimp {

// Wire client for an external model server speaking the maskfill
// protocol: POST /v1/maskfill with {"mode","left","right","top_n"?,
// "candidates"?}, response {"results":[{"text","log_prob"}]}.
struct RemoteScorerConfig {
  std::string endpoint;           // e.g. "http://localhost:8080"
  std::string generate_endpoint;  // optional override for generate mode
  int timeout_ms = 10000;
  int max_retries = 2;  // on top of the first attempt
  int max_concurrent = 4;
  int max_batch = 64;  // score texts per request
};

class RemoteScorer : public MaskedLMScorer {
 public:
  explicit RemoteScorer(RemoteScorerConfig cfg);
  ~RemoteScorer() override;

  std::vector<ScoredText> generate(const MaskedContext& ctx,
                                   int top_n) const override;
  std::vector<ScoredText> score(
      const MaskedContext& ctx,
      const std::vector<std::string>& texts) const override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lexsimp
