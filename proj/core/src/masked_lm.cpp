#include "lexsimp/masked_lm.hpp"

#include <algorithm>

#include "lexsimp/text_norm.hpp"

namespace lexsimp {

MaskedContext make_masked_context(const Instance& instance) {
  MaskedContext ctx;
  ctx.left = instance.context.substr(0, instance.target_span.begin);
  ctx.original = std::string(instance.surface());
  ctx.right = instance.context.substr(instance.target_span.end);
  return ctx;
}

std::vector<Candidate> generate_fill_candidates(const MaskedLMScorer& scorer,
                                                const MaskedContext& ctx,
                                                const MlmConfig& cfg,
                                                std::string_view target_lemma) {
  std::vector<ScoredText> raw = scorer.generate(ctx, cfg.top_n);
  const std::string original = normalize(ctx.original);
  const std::string lemma = normalize(target_lemma);

  std::vector<Candidate> out;
  for (auto& item : raw) {
    std::string text = item.text;
    if (text.starts_with("##")) continue;  // wordpiece continuation
    // sentencepiece/BPE whole-word markers
    if (text.starts_with("\xE2\x96\x81") || text.starts_with("\xC4\xA0"))
      text = text.substr(text.starts_with("\xC4\xA0") ? 2 : 3);
    std::string norm = normalize(text);
    if (norm.empty() || !is_alphabetic_word(norm)) continue;
    if (codepoint_length(norm) < 2) continue;
    if (norm == original || (!lemma.empty() && norm == lemma)) continue;
    Candidate cand;
    cand.lemma = norm;
    cand.surface = norm;
    cand.source = ModuleId::Mlm;
    cand.module_score = item.log_prob;
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<ScoredText> fill_rank(const MaskedLMScorer& scorer,
                                  const MaskedContext& ctx,
                                  const std::vector<std::string>& texts) {
  std::vector<ScoredText> scored = scorer.score(ctx, texts);
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredText& a, const ScoredText& b) {
                     if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
                     return a.text < b.text;
                   });
  return scored;
}

}  // namespace lexsimp
