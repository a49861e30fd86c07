#include "lexsimp/vsd.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "lexsimp/text_norm.hpp"

namespace lexsimp {

std::optional<VsdPool> candidate_pool(const VerbLexicon& lex,
                                      std::string_view target_lemma,
                                      const VsdConfig& cfg) {
  VsdPool pool;
  pool.class_ids = lex.classes_for_verb(target_lemma);
  if (pool.class_ids.empty()) return std::nullopt;

  std::set<std::string> members =
      lex.members_of_classes(pool.class_ids, cfg.include_subclasses);
  members.erase(std::string(target_lemma));
  for (const auto& lemma : members) {
    if (pool.lemmas.size() >= static_cast<std::size_t>(cfg.max_pool)) break;
    pool.lemmas.push_back(lemma);  // std::set iteration is already sorted
  }
  return pool;
}

ClassVoteResult class_vote(
    const std::vector<std::pair<std::string, double>>& scored_pool,
    const std::map<std::string, std::set<std::string>>& membership,
    const VsdConfig& cfg) {
  if (scored_pool.empty())
    throw std::invalid_argument("class vote over an empty candidate pool");

  ClassVoteResult result;
  result.ranked_pool = scored_pool;

  const std::size_t window =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.k), scored_pool.size());
  std::map<std::string, std::size_t> first_hit;  // class -> earliest rank
  for (std::size_t i = 0; i < window; ++i) {
    auto it = membership.find(scored_pool[i].first);
    if (it == membership.end()) continue;
    for (const auto& cls : it->second) {
      ++result.tally[cls];
      first_hit.try_emplace(cls, i);
    }
  }
  if (result.tally.empty()) {
    // no window member maps to a class; fall back to every known class
    for (const auto& [lemma, classes] : membership)
      for (const auto& cls : classes) result.tally.emplace(cls, 0);
    if (result.tally.empty())
      throw std::invalid_argument("class vote with no class membership");
  }

  int best = -1;
  std::size_t best_rank = scored_pool.size();
  for (const auto& [cls, count] : result.tally) {
    std::size_t rank = first_hit.count(cls) ? first_hit[cls] : scored_pool.size();
    // higher tally wins, then earliest ranked member, then smaller id
    bool wins = count > best ||
                (count == best && rank < best_rank) ||
                (count == best && rank == best_rank &&
                 (result.winning_class.empty() || cls < result.winning_class));
    if (wins) {
      best = count;
      best_rank = rank;
      result.winning_class = cls;
    }
  }
  return result;
}

VsdOutcome vsd_candidates(const Instance& instance, const VerbLexicon& lex,
                          const MaskedLMScorer& scorer,
                          const IrregularTable& irregulars,
                          const VsdConfig& cfg) {
  VsdOutcome outcome;
  outcome.target_form =
      detect_form(instance.surface(), POSCategory::Verb, irregulars);

  auto pool = candidate_pool(lex, outcome.target_form.lemma, cfg);
  if (!pool || pool->lemmas.empty()) {
    outcome.not_a_verbnet_verb = true;
    return outcome;
  }

  // score each pooled lemma in the target's surface form
  MaskedContext ctx = make_masked_context(instance);
  std::vector<std::string> surfaces;
  surfaces.reserve(pool->lemmas.size());
  for (const auto& lemma : pool->lemmas)
    surfaces.push_back(inflect_to(lemma, outcome.target_form.form, irregulars));
  std::vector<ScoredText> scored = scorer.score(ctx, surfaces);

  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(pool->lemmas.size());
  std::unordered_map<std::string, double> score_of;
  for (std::size_t i = 0; i < pool->lemmas.size(); ++i) {
    double s = i < scored.size() ? scored[i].log_prob : 0.0;
    ranked.emplace_back(pool->lemmas[i], s);
    score_of.emplace(pool->lemmas[i], s);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  // a lemma pooled from a subclass votes for its candidate ancestor
  std::map<std::string, std::set<std::string>> membership;
  for (const auto& cls : pool->class_ids) {
    for (const auto& lemma :
         lex.members_of_classes({cls}, cfg.include_subclasses)) {
      if (score_of.count(lemma)) membership[lemma].insert(cls);
    }
  }

  outcome.vote = class_vote(ranked, membership, cfg);

  std::set<std::string> winners = lex.members_of_classes(
      {outcome.vote->winning_class}, cfg.include_subclasses);
  winners.erase(outcome.target_form.lemma);

  constexpr double kUnscored = -std::numeric_limits<double>::infinity();
  for (const auto& lemma : winners) {
    Candidate cand;
    cand.lemma = lemma;
    cand.surface = inflect_to(lemma, outcome.target_form.form, irregulars);
    cand.source = ModuleId::Vsd;
    auto it = score_of.find(lemma);
    cand.module_score = it != score_of.end() ? it->second : kUnscored;
    outcome.candidates.push_back(std::move(cand));
  }
  std::sort(outcome.candidates.begin(), outcome.candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.module_score != b.module_score)
                return a.module_score > b.module_score;
              return a.lemma < b.lemma;
            });
  return outcome;
}

}  // namespace lexsimp
