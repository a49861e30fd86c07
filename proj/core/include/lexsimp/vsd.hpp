#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexsimp/candidate.hpp"
#include "lexsimp/inflection.hpp"
#include "lexsimp/masked_lm.hpp"
#include "lexsimp/verbnet.hpp"

namespace lexsimp {

struct VsdConfig {
  int k = 10;  // vote window over the scored pool
  int max_pool = 60;
  bool include_subclasses = true;
};

struct ClassVoteResult {
  std::string winning_class;
  std::map<std::string, int> tally;  // class id -> hits within top-k
  std::vector<std::pair<std::string, double>> ranked_pool;  // lemma, score
};

struct VsdPool {
  std::set<std::string> class_ids;
  std::vector<std::string> lemmas;  // sorted, capped at max_pool, target removed
};

// Candidate classes and their pooled member verbs for the target lemma.
// nullopt when the lemma is not in the verb lexicon (caller falls back
// to the other routed modules).
std::optional<VsdPool> candidate_pool(const VerbLexicon& lex,
                                      std::string_view target_lemma,
                                      const VsdConfig& cfg);

// Tally class hits over the first min(k, |pool|) entries of the scored
// pool (a lemma in several classes increments each). Tie rule: the class
// holding the highest-ranked member, then the smaller class id.
// Throws std::invalid_argument on an empty pool.
ClassVoteResult class_vote(
    const std::vector<std::pair<std::string, double>>& scored_pool,
    const std::map<std::string, std::set<std::string>>& membership,
    const VsdConfig& cfg);

struct VsdOutcome {
  std::vector<Candidate> candidates;
  std::optional<ClassVoteResult> vote;
  bool not_a_verbnet_verb = false;
  DetectedForm target_form;
};

// Full verb-sense pipeline for one instance: pool, inflect to the
// target's form, fill-score, vote, then emit every member of the
// winning class (unscored members carry a -inf sentinel and sort last).
VsdOutcome vsd_candidates(const Instance& instance, const VerbLexicon& lex,
                          const MaskedLMScorer& scorer,
                          const IrregularTable& irregulars,
                          const VsdConfig& cfg);

}  // namespace lexsimp
