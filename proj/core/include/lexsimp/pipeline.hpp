#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexsimp/candidate.hpp"
#include "lexsimp/inflection.hpp"
#include "lexsimp/kg.hpp"
#include "lexsimp/masked_lm.hpp"
#include "lexsimp/ppdb.hpp"
#include "lexsimp/pos_tagger.hpp"
#include "lexsimp/routing.hpp"
#include "lexsimp/stub_scorer.hpp"
#include "lexsimp/verbnet.hpp"
#include "lexsimp/vsd.hpp"

namespace lexsimp {

struct PipelineConfig {
  RoutingConfig routing = RoutingConfig::table1();
  VsdConfig vsd;
  PpdbConfig ppdb;
  MlmConfig mlm;
  KgConfig kg;
  int top_n_output = 5;
  bool drop_target_variants = true;
  int workers = 0;  // 0 = available parallelism
  // global enable/disable overrides; unset means "all routed modules"
  std::optional<std::set<ModuleId>> enabled_modules;
};

// Read-only views over loaded resources; absent modules hold nullptr.
// `generator` defaults to `scorer` when null (one model for both roles).
struct PipelineResources {
  const VerbLexicon* verbnet = nullptr;
  const ParaphraseIndex* ppdb = nullptr;
  const SynonymGraph* kg = nullptr;
  const EntityLinker* linker = nullptr;
  const MaskedLMScorer* scorer = nullptr;
  const MaskedLMScorer* generator = nullptr;
  const IrregularTable* irregulars = nullptr;
  const ContextualPOSTagger* tagger = nullptr;

  const MaskedLMScorer* generation_scorer() const {
    return generator ? generator : scorer;
  }
};

struct ModuleTrace {
  ModuleId module = ModuleId::Mlm;
  enum class Status { Ok, Empty, Skipped, Failed } status = Status::Ok;
  std::size_t candidates = 0;
  std::int64_t micros = 0;
  std::string message;
};

struct InstanceDiagnostics {
  POSCategory pos = POSCategory::Unassigned;
  DetectedForm target_form;
  std::vector<ModuleTrace> modules;
  bool not_a_verbnet_verb = false;
  bool scorer_fallback = false;
  bool empty_candidates = false;
  std::size_t merged_duplicates = 0;
  std::size_t uninflectable = 0;
  std::optional<ClassVoteResult> vsd_vote;

  bool degraded() const {
    if (not_a_verbnet_verb || scorer_fallback || empty_candidates) return true;
    for (const auto& trace : modules)
      if (trace.status == ModuleTrace::Status::Failed) return true;
    return false;
  }
};

// Runs every routed (and enabled) module in canonical order; individual
// module failures are recorded, never fatal.
std::vector<Candidate> collect_candidates(const Instance& instance,
                                          const PipelineResources& resources,
                                          const PipelineConfig& cfg,
                                          InstanceDiagnostics& diag);

// Re-inflects every candidate to the target's form, merges normalized
// duplicates keeping the earliest module-order occurrence, and drops
// the target's own variants.
std::vector<Candidate> normalize_and_dedup(std::vector<Candidate> cands,
                                           const Instance& instance,
                                           const IrregularTable& irregulars,
                                           const PipelineConfig& cfg,
                                           InstanceDiagnostics& diag);

// Fill-ranks the merged pool and keeps the top_n_output surfaces.
// Scorer failure falls back to module-priority order (flagged).
PredictionRecord rerank_top_n(std::vector<Candidate>& cands,
                              const Instance& instance,
                              const MaskedLMScorer& scorer,
                              const PipelineConfig& cfg,
                              InstanceDiagnostics& diag);

struct PipelineRun {
  std::vector<PredictionRecord> records;           // input order
  std::vector<InstanceDiagnostics> diagnostics;    // parallel to records
  std::size_t empty_candidate_instances = 0;
  std::size_t degraded_instances = 0;
};

// Tags, routes, generates, normalizes and re-ranks each instance on a
// bounded worker pool; output order equals input order regardless of
// worker count.
PipelineRun run_pipeline(const std::vector<Instance>& instances,
                         const PipelineResources& resources,
                         const PipelineConfig& cfg);

// Single-instance run used by inspect and the pipeline body.
std::pair<PredictionRecord, InstanceDiagnostics> run_instance(
    Instance instance, const PipelineResources& resources,
    const PipelineConfig& cfg);

}  // namespace lexsimp
