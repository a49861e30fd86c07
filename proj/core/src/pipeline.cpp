#include "lexsimp/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               start)
      .count();
}

bool module_enabled(ModuleId id, const PipelineConfig& cfg) {
  return !cfg.enabled_modules || cfg.enabled_modules->count(id) > 0;
}

std::vector<Candidate> run_module(ModuleId id, const Instance& instance,
                                  const PipelineResources& res,
                                  const PipelineConfig& cfg,
                                  InstanceDiagnostics& diag) {
  switch (id) {
    case ModuleId::Vsd: {
      if (!res.verbnet || !res.scorer || !res.irregulars)
        throw LoadError("vsd module resources not loaded");
      VsdOutcome outcome = vsd_candidates(instance, *res.verbnet, *res.scorer,
                                          *res.irregulars, cfg.vsd);
      diag.not_a_verbnet_verb = outcome.not_a_verbnet_verb;
      diag.vsd_vote = outcome.vote;
      return std::move(outcome.candidates);
    }
    case ModuleId::Ppdb: {
      if (!res.ppdb || !res.irregulars)
        throw LoadError("ppdb module resources not loaded");
      // verbs are keyed by lemma and re-inflected downstream
      std::string key = normalize(instance.surface());
      if (instance.pos == POSCategory::Verb || instance.pos == POSCategory::Noun ||
          instance.pos == POSCategory::Adj)
        key = detect_form(instance.surface(), instance.pos, *res.irregulars).lemma;
      return res.ppdb->paraphrases_for(key, instance.pos, cfg.ppdb.limit);
    }
    case ModuleId::Mlm: {
      const MaskedLMScorer* generator = res.generation_scorer();
      if (!generator || !res.irregulars)
        throw LoadError("mlm module resources not loaded");
      MaskedContext ctx = make_masked_context(instance);
      std::string lemma =
          detect_form(instance.surface(), instance.pos, *res.irregulars).lemma;
      return generate_fill_candidates(*generator, ctx, cfg.mlm, lemma);
    }
    case ModuleId::Kg: {
      if (!res.kg || !res.linker) throw LoadError("kg module resources not loaded");
      auto node = link_entity(*res.kg, *res.linker, normalize(instance.surface()),
                              instance.context);
      if (!node) return {};
      return synonym_candidates(*res.kg, *node, cfg.kg);
    }
  }
  return {};
}

int module_priority(ModuleId id) {
  switch (id) {
    case ModuleId::Vsd: return 0;
    case ModuleId::Ppdb: return 1;
    case ModuleId::Mlm: return 2;
    case ModuleId::Kg: return 3;
  }
  return 4;
}

}  // namespace

std::vector<Candidate> collect_candidates(const Instance& instance,
                                          const PipelineResources& resources,
                                          const PipelineConfig& cfg,
                                          InstanceDiagnostics& diag) {
  std::vector<Candidate> all;
  for (ModuleId id : cfg.routing.modules_for(instance.pos)) {
    ModuleTrace trace;
    trace.module = id;
    if (!module_enabled(id, cfg)) {
      trace.status = ModuleTrace::Status::Skipped;
      diag.modules.push_back(std::move(trace));
      continue;
    }
    auto start = Clock::now();
    try {
      std::vector<Candidate> produced =
          run_module(id, instance, resources, cfg, diag);
      trace.micros = micros_since(start);
      trace.candidates = produced.size();
      trace.status = produced.empty() ? ModuleTrace::Status::Empty
                                      : ModuleTrace::Status::Ok;
      all.insert(all.end(), std::make_move_iterator(produced.begin()),
                 std::make_move_iterator(produced.end()));
    } catch (const std::exception& e) {
      trace.micros = micros_since(start);
      trace.status = ModuleTrace::Status::Failed;
      trace.message = e.what();
    }
    diag.modules.push_back(std::move(trace));
  }
  return all;
}

std::vector<Candidate> normalize_and_dedup(std::vector<Candidate> cands,
                                           const Instance& instance,
                                           const IrregularTable& irregulars,
                                           const PipelineConfig& cfg,
                                           InstanceDiagnostics& diag) {
  DetectedForm target = detect_form(instance.surface(), instance.pos, irregulars);
  diag.target_form = target;
  const std::string target_surface = normalize(instance.surface());

  std::vector<Candidate> out;
  std::unordered_map<std::string, std::size_t> seen;  // surface -> index
  for (auto& cand : cands) {
    std::string lemma = normalize(cand.lemma);
    if (lemma.empty()) continue;
    std::string surface;
    if (lemma.find(' ') != std::string::npos &&
        instance.pos != POSCategory::Verb) {
      // multiword non-verbs pass through uninflected
      surface = lemma;
      ++diag.uninflectable;
    } else {
      DetectedForm base = detect_form(lemma, instance.pos, irregulars);
      lemma = base.lemma;
      surface = inflect_to(lemma, target.form, irregulars);
    }
    if (cfg.drop_target_variants &&
        (lemma == target.lemma || surface == target_surface))
      continue;
    auto [it, inserted] = seen.try_emplace(surface, out.size());
    if (!inserted) {
      ++diag.merged_duplicates;
      continue;  // keep the earliest module-order occurrence
    }
    cand.lemma = std::move(lemma);
    cand.surface = std::move(surface);
    out.push_back(std::move(cand));
  }
  return out;
}

PredictionRecord rerank_top_n(std::vector<Candidate>& cands,
                              const Instance& instance,
                              const MaskedLMScorer& scorer,
                              const PipelineConfig& cfg,
                              InstanceDiagnostics& diag) {
  PredictionRecord record;
  record.context = instance.context;
  record.target = instance.target;
  if (cands.empty()) return record;

  MaskedContext ctx = make_masked_context(instance);
  std::vector<std::string> surfaces;
  surfaces.reserve(cands.size());
  for (const auto& cand : cands) surfaces.push_back(cand.surface);

  bool ranked = false;
  try {
    std::vector<ScoredText> order = fill_rank(scorer, ctx, surfaces);
    std::unordered_map<std::string, double> score_of;
    for (const auto& item : order) score_of.emplace(item.text, item.log_prob);
    for (auto& cand : cands) cand.final_score = score_of.at(cand.surface);
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                       if (*a.final_score != *b.final_score)
                         return *a.final_score > *b.final_score;
                       return a.surface < b.surface;
                     });
    ranked = true;
  } catch (const std::exception&) {
    diag.scorer_fallback = true;
  }
  if (!ranked) {
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) {
                       int pa = module_priority(a.source);
                       int pb = module_priority(b.source);
                       if (pa != pb) return pa < pb;
                       if (a.module_score != b.module_score)
                         return a.module_score > b.module_score;
                       return a.surface < b.surface;
                     });
  }

  int rank = 1;
  for (auto& cand : cands) cand.rank = rank++;

  const std::size_t n =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.top_n_output), cands.size());
  const std::string_view original = instance.surface();
  for (std::size_t i = 0; i < n; ++i)
    record.substitutes.push_back(match_capitalization(cands[i].surface, original));
  return record;
}

std::pair<PredictionRecord, InstanceDiagnostics> run_instance(
    Instance instance, const PipelineResources& resources,
    const PipelineConfig& cfg) {
  InstanceDiagnostics diag;
  if (instance.pos == POSCategory::Unassigned && resources.tagger)
    tag_target_pos(instance, *resources.tagger);
  diag.pos = instance.pos;

  std::vector<Candidate> cands =
      collect_candidates(instance, resources, cfg, diag);
  cands = normalize_and_dedup(std::move(cands), instance, *resources.irregulars,
                              cfg, diag);
  if (cands.empty()) {
    diag.empty_candidates = true;
    PredictionRecord record;
    record.context = instance.context;
    record.target = instance.target;
    return {std::move(record), std::move(diag)};
  }
  PredictionRecord record =
      rerank_top_n(cands, instance, *resources.scorer, cfg, diag);
  return {std::move(record), std::move(diag)};
}

PipelineRun run_pipeline(const std::vector<Instance>& instances,
                         const PipelineResources& resources,
                         const PipelineConfig& cfg) {
  PipelineRun run;
  run.records.resize(instances.size());
  run.diagnostics.resize(instances.size());

  unsigned workers = cfg.workers > 0
                         ? static_cast<unsigned>(cfg.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers,
                               std::max<std::size_t>(instances.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) break;
      auto [record, diag] = run_instance(instances[i], resources, cfg);
      run.records[i] = std::move(record);
      run.diagnostics[i] = std::move(diag);
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& diag : run.diagnostics) {
    if (diag.empty_candidates) ++run.empty_candidate_instances;
    if (diag.degraded()) ++run.degraded_instances;
  }
  return run;
}

}  // namespace lexsimp
