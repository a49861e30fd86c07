#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexsimp/metrics.hpp"
#include "lexsimp/pipeline.hpp"
#include "lexsimp/remote_scorer.hpp"

namespace lexsimp {

struct ResourcePaths {
  std::string verbnet_dir;
  std::string ppdb_path;
  std::string kg_nodes;
  std::string kg_edges;
  std::string irregulars_path;
  std::string pos_lexicon_path;
  std::string stub_lexicon_path;
};

struct MlmSettings {
  std::string backend = "stub";  // "stub" | "remote"
  std::string endpoint;
  std::string generate_endpoint;  // optional distinct generation model
  int top_n = 30;
  int max_concurrent = 4;
  int timeout_ms = 10000;
  int max_batch = 64;
};

struct RunSettings {
  int top_n = 5;
  int workers = 0;
  bool drop_target_variants = true;
  std::optional<std::set<ModuleId>> modules;
};

// The single structured configuration document. Unknown keys are
// rejected; missing resources are reported all at once at load time.
struct AppConfig {
  ResourcePaths resources;
  std::string routing_profile = "table1";  // table1 | algorithm1 | custom
  std::map<POSCategory, std::vector<ModuleId>> routing_custom;
  VsdConfig vsd;
  PpdbConfig ppdb;
  KgConfig kg;
  MlmSettings mlm;
  RunSettings run;
  MetricConfig metrics;

  static AppConfig load_file(const std::string& path);
  static AppConfig from_json_text(const std::string& text,
                                  const std::string& source_name);

  // LEXSIMP_SCORER_URL overrides mlm.endpoint (and selects the remote
  // backend when set).
  void apply_env();

  RoutingConfig make_routing() const;
  PipelineConfig make_pipeline_config() const;

  // Modules that can run under the routing profile and overrides.
  std::set<ModuleId> enabled_modules() const;
};

// Owns every loaded resource; hands out the non-owning view the
// pipeline consumes.
struct LoadedResources {
  std::unique_ptr<VerbLexicon> verbnet;
  std::unique_ptr<ParaphraseIndex> ppdb;
  std::unique_ptr<SynonymGraph> kg;
  std::unique_ptr<EntityLinker> linker;
  std::unique_ptr<MaskedLMScorer> scorer;
  std::unique_ptr<MaskedLMScorer> generator;
  std::unique_ptr<IrregularTable> irregulars;
  std::unique_ptr<LexiconPosTagger> tagger;

  VerbnetLoadReport verbnet_report;
  PpdbLoadReport ppdb_report;
  KgLoadReport kg_report;

  PipelineResources view() const;
};

// Loads everything the enabled modules need; collects every failure and
// throws one LoadError listing all of them.
LoadedResources load_resources(const AppConfig& cfg,
                               const std::set<ModuleId>& enabled);

}  // namespace lexsimp
