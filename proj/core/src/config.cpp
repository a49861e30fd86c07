#include "lexsimp/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexsimp/errors.hpp"

namespace lexsimp {

namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string& source, const std::string& key) {
  throw LoadError(source + ": unknown config key \"" + key + "\"");
}

void expect_keys(const json& obj, const std::string& source,
                 const std::string& prefix,
                 const std::set<std::string>& known) {
  for (const auto& [key, value] : obj.items())
    if (!known.count(key)) bad_key(source, prefix.empty() ? key : prefix + "." + key);
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

std::vector<ModuleId> parse_module_list(const json& arr,
                                        const std::string& source,
                                        const std::string& where) {
  std::vector<ModuleId> out;
  for (const auto& item : arr) {
    auto id = module_from_name(item.get<std::string>());
    if (!id)
      throw LoadError(source + ": unknown module \"" +
                      item.get<std::string>() + "\" in " + where);
    out.push_back(*id);
  }
  return out;
}

}  // namespace

AppConfig AppConfig::from_json_text(const std::string& text,
                                    const std::string& source_name) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw LoadError(source_name + ": not valid JSON");
  if (!doc.is_object())
    throw LoadError(source_name + ": config root must be an object");

  AppConfig cfg;
  expect_keys(doc, source_name, "",
              {"resources", "routing", "vsd", "ppdb", "mlm", "kg", "run",
               "metrics"});

  if (doc.contains("resources")) {
    const json& r = doc["resources"];
    expect_keys(r, source_name, "resources",
                {"verbnet_dir", "ppdb_path", "kg_nodes", "kg_edges",
                 "irregulars_path", "pos_lexicon_path", "stub_lexicon_path"});
    read(r, "verbnet_dir", cfg.resources.verbnet_dir);
    read(r, "ppdb_path", cfg.resources.ppdb_path);
    read(r, "kg_nodes", cfg.resources.kg_nodes);
    read(r, "kg_edges", cfg.resources.kg_edges);
    read(r, "irregulars_path", cfg.resources.irregulars_path);
    read(r, "pos_lexicon_path", cfg.resources.pos_lexicon_path);
    read(r, "stub_lexicon_path", cfg.resources.stub_lexicon_path);
  }

  if (doc.contains("routing")) {
    const json& r = doc["routing"];
    expect_keys(r, source_name, "routing", {"profile", "custom"});
    read(r, "profile", cfg.routing_profile);
    if (cfg.routing_profile != "table1" && cfg.routing_profile != "algorithm1" &&
        cfg.routing_profile != "custom")
      throw LoadError(source_name + ": routing.profile must be table1, "
                                    "algorithm1 or custom");
    if (r.contains("custom")) {
      for (const auto& [pos_key, modules] : r["custom"].items()) {
        auto pos = pos_from_name(pos_key);
        if (!pos || *pos == POSCategory::Unassigned)
          throw LoadError(source_name + ": routing.custom has unknown POS \"" +
                          pos_key + "\"");
        cfg.routing_custom[*pos] =
            parse_module_list(modules, source_name, "routing.custom." + pos_key);
      }
    }
    if (cfg.routing_profile == "custom" && cfg.routing_custom.empty())
      throw LoadError(source_name +
                      ": routing.profile=custom needs routing.custom");
  }

  if (doc.contains("vsd")) {
    const json& v = doc["vsd"];
    expect_keys(v, source_name, "vsd", {"k", "max_pool", "include_subclasses"});
    read(v, "k", cfg.vsd.k);
    read(v, "max_pool", cfg.vsd.max_pool);
    read(v, "include_subclasses", cfg.vsd.include_subclasses);
    if (cfg.vsd.k < 1 || cfg.vsd.max_pool < cfg.vsd.k)
      throw LoadError(source_name + ": vsd needs 1 <= k <= max_pool");
  }

  if (doc.contains("ppdb")) {
    const json& p = doc["ppdb"];
    expect_keys(p, source_name, "ppdb", {"limit"});
    read(p, "limit", cfg.ppdb.limit);
    if (cfg.ppdb.limit < 1)
      throw LoadError(source_name + ": ppdb.limit must be positive");
  }

  if (doc.contains("mlm")) {
    const json& m = doc["mlm"];
    expect_keys(m, source_name, "mlm",
                {"backend", "endpoint", "generate_endpoint", "top_n",
                 "max_concurrent", "timeout_ms", "max_batch"});
    read(m, "backend", cfg.mlm.backend);
    read(m, "endpoint", cfg.mlm.endpoint);
    read(m, "generate_endpoint", cfg.mlm.generate_endpoint);
    read(m, "top_n", cfg.mlm.top_n);
    read(m, "max_concurrent", cfg.mlm.max_concurrent);
    read(m, "timeout_ms", cfg.mlm.timeout_ms);
    read(m, "max_batch", cfg.mlm.max_batch);
    if (cfg.mlm.backend != "stub" && cfg.mlm.backend != "remote")
      throw LoadError(source_name + ": mlm.backend must be stub or remote");
    if (cfg.mlm.top_n < 1)
      throw LoadError(source_name + ": mlm.top_n must be positive");
  }

  if (doc.contains("kg")) {
    const json& k = doc["kg"];
    expect_keys(k, source_name, "kg", {"limit", "relation_name", "lang"});
    read(k, "limit", cfg.kg.limit);
    read(k, "relation_name", cfg.kg.relation_name);
    read(k, "lang", cfg.kg.lang);
    if (cfg.kg.limit < 1)
      throw LoadError(source_name + ": kg.limit must be positive");
  }

  if (doc.contains("run")) {
    const json& r = doc["run"];
    expect_keys(r, source_name, "run",
                {"top_n", "workers", "drop_target_variants", "modules"});
    read(r, "top_n", cfg.run.top_n);
    read(r, "workers", cfg.run.workers);
    read(r, "drop_target_variants", cfg.run.drop_target_variants);
    if (r.contains("modules")) {
      auto list = parse_module_list(r["modules"], source_name, "run.modules");
      cfg.run.modules = std::set<ModuleId>(list.begin(), list.end());
    }
    if (cfg.run.top_n < 1)
      throw LoadError(source_name + ": run.top_n must be positive");
    if (cfg.run.workers < 0)
      throw LoadError(source_name + ": run.workers must be >= 0");
  }

  if (doc.contains("metrics")) {
    const json& m = doc["metrics"];
    expect_keys(m, source_name, "metrics", {"map_k", "potential_k", "acc_top1_k"});
    read(m, "map_k", cfg.metrics.map_k);
    read(m, "potential_k", cfg.metrics.potential_k);
    read(m, "acc_top1_k", cfg.metrics.acc_top1_k);
    cfg.metrics.validate();
  }

  return cfg;
}

AppConfig AppConfig::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  AppConfig cfg = from_json_text(buffer.str(), path);
  cfg.apply_env();
  return cfg;
}

void AppConfig::apply_env() {
  if (const char* url = std::getenv("LEXSIMP_SCORER_URL"); url && *url) {
    mlm.endpoint = url;
    mlm.backend = "remote";
  }
}

RoutingConfig AppConfig::make_routing() const {
  if (routing_profile == "algorithm1") return RoutingConfig::algorithm1();
  if (routing_profile == "custom") return RoutingConfig::custom(routing_custom);
  return RoutingConfig::table1();
}

PipelineConfig AppConfig::make_pipeline_config() const {
  PipelineConfig cfg;
  cfg.routing = make_routing();
  cfg.vsd = vsd;
  cfg.ppdb = ppdb;
  cfg.mlm.top_n = mlm.top_n;
  cfg.kg = kg;
  cfg.top_n_output = run.top_n;
  cfg.drop_target_variants = run.drop_target_variants;
  cfg.workers = run.workers;
  cfg.enabled_modules = run.modules;
  return cfg;
}

std::set<ModuleId> AppConfig::enabled_modules() const {
  RoutingConfig routing = make_routing();
  std::set<ModuleId> routed;
  for (POSCategory pos : {POSCategory::Verb, POSCategory::Noun, POSCategory::Adj,
                          POSCategory::Other}) {
    for (ModuleId id : routing.modules_for(pos)) routed.insert(id);
  }
  if (run.modules) {
    std::set<ModuleId> enabled;
    for (ModuleId id : routed)
      if (run.modules->count(id)) enabled.insert(id);
    return enabled;
  }
  return routed;
}

PipelineResources LoadedResources::view() const {
  PipelineResources res;
  res.verbnet = verbnet.get();
  res.ppdb = ppdb.get();
  res.kg = kg.get();
  res.linker = linker.get();
  res.scorer = scorer.get();
  res.generator = generator.get();
  res.irregulars = irregulars.get();
  res.tagger = tagger.get();
  return res;
}

LoadedResources load_resources(const AppConfig& cfg,
                               const std::set<ModuleId>& enabled) {
  LoadedResources out;
  std::vector<std::string> failures;

  auto attempt = [&](const std::string& key, const std::string& path,
                     auto&& loader) {
    if (path.empty()) {
      failures.push_back(key + " is not set");
      return;
    }
    try {
      loader(path);
    } catch (const std::exception& e) {
      failures.push_back(key + ": " + e.what());
    }
  };

  attempt("resources.irregulars_path", cfg.resources.irregulars_path,
          [&](const std::string& p) {
            out.irregulars =
                std::make_unique<IrregularTable>(IrregularTable::load_file(p));
          });
  attempt("resources.pos_lexicon_path", cfg.resources.pos_lexicon_path,
          [&](const std::string& p) {
            out.tagger =
                std::make_unique<LexiconPosTagger>(LexiconPosTagger::load_file(p));
          });

  if (enabled.count(ModuleId::Vsd)) {
    attempt("resources.verbnet_dir", cfg.resources.verbnet_dir,
            [&](const std::string& p) {
              out.verbnet = std::make_unique<VerbLexicon>(
                  VerbLexicon::load(p, &out.verbnet_report));
            });
  }
  if (enabled.count(ModuleId::Ppdb)) {
    attempt("resources.ppdb_path", cfg.resources.ppdb_path,
            [&](const std::string& p) {
              out.ppdb = std::make_unique<ParaphraseIndex>(
                  ParaphraseIndex::load_file(p, &out.ppdb_report));
            });
  }
  if (enabled.count(ModuleId::Kg)) {
    if (cfg.resources.kg_nodes.empty() || cfg.resources.kg_edges.empty()) {
      if (cfg.resources.kg_nodes.empty())
        failures.push_back("resources.kg_nodes is not set");
      if (cfg.resources.kg_edges.empty())
        failures.push_back("resources.kg_edges is not set");
    } else {
      try {
        out.kg = std::make_unique<SynonymGraph>(SynonymGraph::load_files(
            cfg.resources.kg_nodes, cfg.resources.kg_edges, &out.kg_report));
        out.linker = std::make_unique<LexicalLinker>(*out.kg);
      } catch (const std::exception& e) {
        failures.push_back("resources.kg_nodes/kg_edges: " +
                           std::string(e.what()));
      }
    }
  }

  // the re-ranker needs a scorer regardless of which modules run
  if (cfg.mlm.backend == "stub") {
    attempt("resources.stub_lexicon_path", cfg.resources.stub_lexicon_path,
            [&](const std::string& p) {
              out.scorer = std::make_unique<UnigramStubScorer>(
                  UnigramStubScorer::load_file(p));
            });
  } else {
    try {
      RemoteScorerConfig remote;
      remote.endpoint = cfg.mlm.endpoint;
      remote.timeout_ms = cfg.mlm.timeout_ms;
      remote.max_concurrent = cfg.mlm.max_concurrent;
      remote.max_batch = cfg.mlm.max_batch;
      out.scorer = std::make_unique<RemoteScorer>(remote);
      if (!cfg.mlm.generate_endpoint.empty()) {
        RemoteScorerConfig gen = remote;
        gen.endpoint = cfg.mlm.generate_endpoint;
        out.generator = std::make_unique<RemoteScorer>(gen);
      }
    } catch (const std::exception& e) {
      failures.push_back("mlm.endpoint: " + std::string(e.what()));
    }
  }

  if (!failures.empty()) {
    std::string message = "resource loading failed:";
    for (const auto& f : failures) message += "\n  - " + f;
    throw LoadError(message);
  }
  return out;
}

}  // namespace lexsimp
