#include "lexsimp/metrics.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

void validate_cutoffs(const std::vector<int>& ks, const char* label) {
  int prev = 0;
  for (int k : ks) {
    if (k <= prev)
      throw std::invalid_argument(std::string(label) +
                                  " cutoffs must be positive and strictly "
                                  "increasing");
    prev = k;
  }
}

std::vector<std::string> normalized_preds(const PredictionRecord& preds) {
  std::vector<std::string> out;
  out.reserve(preds.substitutes.size());
  for (const auto& sub : preds.substitutes) out.push_back(normalize(sub));
  return out;
}

bool any_match_in_top_k(const std::vector<std::string>& preds,
                        const std::set<std::string>& gold, int k) {
  const std::size_t n = std::min<std::size_t>(k, preds.size());
  for (std::size_t i = 0; i < n; ++i)
    if (gold.count(preds[i])) return true;
  return false;
}

}  // namespace

void MetricConfig::validate() const {
  validate_cutoffs(map_k, "MAP@K");
  validate_cutoffs(potential_k, "Potential@K");
  validate_cutoffs(acc_top1_k, "ACC@K@Top1");
}

double EvaluationReport::value(std::string_view name) const {
  for (const auto& [key, val] : metrics)
    if (key == name) return val;
  throw std::out_of_range("no metric named \"" + std::string(name) + "\"");
}

bool EvaluationReport::has(std::string_view name) const {
  for (const auto& [key, val] : metrics)
    if (key == name) return true;
  return false;
}

std::vector<int> relevance_vector(const PredictionRecord& preds,
                                  const GoldInstance& gold, int k) {
  std::set<std::string> gold_set;
  for (const auto& ann : gold.annotations) gold_set.insert(normalize(ann));

  std::vector<int> rel;
  const std::size_t n = std::min<std::size_t>(k, preds.substitutes.size());
  rel.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    rel.push_back(gold_set.count(normalize(preds.substitutes[i])) ? 1 : 0);
  return rel;
}

double average_precision_at_k(const std::vector<int>& rel, int k) {
  if (k <= 0) throw std::invalid_argument("AP@K needs K >= 1");
  double sum = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (rel[i]) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(k);
}

EvaluationReport evaluate_records(const std::vector<GoldInstance>& gold,
                                  const std::vector<PredictionRecord>& preds,
                                  const MetricConfig& cfg) {
  cfg.validate();
  if (gold.empty()) throw EvalError("empty dataset: nothing to evaluate");
  if (gold.size() != preds.size())
    throw EvalError("gold has " + std::to_string(gold.size()) +
                    " instances but run has " + std::to_string(preds.size()));

  const std::size_t n = gold.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (normalize(gold[i].instance.context) != normalize(preds[i].context) ||
        normalize(gold[i].instance.target) != normalize(preds[i].target))
      throw EvalError("pairing mismatch at line " + std::to_string(i + 1) +
                      ": gold target \"" + gold[i].instance.target +
                      "\" vs run target \"" + preds[i].target + "\"");
  }

  EvaluationReport report;
  report.instances = n;

  std::vector<std::vector<std::string>> pred_norm(n);
  std::vector<std::set<std::string>> gold_sets(n);
  std::vector<std::set<std::string>> top1_sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    pred_norm[i] = normalized_preds(preds[i]);
    for (const auto& ann : gold[i].annotations)
      gold_sets[i].insert(normalize(ann));
    top1_sets[i] = gold_top1_set(gold[i]);
  }

  auto mean_over_instances = [&](auto&& per_instance) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += per_instance(i);
    return sum / static_cast<double>(n);
  };

  // ACC@1 is Potential@1 under the shared-task definitions
  report.metrics.emplace_back("ACC@1", mean_over_instances([&](std::size_t i) {
    return any_match_in_top_k(pred_norm[i], gold_sets[i], 1) ? 1.0 : 0.0;
  }));

  for (int k : cfg.acc_top1_k) {
    report.metrics.emplace_back(
        "ACC@" + std::to_string(k) + "@Top1",
        mean_over_instances([&](std::size_t i) {
          return any_match_in_top_k(pred_norm[i], top1_sets[i], k) ? 1.0 : 0.0;
        }));
  }

  for (int k : cfg.map_k) {
    report.metrics.emplace_back(
        "MAP@" + std::to_string(k), mean_over_instances([&](std::size_t i) {
          return average_precision_at_k(relevance_vector(preds[i], gold[i], k),
                                        k);
        }));
  }

  for (int k : cfg.potential_k) {
    if (k == 1) continue;  // reported as ACC@1
    report.metrics.emplace_back(
        "Potential@" + std::to_string(k),
        mean_over_instances([&](std::size_t i) {
          return any_match_in_top_k(pred_norm[i], gold_sets[i], k) ? 1.0 : 0.0;
        }));
  }

  return report;
}

EvaluationReport evaluate_files(const std::string& gold_path,
                                const std::string& run_path,
                                const MetricConfig& cfg) {
  std::ifstream gold_in(gold_path, std::ios::binary);
  if (!gold_in) throw EvalError("cannot open gold file: " + gold_path);
  std::ifstream run_in(run_path, std::ios::binary);
  if (!run_in) throw EvalError("cannot open run file: " + run_path);
  auto gold = parse_gold_tsv(gold_in, gold_path);
  auto preds = parse_run_tsv(run_in, run_path);
  return evaluate_records(gold, preds, cfg);
}

std::string report_to_json(const EvaluationReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json metrics;
  for (const auto& [name, value] : report.metrics) metrics[name] = value;
  doc["metrics"] = std::move(metrics);
  doc["instances"] = report.instances;
  return doc.dump(2) + "\n";
}

std::string report_to_table(const EvaluationReport& report) {
  std::size_t width = 0;
  for (const auto& [name, value] : report.metrics)
    width = std::max(width, name.size());
  std::ostringstream out;
  out << "Metric" << std::string(width > 6 ? width - 6 : 0, ' ') << "  Score\n";
  char buf[32];
  for (const auto& [name, value] : report.metrics) {
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    out << name << std::string(width - name.size(), ' ') << "  " << buf << "\n";
  }
  out << "Instances" << std::string(width > 9 ? width - 9 : 0, ' ') << "  "
      << report.instances << "\n";
  return out.str();
}

}  // namespace lexsimp
