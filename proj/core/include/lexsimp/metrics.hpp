#pragma once

#include <string>
#include <vector>

#include "lexsimp/dataset.hpp"

namespace lexsimp {

struct MetricConfig {
  std::vector<int> map_k = {1, 3, 5, 10};
  std::vector<int> potential_k = {1, 3, 5, 10};
  std::vector<int> acc_top1_k = {1, 2, 3};

  // throws std::invalid_argument unless every list is positive and
  // strictly increasing
  void validate() const;
};

struct EvaluationReport {
  std::vector<std::pair<std::string, double>> metrics;  // presentation order
  std::size_t instances = 0;

  double value(std::string_view name) const;  // throws when absent
  bool has(std::string_view name) const;
};

// Binary relevance of the first min(k, |preds|) predictions against the
// normalized gold annotation set.
std::vector<int> relevance_vector(const PredictionRecord& preds,
                                  const GoldInstance& gold, int k);

// AP@K = (1/K) * sum_i rel(i) * precision(i); the constant-K normalizer
// makes MAP@10 exactly half of MAP@5 for 5-substitute runs.
double average_precision_at_k(const std::vector<int>& rel, int k);

// Pairing is validated by line index: normalized (context, target) must
// match; mismatch raises EvalError naming the line.
EvaluationReport evaluate_records(const std::vector<GoldInstance>& gold,
                                  const std::vector<PredictionRecord>& preds,
                                  const MetricConfig& cfg);

EvaluationReport evaluate_files(const std::string& gold_path,
                                const std::string& run_path,
                                const MetricConfig& cfg);

std::string report_to_json(const EvaluationReport& report);
std::string report_to_table(const EvaluationReport& report);

}  // namespace lexsimp
