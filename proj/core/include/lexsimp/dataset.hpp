#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/errors.hpp"

namespace lexsimp {

enum class POSCategory { Verb, Noun, Adj, Other, Unassigned };

std::string_view pos_name(POSCategory pos);
std::optional<POSCategory> pos_from_name(std::string_view name);

// Byte offsets [begin, end) into the UTF-8 context string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool operator==(const Span&) const = default;
};

// One task item: a sentence with a single marked complex word.
struct Instance {
  std::string context;
  std::string target;
  Span target_span;
  POSCategory pos = POSCategory::Unassigned;

  std::string_view surface() const {
    return std::string_view(context).substr(target_span.begin,
                                            target_span.end - target_span.begin);
  }
};

// Gold annotations keep duplicates: each occurrence is one annotator vote.
struct GoldInstance {
  Instance instance;
  std::vector<std::string> annotations;
  std::size_t line = 0;  // 1-based source line, for error reporting
};

struct PredictionRecord {
  std::string context;
  std::string target;
  std::vector<std::string> substitutes;  // highest confidence first, <= 10
  std::size_t line = 0;
};

inline constexpr std::size_t kMaxSubstitutes = 10;

struct ParseWarnings {
  std::size_t truncated_records = 0;   // prediction lists cut at 10
  std::size_t dropped_annotations = 0; // empty-after-trim gold fields
};

// First case-insensitive whole-token occurrence of target in context,
// bounded by non-letter codepoints or string edges. Empty when absent.
std::optional<Span> locate_target_span(std::string_view context,
                                       std::string_view target);

// Gold TSV: context \t target \t ann1 \t ann2 ...
std::vector<GoldInstance> parse_gold_tsv(std::istream& in,
                                         const std::string& source_name,
                                         ParseWarnings* warnings = nullptr);

// Run TSV: context \t target \t sub1 ... subN (N may be 0).
std::vector<PredictionRecord> parse_run_tsv(std::istream& in,
                                            const std::string& source_name,
                                            ParseWarnings* warnings = nullptr);

// Byte-exact writer; round-trips through parse_run_tsv.
void write_run_tsv(const std::vector<PredictionRecord>& records,
                   std::ostream& out);

// Dataset for `run`: gold files are accepted, annotations ignored.
std::vector<Instance> parse_dataset_tsv(std::istream& in,
                                        const std::string& source_name);

// All annotations (normalized) holding the maximal vote count.
std::set<std::string> gold_top1_set(const GoldInstance& gold);

}  // namespace lexsimp
