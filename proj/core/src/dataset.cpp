#include "lexsimp/dataset.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

// Reads lines handling \n and \r\n; strips a UTF-8 BOM on the first line.
bool next_line(std::istream& in, std::string& line, bool& first) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (first) {
    first = false;
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0)
      line.erase(0, 3);
  }
  return true;
}

Instance make_instance(std::string_view context, std::string_view target,
                       const std::string& source, std::size_t line_no) {
  if (context.find('\n') != std::string_view::npos)
    throw ParseError(source, line_no, "context contains a newline");
  if (target.find('\t') != std::string_view::npos ||
      target.find('\n') != std::string_view::npos)
    throw ParseError(source, line_no, "target contains tab or newline");
  if (target.empty())
    throw ParseError(source, line_no, "empty target field");
  auto span = locate_target_span(context, target);
  if (!span)
    throw ParseError(source, line_no,
                     "target \"" + std::string(target) +
                         "\" has no whole-token occurrence in context");
  Instance inst;
  inst.context = std::string(context);
  inst.target = std::string(target);
  inst.target_span = *span;
  return inst;
}

}  // namespace

std::string_view pos_name(POSCategory pos) {
  switch (pos) {
    case POSCategory::Verb: return "VERB";
    case POSCategory::Noun: return "NOUN";
    case POSCategory::Adj: return "ADJ";
    case POSCategory::Other: return "OTHER";
    case POSCategory::Unassigned: return "UNASSIGNED";
  }
  return "UNASSIGNED";
}

std::optional<POSCategory> pos_from_name(std::string_view name) {
  std::string n = normalize(name);
  if (n == "verb" || n == "v") return POSCategory::Verb;
  if (n == "noun" || n == "n") return POSCategory::Noun;
  if (n == "adj" || n == "adjective" || n == "j") return POSCategory::Adj;
  if (n == "other" || n == "o") return POSCategory::Other;
  if (n == "unassigned") return POSCategory::Unassigned;
  return std::nullopt;
}

std::optional<Span> locate_target_span(std::string_view context,
                                       std::string_view target) {
  if (context.empty() || target.empty()) return std::nullopt;
  CodepointRun ctx = decode_utf8(context);
  CodepointRun tgt = decode_utf8(target);
  const std::size_t n = ctx.codepoints.size();
  const std::size_t m = tgt.codepoints.size();
  if (m == 0 || m > n) return std::nullopt;

  std::vector<char32_t> ctx_folded(n), tgt_folded(m);
  for (std::size_t i = 0; i < n; ++i) ctx_folded[i] = fold_codepoint(ctx.codepoints[i]);
  for (std::size_t i = 0; i < m; ++i) tgt_folded[i] = fold_codepoint(tgt.codepoints[i]);

  for (std::size_t i = 0; i + m <= n; ++i) {
    if (!std::equal(tgt_folded.begin(), tgt_folded.end(), ctx_folded.begin() + i))
      continue;
    bool left_ok = i == 0 || !is_word_codepoint(ctx.codepoints[i - 1]);
    bool right_ok = i + m == n || !is_word_codepoint(ctx.codepoints[i + m]);
    if (left_ok && right_ok)
      return Span{ctx.offsets[i], ctx.offsets[i + m]};
  }
  return std::nullopt;
}

std::vector<GoldInstance> parse_gold_tsv(std::istream& in,
                                         const std::string& source_name,
                                         ParseWarnings* warnings) {
  std::vector<GoldInstance> out;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (next_line(in, line, first)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3)
      throw ParseError(source_name, line_no,
                       "expected context, target and at least one annotation (" +
                           std::to_string(fields.size()) + " fields)");
    GoldInstance gold;
    gold.instance = make_instance(fields[0], fields[1], source_name, line_no);
    gold.line = line_no;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      std::string_view ann = trim(fields[i]);
      if (ann.empty()) {
        if (warnings) ++warnings->dropped_annotations;
        continue;
      }
      gold.annotations.emplace_back(ann);
    }
    if (gold.annotations.empty())
      throw ParseError(source_name, line_no, "no non-empty annotations");
    out.push_back(std::move(gold));
  }
  return out;
}

std::vector<PredictionRecord> parse_run_tsv(std::istream& in,
                                            const std::string& source_name,
                                            ParseWarnings* warnings) {
  std::vector<PredictionRecord> out;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (next_line(in, line, first)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() < 2)
      throw ParseError(source_name, line_no,
                       "expected at least context and target fields");
    if (fields[1].empty())
      throw ParseError(source_name, line_no, "empty target field");
    PredictionRecord rec;
    rec.context = std::string(fields[0]);
    rec.target = std::string(fields[1]);
    rec.line = line_no;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      std::string_view sub = trim(fields[i]);
      if (sub.empty()) continue;
      if (!seen.insert(normalize(sub)).second) continue;
      if (rec.substitutes.size() == kMaxSubstitutes) {
        if (warnings) ++warnings->truncated_records;
        break;
      }
      rec.substitutes.emplace_back(sub);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_run_tsv(const std::vector<PredictionRecord>& records,
                   std::ostream& out) {
  for (const auto& rec : records) {
    if (rec.substitutes.size() > kMaxSubstitutes)
      throw std::invalid_argument("prediction record exceeds " +
                                  std::to_string(kMaxSubstitutes) +
                                  " substitutes");
    std::unordered_set<std::string> seen;
    for (const auto& sub : rec.substitutes) {
      if (sub.find('\t') != std::string::npos ||
          sub.find('\n') != std::string::npos)
        throw std::invalid_argument("substitute contains tab or newline");
      if (!seen.insert(normalize(sub)).second)
        throw std::invalid_argument("duplicate substitute \"" + sub + "\"");
    }
    out << rec.context << '\t' << rec.target;
    for (const auto& sub : rec.substitutes) out << '\t' << sub;
    out << '\n';
    if (!out) throw LoadError("run file write failed");
  }
}

std::vector<Instance> parse_dataset_tsv(std::istream& in,
                                        const std::string& source_name) {
  std::vector<Instance> out;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (next_line(in, line, first)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_tabs(line);
    if (fields.size() < 2)
      throw ParseError(source_name, line_no,
                       "expected at least context and target fields");
    out.push_back(make_instance(fields[0], fields[1], source_name, line_no));
  }
  return out;
}

std::set<std::string> gold_top1_set(const GoldInstance& gold) {
  std::map<std::string, std::size_t> votes;
  for (const auto& ann : gold.annotations) ++votes[normalize(ann)];
  std::size_t best = 0;
  for (const auto& [text, count] : votes) best = std::max(best, count);
  std::set<std::string> top;
  for (const auto& [text, count] : votes)
    if (count == best) top.insert(text);
  return top;
}

}  // namespace lexsimp
