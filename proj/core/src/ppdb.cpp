#include "lexsimp/ppdb.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

constexpr std::string_view kDelimiter = " ||| ";
constexpr std::string_view kScoreKey = "PPDB2.0Score=";

std::vector<std::string_view> split_record(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(kDelimiter, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + kDelimiter.size();
  }
  return fields;
}

bool parse_score(std::string_view features, double& out) {
  std::size_t pos = features.find(kScoreKey);
  if (pos == std::string_view::npos) return false;
  std::string_view value = features.substr(pos + kScoreKey.size());
  std::size_t end = value.find(' ');
  if (end != std::string_view::npos) value = value.substr(0, end);
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  return ec == std::errc() && std::isfinite(out);
}

}  // namespace

bool tag_compatible(std::string_view syntactic_tag, POSCategory pos) {
  switch (pos) {
    case POSCategory::Noun: return syntactic_tag.starts_with("[N");
    case POSCategory::Adj: return syntactic_tag.starts_with("[J");
    case POSCategory::Verb: return syntactic_tag.starts_with("[V");
    default: return true;
  }
}

ParaphraseIndex ParaphraseIndex::load(std::istream& in,
                                      const std::string& source_name,
                                      PpdbLoadReport* report) {
  if (!in) throw LoadError("cannot read paraphrase data: " + source_name);
  PpdbLoadReport local;
  PpdbLoadReport& rep = report ? *report : local;

  // (source, normalized target) -> entry with max quality
  std::unordered_map<std::string, std::map<std::string, ParaphraseEntry>> best;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_record(line);
    if (fields.size() < 6) {
      ++rep.skipped_lines;
      continue;
    }
    ParaphraseEntry entry;
    entry.syntactic_tag = std::string(trim(fields[0]));
    entry.source = normalize(fields[1]);
    entry.target = normalize(fields[2]);
    entry.entailment = std::string(trim(fields.back()));
    if (entry.source.empty() || entry.target.empty()) {
      ++rep.skipped_lines;
      continue;
    }
    if (entry.source == entry.target) {
      ++rep.self_paraphrases;
      continue;
    }
    if (!parse_score(fields[3], entry.quality)) {
      entry.quality = 0.0;
      ++rep.missing_score;
    }
    auto& slot = best[entry.source];
    auto it = slot.find(entry.target);
    if (it == slot.end()) {
      slot.emplace(entry.target, std::move(entry));
    } else {
      ++rep.collapsed_duplicates;
      if (entry.quality > it->second.quality) it->second = std::move(entry);
    }
  }
  if (in.bad()) throw LoadError("read failure on " + source_name);

  ParaphraseIndex index;
  for (auto& [source, targets] : best) {
    std::vector<ParaphraseEntry> list;
    list.reserve(targets.size());
    for (auto& [target, entry] : targets) list.push_back(std::move(entry));
    std::sort(list.begin(), list.end(),
              [](const ParaphraseEntry& a, const ParaphraseEntry& b) {
                if (a.quality != b.quality) return a.quality > b.quality;
                return a.target < b.target;
              });
    index.entry_count_ += list.size();
    index.index_.emplace(source, std::move(list));
  }
  rep.entries = index.entry_count_;
  return index;
}

ParaphraseIndex ParaphraseIndex::load_file(const std::string& path,
                                           PpdbLoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open paraphrase data: " + path);
  return load(in, path, report);
}

const std::vector<ParaphraseEntry>* ParaphraseIndex::entries_for(
    std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return nullptr;
  return &it->second;
}

std::vector<Candidate> ParaphraseIndex::paraphrases_for(std::string_view word,
                                                        POSCategory pos,
                                                        int limit) const {
  std::vector<Candidate> out;
  const auto* entries = entries_for(normalize(word));
  if (!entries) return out;
  for (const auto& entry : *entries) {
    if (out.size() >= static_cast<std::size_t>(limit)) break;
    if (!tag_compatible(entry.syntactic_tag, pos)) continue;
    Candidate cand;
    cand.lemma = entry.target;
    cand.surface = entry.target;
    cand.source = ModuleId::Ppdb;
    cand.module_score = entry.quality;
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace lexsimp
