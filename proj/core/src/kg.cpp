#include "lexsimp/kg.hpp"

#include <algorithm>
#include <fstream>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

}  // namespace

SynonymGraph SynonymGraph::load(std::istream& nodes_in,
                                const std::string& nodes_name,
                                std::istream& edges_in,
                                const std::string& edges_name,
                                KgLoadReport* report) {
  SynonymGraph g;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(nodes_in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 2)
      throw ParseError(nodes_name, line_no, "expected node_id\\tlabel[\\taliases]");
    std::string id(trim(fields[0]));
    if (id.empty()) throw ParseError(nodes_name, line_no, "empty node id");
    KgNode node;
    node.primary_label = std::string(trim(fields[1]));
    if (node.primary_label.empty())
      throw ParseError(nodes_name, line_no, "empty primary label");
    if (fields.size() >= 3) {
      for (auto alias : split(fields[2], '|')) {
        auto trimmed = trim(alias);
        if (!trimmed.empty()) node.aliases.emplace_back(trimmed);
      }
    }
    if (fields.size() >= 4) node.lang = std::string(trim(fields[3]));
    auto [it, inserted] = g.nodes_.emplace(id, std::move(node));
    if (!inserted)
      throw ParseError(nodes_name, line_no, "duplicate node id \"" + id + "\"");
  }

  line_no = 0;
  while (std::getline(edges_in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw ParseError(edges_name, line_no, "expected src\\trelation\\tdst");
    KgEdge edge{std::string(trim(fields[0])), std::string(trim(fields[1])),
                std::string(trim(fields[2]))};
    if (!g.nodes_.count(edge.src))
      throw ParseError(edges_name, line_no,
                       "edge references unknown node \"" + edge.src + "\"");
    if (!g.nodes_.count(edge.dst))
      throw ParseError(edges_name, line_no,
                       "edge references unknown node \"" + edge.dst + "\"");
    g.adjacency_[edge.src][edge.relation].insert(edge.dst);
    g.adjacency_[edge.dst][edge.relation].insert(edge.src);
    g.edges_.push_back(std::move(edge));
  }

  std::size_t alias_count = 0;
  for (const auto& [id, node] : g.nodes_) {
    g.label_index_[normalize(node.primary_label)].insert(id);
    for (const auto& alias : node.aliases) {
      g.label_index_[normalize(alias)].insert(id);
      ++alias_count;
    }
  }
  if (report) {
    report->nodes = g.nodes_.size();
    report->edges = g.edges_.size();
    report->aliases = alias_count;
  }
  return g;
}

SynonymGraph SynonymGraph::load_files(const std::string& nodes_path,
                                      const std::string& edges_path,
                                      KgLoadReport* report) {
  std::ifstream nodes_in(nodes_path, std::ios::binary);
  if (!nodes_in) throw LoadError("cannot open KG nodes file: " + nodes_path);
  std::ifstream edges_in(edges_path, std::ios::binary);
  if (!edges_in) throw LoadError("cannot open KG edges file: " + edges_path);
  return load(nodes_in, nodes_path, edges_in, edges_path, report);
}

const std::set<std::string>* SynonymGraph::nodes_for_label(
    std::string_view normalized) const {
  auto it = label_index_.find(std::string(normalized));
  if (it == label_index_.end()) return nullptr;
  return &it->second;
}

std::vector<std::string> SynonymGraph::neighbors(const std::string& node_id,
                                                 std::string_view relation) const {
  std::vector<std::string> out;
  auto it = adjacency_.find(node_id);
  if (it == adjacency_.end()) return out;
  auto rel = it->second.find(std::string(relation));
  if (rel == it->second.end()) return out;
  out.assign(rel->second.begin(), rel->second.end());
  return out;
}

std::vector<std::string> LexicalLinker::link(
    std::string_view target, std::string_view /*context*/,
    const std::set<std::string>& candidates) const {
  std::string norm = normalize(target);
  std::vector<std::string> ranked(candidates.begin(), candidates.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const std::string& a, const std::string& b) {
                     const auto& na = graph_->nodes().at(a);
                     const auto& nb = graph_->nodes().at(b);
                     bool ea = normalize(na.primary_label) == norm;
                     bool eb = normalize(nb.primary_label) == norm;
                     if (ea != eb) return ea;
                     return a < b;  // candidates are all label or alias hits
                   });
  return ranked;
}

std::optional<std::string> link_entity(const SynonymGraph& graph,
                                       const EntityLinker& linker,
                                       std::string_view target,
                                       std::string_view context) {
  const auto* candidates = graph.nodes_for_label(normalize(target));
  if (!candidates || candidates->empty()) return std::nullopt;
  auto ranked = linker.link(target, context, *candidates);
  if (ranked.empty()) return std::nullopt;
  return ranked.front();
}

std::vector<Candidate> synonym_candidates(const SynonymGraph& graph,
                                          const std::string& node_id,
                                          const KgConfig& cfg) {
  std::vector<Candidate> out;
  auto it = graph.nodes().find(node_id);
  if (it == graph.nodes().end()) return out;

  std::set<std::string> own_labels;
  own_labels.insert(normalize(it->second.primary_label));
  for (const auto& alias : it->second.aliases)
    own_labels.insert(normalize(alias));

  std::set<std::string> labels;
  for (const auto& neighbor : graph.neighbors(node_id, cfg.relation_name)) {
    const auto& node = graph.nodes().at(neighbor);
    if (!node.lang.empty() && !cfg.lang.empty() && node.lang != cfg.lang)
      continue;
    std::string label = normalize(node.primary_label);
    if (label.empty() || own_labels.count(label)) continue;
    labels.insert(label);
  }
  for (const auto& label : labels) {
    if (out.size() >= static_cast<std::size_t>(cfg.limit)) break;
    Candidate cand;
    cand.lemma = label;
    cand.surface = label;
    cand.source = ModuleId::Kg;
    cand.module_score = 1.0;  // the re-ranker supplies real ordering
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace lexsimp
