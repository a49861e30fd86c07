#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/candidate.hpp"

namespace lexsimp {

struct KgNode {
  std::string primary_label;
  std::vector<std::string> aliases;
  std::string lang;  // optional tag column, empty when absent
};

struct KgEdge {
  std::string src;
  std::string relation;
  std::string dst;
};

struct KgLoadReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t aliases = 0;
};

struct KgConfig {
  int limit = 15;
  std::string relation_name = "synonym";
  std::string lang = "en";  // candidates restricted to this tag when tagged
};

class SynonymGraph {
 public:
  // Nodes TSV: node_id \t primary_label \t alias1|alias2|... [\t lang]
  // Edges TSV: src_id \t relation \t dst_id
  static SynonymGraph load(std::istream& nodes_in, const std::string& nodes_name,
                           std::istream& edges_in, const std::string& edges_name,
                           KgLoadReport* report = nullptr);
  static SynonymGraph load_files(const std::string& nodes_path,
                                 const std::string& edges_path,
                                 KgLoadReport* report = nullptr);

  const std::map<std::string, KgNode>& nodes() const { return nodes_; }
  const std::vector<KgEdge>& edges() const { return edges_; }

  // Node ids carrying the normalized label or alias.
  const std::set<std::string>* nodes_for_label(std::string_view normalized) const;

  // Neighbor ids over the relation, both directions, sorted.
  std::vector<std::string> neighbors(const std::string& node_id,
                                     std::string_view relation) const;

 private:
  std::map<std::string, KgNode> nodes_;
  std::vector<KgEdge> edges_;
  std::map<std::string, std::set<std::string>> label_index_;
  std::map<std::string, std::map<std::string, std::set<std::string>>>
      adjacency_;  // node -> relation -> neighbor ids
};

// Ranks candidate nodes for a mention; output is a subset of the input.
class EntityLinker {
 public:
  virtual ~EntityLinker() = default;
  virtual std::vector<std::string> link(
      std::string_view target, std::string_view context,
      const std::set<std::string>& candidates) const = 0;
};

// Exact primary-label match first, then alias match, then smaller id.
class LexicalLinker : public EntityLinker {
 public:
  explicit LexicalLinker(const SynonymGraph& graph) : graph_(&graph) {}
  std::vector<std::string> link(
      std::string_view target, std::string_view context,
      const std::set<std::string>& candidates) const override;

 private:
  const SynonymGraph* graph_;
};

std::optional<std::string> link_entity(const SynonymGraph& graph,
                                       const EntityLinker& linker,
                                       std::string_view target,
                                       std::string_view context);

// Primary labels of synonym neighbors, the queried node's own labels
// excluded, deduplicated, sorted, truncated to limit.
std::vector<Candidate> synonym_candidates(const SynonymGraph& graph,
                                          const std::string& node_id,
                                          const KgConfig& cfg);

}  // namespace lexsimp
