#include "lexsimp/verbnet.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

namespace pt = boost::property_tree;
namespace fs = std::filesystem;

std::string member_lemma(std::string name) {
  // multi-word members use underscores in the source format
  std::replace(name.begin(), name.end(), '_', ' ');
  return normalize(name);
}

void parse_class(const pt::ptree& node, const std::string& file,
                 std::optional<std::string> parent_id,
                 std::map<std::string, VerbClass>& classes) {
  auto id = node.get_optional<std::string>("<xmlattr>.ID");
  if (!id || id->empty())
    throw LoadError(file + ": class element without an ID attribute");
  if (classes.count(*id))
    throw LoadError(file + ": duplicate class id \"" + *id + "\"");

  VerbClass cls;
  cls.class_id = *id;
  cls.parent_id = parent_id;
  if (auto members = node.get_child_optional("MEMBERS")) {
    for (const auto& kv : *members) {
      if (kv.first != "MEMBER") continue;
      auto name = kv.second.get_optional<std::string>("<xmlattr>.name");
      if (!name || name->empty())
        throw LoadError(file + ": MEMBER without a name attribute in class \"" +
                        *id + "\"");
      cls.members.insert(member_lemma(*name));
    }
  }
  if (auto subs = node.get_child_optional("SUBCLASSES")) {
    for (const auto& kv : *subs) {
      if (kv.first != "VNSUBCLASS") continue;
      auto sub_id = kv.second.get_optional<std::string>("<xmlattr>.ID");
      if (sub_id) cls.subclass_ids.push_back(*sub_id);
      parse_class(kv.second, file, cls.class_id, classes);
    }
  }
  classes.emplace(cls.class_id, std::move(cls));
}

void check_acyclic(const std::map<std::string, VerbClass>& classes) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::string, int> state;
  std::vector<std::pair<std::string, std::size_t>> stack;
  for (const auto& [id, cls] : classes) {
    if (state[id] != 0) continue;
    stack.push_back({id, 0});
    state[id] = 1;
    while (!stack.empty()) {
      auto& [cur, next] = stack.back();
      const auto& subs = classes.at(cur).subclass_ids;
      if (next == subs.size()) {
        state[cur] = 2;
        stack.pop_back();
        continue;
      }
      const std::string& child = subs[next++];
      auto it = classes.find(child);
      if (it == classes.end())
        throw LoadError("subclass id \"" + child + "\" of \"" + cur +
                        "\" is not a known class");
      if (state[child] == 1)
        throw LoadError("subclass cycle through \"" + child + "\"");
      if (state[child] == 0) {
        state[child] = 1;
        stack.push_back({child, 0});
      }
    }
  }
}

}  // namespace

VerbLexicon VerbLexicon::load(const std::string& directory,
                              VerbnetLoadReport* report) {
  if (!fs::is_directory(directory))
    throw LoadError("verb lexicon directory not found: " + directory);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".xml")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  VerbLexicon lex;
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path.string());
    pt::ptree tree;
    try {
      pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
      throw LoadError(path.string() + ": malformed XML: " + e.message());
    }
    auto root = tree.get_child_optional("VNCLASS");
    if (!root)
      throw LoadError(path.string() + ": missing VNCLASS root element");
    parse_class(*root, path.string(), std::nullopt, lex.classes_);
  }

  check_acyclic(lex.classes_);

  for (const auto& [id, cls] : lex.classes_)
    for (const auto& lemma : cls.members) lex.inverse_[lemma].insert(id);

  if (report) {
    report->files = files.size();
    report->classes = lex.classes_.size();
    report->distinct_lemmas = lex.inverse_.size();
    for (const auto& [id, cls] : lex.classes_) {
      report->member_entries += cls.members.size();
      if (cls.members.empty()) ++report->empty_classes;
    }
  }
  return lex;
}

std::set<std::string> VerbLexicon::classes_for_verb(std::string_view lemma) const {
  auto it = inverse_.find(std::string(lemma));
  if (it == inverse_.end()) return {};
  return it->second;
}

std::set<std::string> VerbLexicon::members_of_classes(
    const std::set<std::string>& ids, bool include_subclasses) const {
  std::set<std::string> out;
  std::vector<std::string> work(ids.begin(), ids.end());
  std::set<std::string> seen;
  while (!work.empty()) {
    std::string id = std::move(work.back());
    work.pop_back();
    if (!seen.insert(id).second) continue;
    auto it = classes_.find(id);
    if (it == classes_.end())
      throw std::invalid_argument("unknown verb class id \"" + id + "\"");
    out.insert(it->second.members.begin(), it->second.members.end());
    if (include_subclasses)
      for (const auto& sub : it->second.subclass_ids) work.push_back(sub);
  }
  return out;
}

}  // namespace lexsimp
