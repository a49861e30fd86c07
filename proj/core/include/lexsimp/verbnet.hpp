#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexsimp {

// One verb class: semantically similar verbs share a class; classes may
// nest as subclasses whose ids extend the parent id.
struct VerbClass {
  std::string class_id;
  std::set<std::string> members;
  std::vector<std::string> subclass_ids;
  std::optional<std::string> parent_id;
};

struct VerbnetLoadReport {
  std::size_t files = 0;
  std::size_t classes = 0;
  std::size_t member_entries = 0;  // with multiplicity across classes
  std::size_t distinct_lemmas = 0;
  std::size_t empty_classes = 0;
};

class VerbLexicon {
 public:
  // Parses every .xml file in the directory (lexicographic order).
  // Files carry a VNCLASS root with MEMBERS/MEMBER name attributes and
  // nested SUBCLASSES/VNSUBCLASS elements.
  static VerbLexicon load(const std::string& directory,
                          VerbnetLoadReport* report = nullptr);

  // All classes (including subclasses) whose member set contains lemma.
  std::set<std::string> classes_for_verb(std::string_view lemma) const;

  // Union of member sets; with include_subclasses, transitively adds
  // subclass members. Throws std::invalid_argument for unknown ids.
  std::set<std::string> members_of_classes(const std::set<std::string>& ids,
                                           bool include_subclasses) const;

  const std::map<std::string, VerbClass>& classes() const { return classes_; }
  bool empty() const { return classes_.empty(); }

  bool operator==(const VerbLexicon&) const = default;

 private:
  std::map<std::string, VerbClass> classes_;
  std::map<std::string, std::set<std::string>> inverse_;  // lemma -> class ids
};

}  // namespace lexsimp
