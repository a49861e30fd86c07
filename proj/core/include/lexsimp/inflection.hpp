#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "lexsimp/dataset.hpp"

namespace lexsimp {

enum class InflectionForm {
  // verbs
  Base,
  ThirdSg,
  Past,
  Gerund,
  PastPart,
  // nouns
  Singular,
  Plural,
  // adjectives
  Positive,
  Comparative,
  Superlative,
  Unknown,
};

std::string_view form_name(InflectionForm form);
std::optional<InflectionForm> form_from_name(std::string_view name);

// Coarse category a form belongs to (Verb, Noun, Adj; Unknown -> Other).
POSCategory form_category(InflectionForm form);

// Base/identity form for a category.
InflectionForm base_form(POSCategory pos);

struct DetectedForm {
  std::string lemma;
  InflectionForm form = InflectionForm::Unknown;
};

// Bundled exceptions: irregular verbs/nouns/adjectives plus words whose
// spelling defeats the suffix rules. TSV: lemma \t form \t surface.
class IrregularTable {
 public:
  static IrregularTable load(std::istream& in, const std::string& source_name);
  static IrregularTable load_file(const std::string& path);

  std::optional<std::string> surface_for(std::string_view lemma,
                                         InflectionForm form) const;
  std::optional<DetectedForm> lemma_for(std::string_view surface,
                                        POSCategory pos) const;

  std::size_t size() const { return forward_.size(); }
  std::size_t conflicting_inverse_entries() const { return inverse_conflicts_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::string, int>& k) const {
      return std::hash<std::string>()(k.first) * 31u +
             static_cast<std::size_t>(k.second);
    }
  };
  std::unordered_map<std::pair<std::string, int>, std::string, KeyHash> forward_;
  std::unordered_map<std::pair<std::string, int>, DetectedForm, KeyHash> inverse_;
  std::size_t inverse_conflicts_ = 0;
};

// Morphological form of a single-token surface. Irregular table first,
// then suffix rules verified by regeneration; falls back to the base
// form of the category. OTHER/UNASSIGNED targets come back Unknown.
DetectedForm detect_form(std::string_view surface, POSCategory pos,
                         const IrregularTable& table);

// Inflect a base-form lemma. Multiword input inflects the first token
// only (verb-particle convention). Unknown form passes through.
std::string inflect_to(std::string_view lemma, InflectionForm form,
                       const IrregularTable& table);

// Vowel-group approximation used for the periphrastic more/most rule.
std::size_t approximate_syllables(std::string_view word);

}  // namespace lexsimp
