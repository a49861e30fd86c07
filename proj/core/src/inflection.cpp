#include "lexsimp/inflection.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "lexsimp/errors.hpp"
#include "lexsimp/text_norm.hpp"

namespace lexsimp {

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_vowel_y(char c) { return is_vowel(c) || c == 'y'; }

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Consonant doubling applies to monosyllables ending in a single vowel
// followed by a single consonant (not w/x/y).
bool doubles_final_consonant(std::string_view w) {
  if (w.size() < 2) return false;
  char last = w.back();
  if (is_vowel_y(last) || last == 'w' || last == 'x') return false;
  char prev = w[w.size() - 2];
  if (!is_vowel(prev)) return false;
  if (w.size() >= 3 && is_vowel(w[w.size() - 3])) return false;  // "rain", "seem"
  return approximate_syllables(w) == 1;
}

bool ends_consonant_y(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && !is_vowel(w[w.size() - 2]);
}

bool sibilant_ending(std::string_view w) {
  return ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
         ends_with(w, "ch") || ends_with(w, "sh");
}

std::string add_s(std::string_view w, bool verb) {
  std::string out(w);
  if (sibilant_ending(w) || (verb && ends_with(w, "o"))) return out + "es";
  if (ends_consonant_y(w)) {
    out.pop_back();
    return out + "ies";
  }
  return out + "s";
}

std::string add_ed(std::string_view w) {
  std::string out(w);
  if (ends_with(w, "e")) return out + "d";
  if (ends_consonant_y(w)) {
    out.pop_back();
    return out + "ied";
  }
  if (doubles_final_consonant(w)) return out + w.back() + "ed";
  return out + "ed";
}

std::string add_ing(std::string_view w) {
  std::string out(w);
  if (ends_with(w, "ie")) {
    out.resize(out.size() - 2);
    return out + "ying";
  }
  if (ends_with(w, "e") && !ends_with(w, "ee") && !ends_with(w, "oe") &&
      !ends_with(w, "ye")) {
    out.pop_back();
    return out + "ing";
  }
  if (doubles_final_consonant(w)) return out + w.back() + "ing";
  return out + "ing";
}

std::string add_er_est(std::string_view w, bool superlative) {
  const char* tail = superlative ? "est" : "er";
  if (approximate_syllables(w) >= 3)
    return std::string(superlative ? "most " : "more ") + std::string(w);
  std::string out(w);
  if (ends_with(w, "e")) return out + (superlative ? "st" : "r");
  if (ends_consonant_y(w)) {
    out.pop_back();
    return out + "i" + tail;
  }
  if (doubles_final_consonant(w)) return out + w.back() + tail;
  return out + tail;
}

std::string inflect_token(std::string_view lemma, InflectionForm form,
                          const IrregularTable& table) {
  if (auto irr = table.surface_for(lemma, form)) return *irr;
  switch (form) {
    case InflectionForm::Base:
    case InflectionForm::Singular:
    case InflectionForm::Positive:
    case InflectionForm::Unknown:
      return std::string(lemma);
    case InflectionForm::ThirdSg:
      return add_s(lemma, /*verb=*/true);
    case InflectionForm::Plural:
      return add_s(lemma, /*verb=*/false);
    case InflectionForm::Past:
    case InflectionForm::PastPart:
      return add_ed(lemma);
    case InflectionForm::Gerund:
      return add_ing(lemma);
    case InflectionForm::Comparative:
      return add_er_est(lemma, false);
    case InflectionForm::Superlative:
      return add_er_est(lemma, true);
  }
  return std::string(lemma);
}

// Candidate lemma reversals for one suffix family, most specific first.
// A candidate counts only if regenerating it reproduces the surface.
std::optional<DetectedForm> try_candidates(
    const std::vector<std::string>& candidates, InflectionForm form,
    std::string_view surface, const IrregularTable& table) {
  for (const auto& cand : candidates) {
    if (cand.size() < 2) continue;
    if (inflect_token(cand, form, table) == surface)
      return DetectedForm{cand, form};
  }
  return std::nullopt;
}

void push_undoubled(std::vector<std::string>& out, std::string_view stem) {
  if (stem.size() < 3) return;
  char a = stem[stem.size() - 1];
  char b = stem[stem.size() - 2];
  if (a != b || is_vowel_y(a)) return;
  // lemmas legitimately end in ll/ss/ff/zz (fall, pass, stuff, buzz)
  if (a == 'l' || a == 's' || a == 'f' || a == 'z') return;
  out.emplace_back(stem.substr(0, stem.size() - 1));
}

std::optional<DetectedForm> detect_verb(std::string_view w,
                                        const IrregularTable& table) {
  if (w.size() > 4 && ends_with(w, "ing")) {
    std::string_view stem = w.substr(0, w.size() - 3);
    std::vector<std::string> cands;
    push_undoubled(cands, stem);
    cands.emplace_back(stem);
    cands.emplace_back(std::string(stem) + "e");
    if (auto hit = try_candidates(cands, InflectionForm::Gerund, w, table))
      return hit;
  }
  if (w.size() > 3 && ends_with(w, "ed")) {
    std::string_view stem = w.substr(0, w.size() - 2);
    std::vector<std::string> cands;
    push_undoubled(cands, stem);
    if (ends_with(stem, "i"))
      cands.emplace_back(std::string(stem.substr(0, stem.size() - 1)) + "y");
    cands.emplace_back(stem);
    cands.emplace_back(std::string(stem) + "e");
    if (auto hit = try_candidates(cands, InflectionForm::Past, w, table))
      return hit;
  }
  return std::nullopt;
}

// Plural and third-person singular share spelling rules.
std::optional<DetectedForm> detect_s_form(std::string_view w,
                                          InflectionForm form,
                                          const IrregularTable& table) {
  if (w.size() < 3 || !ends_with(w, "s") || ends_with(w, "ss"))
    return std::nullopt;
  std::vector<std::string> cands;
  if (w.size() >= 5 && ends_with(w, "ies"))
    cands.emplace_back(std::string(w.substr(0, w.size() - 3)) + "y");
  if (ends_with(w, "sses") || ends_with(w, "zzes") || ends_with(w, "xes") ||
      ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "oes"))
    cands.emplace_back(w.substr(0, w.size() - 2));
  // plain -s needs a lemma of length >= 3 ("gas" is not "ga" + s)
  if (w.size() >= 4) cands.emplace_back(w.substr(0, w.size() - 1));
  if (ends_with(w, "es")) cands.emplace_back(w.substr(0, w.size() - 2));
  return try_candidates(cands, form, w, table);
}

std::optional<DetectedForm> detect_adj(std::string_view w,
                                       const IrregularTable& table) {
  for (auto [suffix, form] :
       {std::pair<std::string_view, InflectionForm>{"est", InflectionForm::Superlative},
        std::pair<std::string_view, InflectionForm>{"er", InflectionForm::Comparative}}) {
    if (w.size() <= suffix.size() + 1 || !ends_with(w, suffix)) continue;
    std::string_view stem = w.substr(0, w.size() - suffix.size());
    std::vector<std::string> cands;
    push_undoubled(cands, stem);
    if (ends_with(stem, "i"))
      cands.emplace_back(std::string(stem.substr(0, stem.size() - 1)) + "y");
    // soft consonant pairs point at an elided e: "larg(e)r", "dens(e)r"
    if (stem.size() >= 2 && !is_vowel(stem[stem.size() - 2])) {
      char last = stem.back();
      if (last == 'c' || last == 'g' || last == 's' || last == 'v' || last == 'z')
        cands.emplace_back(std::string(stem) + "e");
    }
    cands.emplace_back(stem);
    cands.emplace_back(std::string(stem) + "e");
    if (auto hit = try_candidates(cands, form, w, table)) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::string_view form_name(InflectionForm form) {
  switch (form) {
    case InflectionForm::Base: return "base";
    case InflectionForm::ThirdSg: return "third_sg";
    case InflectionForm::Past: return "past";
    case InflectionForm::Gerund: return "gerund";
    case InflectionForm::PastPart: return "past_part";
    case InflectionForm::Singular: return "singular";
    case InflectionForm::Plural: return "plural";
    case InflectionForm::Positive: return "positive";
    case InflectionForm::Comparative: return "comparative";
    case InflectionForm::Superlative: return "superlative";
    case InflectionForm::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<InflectionForm> form_from_name(std::string_view name) {
  static const std::array<InflectionForm, 11> all = {
      InflectionForm::Base,       InflectionForm::ThirdSg,
      InflectionForm::Past,       InflectionForm::Gerund,
      InflectionForm::PastPart,   InflectionForm::Singular,
      InflectionForm::Plural,     InflectionForm::Positive,
      InflectionForm::Comparative, InflectionForm::Superlative,
      InflectionForm::Unknown};
  for (auto f : all)
    if (form_name(f) == name) return f;
  return std::nullopt;
}

POSCategory form_category(InflectionForm form) {
  switch (form) {
    case InflectionForm::Base:
    case InflectionForm::ThirdSg:
    case InflectionForm::Past:
    case InflectionForm::Gerund:
    case InflectionForm::PastPart:
      return POSCategory::Verb;
    case InflectionForm::Singular:
    case InflectionForm::Plural:
      return POSCategory::Noun;
    case InflectionForm::Positive:
    case InflectionForm::Comparative:
    case InflectionForm::Superlative:
      return POSCategory::Adj;
    case InflectionForm::Unknown:
      return POSCategory::Other;
  }
  return POSCategory::Other;
}

InflectionForm base_form(POSCategory pos) {
  switch (pos) {
    case POSCategory::Verb: return InflectionForm::Base;
    case POSCategory::Noun: return InflectionForm::Singular;
    case POSCategory::Adj: return InflectionForm::Positive;
    default: return InflectionForm::Unknown;
  }
}

IrregularTable IrregularTable::load(std::istream& in,
                                    const std::string& source_name) {
  IrregularTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos
                                             : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw ParseError(source_name, line_no, "expected lemma\\tform\\tsurface");
    std::string lemma = normalize(line.substr(0, t1));
    std::string form_str = normalize(line.substr(t1 + 1, t2 - t1 - 1));
    std::string surface = normalize(line.substr(t2 + 1));
    auto form = form_from_name(form_str);
    if (!form)
      throw ParseError(source_name, line_no, "unknown form \"" + form_str + "\"");
    if (lemma.empty() || surface.empty())
      throw ParseError(source_name, line_no, "empty lemma or surface");
    table.forward_[{lemma, static_cast<int>(*form)}] = surface;
    // a surface spelled like its own lemma stays detectable as base form
    if (surface != lemma) {
      auto cat = form_category(*form);
      auto [it, inserted] = table.inverse_.try_emplace(
          {surface, static_cast<int>(cat)}, DetectedForm{lemma, *form});
      if (!inserted) ++table.inverse_conflicts_;
    }
  }
  return table;
}

IrregularTable IrregularTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open irregular forms table: " + path);
  return load(in, path);
}

std::optional<std::string> IrregularTable::surface_for(
    std::string_view lemma, InflectionForm form) const {
  auto it = forward_.find({std::string(lemma), static_cast<int>(form)});
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<DetectedForm> IrregularTable::lemma_for(std::string_view surface,
                                                      POSCategory pos) const {
  auto it = inverse_.find({std::string(surface), static_cast<int>(pos)});
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

std::size_t approximate_syllables(std::string_view word) {
  std::size_t groups = 0;
  bool in_group = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    bool vowel = is_vowel(c) || (c == 'y' && i > 0);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }
  return groups == 0 ? 1 : groups;
}

DetectedForm detect_form(std::string_view surface, POSCategory pos,
                         const IrregularTable& table) {
  std::string w = normalize(surface);
  if (pos == POSCategory::Other || pos == POSCategory::Unassigned)
    return {w, InflectionForm::Unknown};
  if (auto irr = table.lemma_for(w, pos)) return *irr;
  std::optional<DetectedForm> hit;
  switch (pos) {
    case POSCategory::Verb:
      hit = detect_verb(w, table);
      if (!hit) hit = detect_s_form(w, InflectionForm::ThirdSg, table);
      break;
    case POSCategory::Noun:
      hit = detect_s_form(w, InflectionForm::Plural, table);
      break;
    case POSCategory::Adj:
      hit = detect_adj(w, table);
      break;
    default:
      break;
  }
  if (hit) return *hit;
  return {w, base_form(pos)};
}

std::string inflect_to(std::string_view lemma, InflectionForm form,
                       const IrregularTable& table) {
  std::size_t space = lemma.find(' ');
  if (space == std::string_view::npos) return inflect_token(lemma, form, table);
  std::string head = inflect_token(lemma.substr(0, space), form, table);
  return head + std::string(lemma.substr(space));
}

}  // namespace lexsimp
