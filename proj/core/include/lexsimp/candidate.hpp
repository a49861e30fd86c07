#pragma once

#include <optional>
#include <string>

#include "lexsimp/routing.hpp"

namespace lexsimp {

// A proposed substitute. module_score lives on the producing module's
// own scale; final_score/rank are assigned by the re-ranker.
struct Candidate {
  std::string lemma;
  std::string surface;
  ModuleId source = ModuleId::Mlm;
  double module_score = 0.0;
  std::optional<double> final_score;
  std::optional<int> rank;
};

}  // namespace lexsimp
