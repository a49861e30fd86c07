#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/dataset.hpp"

namespace lexsimp {

// The four candidate-generation modules, in their canonical pipeline order.
enum class ModuleId { Vsd, Ppdb, Mlm, Kg };

inline constexpr std::array<ModuleId, 4> kAllModules = {
    ModuleId::Vsd, ModuleId::Ppdb, ModuleId::Mlm, ModuleId::Kg};

std::string_view module_name(ModuleId id);
std::optional<ModuleId> module_from_name(std::string_view name);

// POS category -> ordered module set. The default reproduces the
// published routing table; "algorithm1" adds KG for verbs as the
// pipeline pseudocode does.
class RoutingConfig {
 public:
  static RoutingConfig table1();
  static RoutingConfig algorithm1();
  static RoutingConfig custom(
      const std::map<POSCategory, std::vector<ModuleId>>& table);

  const std::vector<ModuleId>& modules_for(POSCategory pos) const;
  const std::string& profile() const { return profile_; }

 private:
  std::map<POSCategory, std::vector<ModuleId>> table_;
  std::vector<ModuleId> empty_;
  std::string profile_;
};

std::vector<ModuleId> modules_for_pos(POSCategory pos, const RoutingConfig& cfg);

// Tagger contract: total over inputs, OTHER when unsure.
class ContextualPOSTagger {
 public:
  virtual ~ContextualPOSTagger() = default;
  virtual POSCategory tag(std::string_view context, Span target_span) const = 0;
};

// Assigns instance.pos from UNASSIGNED exactly once; returns the
// tagger's category either way.
POSCategory tag_target_pos(Instance& instance, const ContextualPOSTagger& tagger);

}  // namespace lexsimp
