#include "lexsimp/routing.hpp"

#include <stdexcept>

namespace lexsimp {

std::string_view module_name(ModuleId id) {
  switch (id) {
    case ModuleId::Vsd: return "vsd";
    case ModuleId::Ppdb: return "ppdb";
    case ModuleId::Mlm: return "mlm";
    case ModuleId::Kg: return "kg";
  }
  return "?";
}

std::optional<ModuleId> module_from_name(std::string_view name) {
  for (ModuleId id : kAllModules)
    if (module_name(id) == name) return id;
  return std::nullopt;
}

RoutingConfig RoutingConfig::table1() {
  RoutingConfig cfg;
  cfg.profile_ = "table1";
  cfg.table_[POSCategory::Verb] = {ModuleId::Vsd, ModuleId::Ppdb, ModuleId::Mlm};
  cfg.table_[POSCategory::Noun] = {ModuleId::Ppdb, ModuleId::Mlm, ModuleId::Kg};
  cfg.table_[POSCategory::Adj] = {ModuleId::Ppdb, ModuleId::Mlm};
  cfg.table_[POSCategory::Other] = {ModuleId::Ppdb, ModuleId::Mlm};
  return cfg;
}

RoutingConfig RoutingConfig::algorithm1() {
  RoutingConfig cfg = table1();
  cfg.profile_ = "algorithm1";
  cfg.table_[POSCategory::Verb] = {ModuleId::Vsd, ModuleId::Ppdb, ModuleId::Mlm,
                                   ModuleId::Kg};
  return cfg;
}

RoutingConfig RoutingConfig::custom(
    const std::map<POSCategory, std::vector<ModuleId>>& table) {
  RoutingConfig cfg = table1();
  cfg.profile_ = "custom";
  for (const auto& [pos, modules] : table) {
    if (pos != POSCategory::Other && modules.empty())
      throw std::invalid_argument("custom routing: empty module set for " +
                                  std::string(pos_name(pos)));
    cfg.table_[pos] = modules;
  }
  return cfg;
}

const std::vector<ModuleId>& RoutingConfig::modules_for(POSCategory pos) const {
  auto it = table_.find(pos);
  if (it == table_.end()) {
    // untagged instances fall back to the OTHER set
    it = table_.find(POSCategory::Other);
    if (it == table_.end()) return empty_;
  }
  return it->second;
}

std::vector<ModuleId> modules_for_pos(POSCategory pos, const RoutingConfig& cfg) {
  return cfg.modules_for(pos);
}

POSCategory tag_target_pos(Instance& instance,
                           const ContextualPOSTagger& tagger) {
  POSCategory category = tagger.tag(instance.context, instance.target_span);
  if (instance.pos == POSCategory::Unassigned) instance.pos = category;
  return category;
}

}  // namespace lexsimp
