// Loading inputs by catalog name or file, and subgroup naming.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flab/fusion.hpp"
#include "flab/linking.hpp"
#include "flab/perm_group.hpp"

namespace flab {

struct Instance {
  std::string name;
  int p = 2;
  std::shared_ptr<const PermGroup> ambient;  // null for abstract input
  std::shared_ptr<const FusionSystem> F;
  // Built lazily by ensure_linking; group-realized or read from a linking file.
  std::shared_ptr<const LinkingSystem> L;
  bool negative = false;
};

// A catalog name, or a path to a group, fusion or linking JSON file.
Instance load_instance(const std::string& name_or_path);
Instance instance_from_json(const nlohmann::json& j, const std::string& fallback_name);
// Builds L from F when it is not present yet.
void ensure_linking(Instance& inst);

// {src, images}: generator labels of a subgroup of S and their images.
FusionSystem fusion_from_json(const nlohmann::json& j);

// Element of S by table label or by cycle notation.
int parse_s_element(const SubgroupLattice& lat, int degree, const std::string& text);
int s_degree(const SubgroupLattice& lat);

// "auto", "complete", "{S}", "{S,<(1,3),(2,4)>,...}" or "#id" members.
std::vector<int> parse_family(const FusionSystem& F, const std::string& spec);
int parse_subgroup(const SubgroupLattice& lat, const std::string& text);
std::string family_string(const SubgroupLattice& lat, const std::vector<int>& family);

}  // namespace flab
