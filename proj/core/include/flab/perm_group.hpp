// Permutation groups with a materialized, sorted element list.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flab/groups.hpp"

namespace flab {

class PermGroup {
 public:
  PermGroup() = default;

  // Closure of the generators. Elements are sorted by image sequence, so
  // index 0 is the identity.
  static PermGroup closure(int degree, const std::vector<Perm>& generators, std::string name = "");
  static PermGroup from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  int index_of(const Perm& p) const;
  const Group& table() const { return table_; }

  Subgroup subgroup(const std::vector<Perm>& gens) const;

 private:
  std::string name_;
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  Group table_;
};

}  // namespace flab
