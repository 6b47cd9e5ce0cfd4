#include <algorithm>
#include <set>

#include "flab/perm_group.hpp"

namespace flab {

PermGroup PermGroup::closure(int degree, const std::vector<Perm>& generators, std::string name) {
  for (const Perm& g : generators)
    if (g.degree() != degree) throw InputError("closure: generators of different degrees");
  const std::size_t bound = order_bound(10000);
  PermGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;
  G.gens_ = generators;
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& s : generators) {
      Perm y = queue[i] * s;
      if (seen.insert(y).second) {
        queue.push_back(std::move(y));
        if (queue.size() > bound) throw ResourceError("closure: group order exceeds bound");
      }
    }
  G.elements_.assign(seen.begin(), seen.end());
  const int n = static_cast<int>(G.elements_.size());
  for (int i = 0; i < n; ++i) G.index_.emplace(G.elements_[i], i);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = G.elements_[a].cycles();
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
  }
  G.table_ = Group::trusted(std::move(labels), std::move(table));
  return G;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

Subgroup PermGroup::subgroup(const std::vector<Perm>& gens) const {
  std::vector<int> idx;
  for (const Perm& g : gens) {
    int i = index_of(g);
    if (i < 0) throw InputError("element " + g.cycles() + " is not in " + name_);
    idx.push_back(i);
  }
  return generate(table_, idx);
}

PermGroup PermGroup::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InputError("group file needs \"degree\" and \"generators\"");
  const int degree = j.at("degree").get<int>();
  if (degree < 0) throw InputError("negative degree");
  std::vector<Perm> gens;
  for (const auto& g : j.at("generators")) {
    std::vector<int> im = g.get<std::vector<int>>();
    if (static_cast<int>(im.size()) != degree) throw InputError("generator length differs from degree");
    gens.emplace_back(std::move(im));
  }
  return closure(degree, gens, j.value("name", std::string("G")));
}

nlohmann::json PermGroup::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["degree"] = degree_;
  j["generators"] = nlohmann::json::array();
  for (const Perm& g : gens_) j["generators"].push_back(g.images());
  return j;
}

}  // namespace flab
