// Transporter categories and centric linking systems.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flab/category.hpp"
#include "flab/fusion.hpp"

namespace flab {

struct AxiomResult {
  std::string axiom;
  bool ok = true;
  std::string witness;
};

// T_H(G): objects are subgroups of S in H, Mor(P,Q) = N_G(P,Q).
struct TransporterCategory {
  FiniteCategory cat;
  std::vector<int> objects;        // lattice ids
  std::vector<int> element;        // morphism -> element of G
};
TransporterCategory transporter_category(const FusionSystem& F, const std::vector<int>& collection);

class LinkingSystem {
 public:
  const SubgroupLattice& lat() const { return *lat_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lat_; }
  const FusionSystem& fusion() const { return F_; }
  const FiniteCategory& cat() const { return cat_; }
  int p() const { return lat_->p(); }

  int object_count() const { return static_cast<int>(obj_sub_.size()); }
  int subgroup_of(int obj) const { return obj_sub_[obj]; }
  int object_of(int sub) const { return sub_obj_[sub]; }  // -1 if not an object
  int s_object() const { return object_of(lat_->whole()); }

  const FMap& rho(int m) const { return rho_[m]; }
  int delta(int P, int Q, int g) const;  // objects P, Q; -1 when g not in N_S(P,Q)
  int iota(int P, int Q) const { return delta(P, Q, lat_->S().identity()); }
  int ambient(int m) const { return ambient_.empty() ? -1 : ambient_[m]; }
  bool group_realized() const { return !ambient_.empty(); }

  // Restriction of m to the object R <= src(m), landing on rho(m)(R).
  int restrict_to(int m, int R) const { return restrict_[static_cast<std::size_t>(m) * object_count() + R]; }
  int inverse(int m) const { return inverse_[m]; }  // -1 unless m is an isomorphism
  const std::vector<int>& auts(int P) const { return cat_.hom(P, P); }
  // Aut_L(P) as a group table; element i is morphism (*morphs)[i].
  Group aut_table(int P, std::vector<int>* morphs = nullptr) const;

  std::vector<AxiomResult> validate() const;
  nlohmann::json to_json(const std::string& name) const;

  friend LinkingSystem linking_from_group(const FusionSystem& F);
  friend LinkingSystem linking_from_data(const nlohmann::json& j);

 private:
  void finalize();

  std::shared_ptr<const SubgroupLattice> lat_;
  FusionSystem F_;
  FiniteCategory cat_;
  std::vector<int> obj_sub_;
  std::vector<int> sub_obj_;
  std::vector<FMap> rho_;
  std::vector<std::vector<int>> delta_;  // [P * n + Q][g]
  std::vector<int> ambient_;
  std::vector<int> restrict_;
  std::vector<int> inverse_;
};

// L^c_S(G) with Mor(P,Q) = N_G(P,Q)/C'_G(P).
LinkingSystem linking_from_group(const FusionSystem& F);
// Abstract input; throws InputError naming the failing axiom.
LinkingSystem linking_from_data(const nlohmann::json& j);

struct RestrictedAut {
  std::vector<int> morphs;      // elements of Aut_L(S) preserving P
  std::vector<int> restricted;  // their restrictions in Aut_L(P)
  bool injective = true;
};
RestrictedAut aut_L_restricted(const LinkingSystem& L, int P);

// O(F^c) (or the full orbit category): morphisms are Inn(Q)-orbits of
// Hom_F(P,Q), each stored by its minimal representative.
struct OrbitCategory {
  FiniteCategory cat;
  std::vector<int> objects;  // lattice ids
  std::vector<FMap> rep;     // per morphism
};
OrbitCategory orbit_category(const FusionSystem& F, bool centric_only);

}  // namespace flab
