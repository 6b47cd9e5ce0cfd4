// Fusion systems over a finite p-group S.
#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flab/groups.hpp"

namespace flab {

// All subgroups of a p-group S with cached normalizers, centralizers and
// centers. Subgroup ids follow the canonical order, so id 0 is trivial and
// the last id is S.
class SubgroupLattice {
 public:
  SubgroupLattice(Group s, int p);

  const Group& S() const { return s_; }
  int p() const { return p_; }
  int count() const { return static_cast<int>(subs_.size()); }
  const Subgroup& operator[](int id) const { return subs_[id]; }
  int find(const std::vector<int>& sorted) const;
  int find(const Subgroup& h) const { return find(h.elems); }
  int whole() const { return count() - 1; }
  int trivial() const { return 0; }
  int order(int id) const { return subs_[id].order(); }

  int normalizer(int id) const { return norm_[id]; }
  int centralizer(int id) const { return cent_[id]; }
  int center(int id) const { return center_[id]; }
  int frattini(int id) const { return frat_[id]; }
  bool leq(int a, int b) const;
  const std::vector<int>& contained_in(int id) const { return below_[id]; }  // ids of subgroups of id
  int conj(int x, int id) const;                // id of x P x^-1
  int meet(int a, int b) const;
  int pos(int id, int elem) const { return pos_[id][elem]; }  // index in elems or -1
  std::string name(int id) const;

 private:
  Group s_;
  int p_;
  std::vector<Subgroup> subs_;
  std::vector<int> norm_, cent_, center_, frat_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> pos_;
};

// Injective homomorphism from subgroup `src` onto subgroup `dst` of S.
// img[t] is the image of lattice[src].elems[t].
struct FMap {
  int src = 0;
  int dst = 0;
  std::vector<int> img;
  auto operator<=>(const FMap&) const = default;
};

FMap fmap_from_images(const SubgroupLattice& lat, int src, std::vector<int> img);
FMap fmap_identity(const SubgroupLattice& lat, int p);
FMap fmap_conj(const SubgroupLattice& lat, int x, int p);  // c_x restricted to P
FMap fmap_compose(const SubgroupLattice& lat, const FMap& g, const FMap& f);  // g after f
FMap fmap_inverse(const SubgroupLattice& lat, const FMap& f);
FMap fmap_restrict(const SubgroupLattice& lat, const FMap& f, int sub);
int fmap_apply(const SubgroupLattice& lat, const FMap& f, int x);
bool fmap_is_hom(const SubgroupLattice& lat, const FMap& f);
std::string fmap_describe(const SubgroupLattice& lat, const FMap& f);

// Data tying S to an ambient group G when the fusion system is realized.
struct Realization {
  std::shared_ptr<const Group> G;
  Subgroup S;                // inside G
  std::vector<int> s_to_g;   // S-table index -> G index
  std::vector<int> g_to_s;   // G index -> S-table index or -1
  Subgroup in_G(const Subgroup& p_in_s) const;
};

struct FusionWitness {
  bool equal = true;
  std::string detail;
};

class FusionSystem {
 public:
  FusionSystem() = default;
  FusionSystem(std::shared_ptr<const SubgroupLattice> lat, int top, std::string provenance);

  const SubgroupLattice& lat() const { return *lat_; }
  std::shared_ptr<const SubgroupLattice> lattice_ptr() const { return lat_; }
  int top() const { return top_; }
  int p() const { return lat_->p(); }
  bool in_carrier(int id) const { return lat_->leq(id, top_); }
  const std::string& provenance() const { return provenance_; }
  const std::optional<Realization>& realization() const { return real_; }
  void set_realization(Realization r) { real_ = std::move(r); }

  const std::set<FMap>& isos_from(int p) const { return isos_[p]; }
  std::vector<FMap> hom(int p, int q) const;
  std::vector<FMap> aut(int p) const { return hom(p, p); }
  bool contains(const FMap& f) const;
  std::size_t morphism_count() const;

  // Subgroups of the carrier, and normalizer/centralizer inside it.
  std::vector<int> subgroups() const;
  int normalizer(int p) const;
  int centralizer(int p) const;

  // Closure of generators (plus carrier conjugations) under composition,
  // inverses and restriction.
  static FusionSystem generated(std::shared_ptr<const SubgroupLattice> lat, int top,
                                const std::vector<FMap>& gens, std::string provenance);

 private:
  friend FusionSystem fusion_from_group(std::shared_ptr<const Group> G, const Subgroup& S, int p);

  std::shared_ptr<const SubgroupLattice> lat_;
  int top_ = 0;
  std::string provenance_;
  std::vector<std::set<FMap>> isos_;
  std::optional<Realization> real_;
};

// F_S(G) for S a Sylow p-subgroup of G.
FusionSystem fusion_from_group(std::shared_ptr<const Group> G, const Subgroup& S, int p);

std::vector<int> f_conjugates(const FusionSystem& F, int p);
bool is_fully_normalized(const FusionSystem& F, int p);
bool is_fully_centralized(const FusionSystem& F, int p);
bool is_f_centric(const FusionSystem& F, int p);
bool is_f_radical(const FusionSystem& F, int p);
Group aut_f_table(const FusionSystem& F, int p, std::vector<FMap>* elements = nullptr);
int out_f_order(const FusionSystem& F, int p);
int aut_s_order(const FusionSystem& F, int p);

struct SaturationReport {
  bool saturated = true;
  bool axiom1 = true;
  bool axiom2 = true;
  std::string axiom3 = "vacuous: S is finite";
  std::string witness;
  int checked_axiom1 = 0;
  int checked_axiom2 = 0;
};
SaturationReport check_saturation(const FusionSystem& F);

FusionSystem normalizer_fusion_system(const FusionSystem& F, int p);
bool is_normal_in_F(const FusionSystem& F, int p);

FusionSystem generated_fusion(std::shared_ptr<const SubgroupLattice> lat, int top, const std::vector<FMap>& gens);
FusionWitness fusion_compare(const FusionSystem& a, const FusionSystem& b);
inline bool fusion_equals(const FusionSystem& a, const FusionSystem& b) { return fusion_compare(a, b).equal; }

// N_F(S)-conjugacy class (orbit under Aut_F(S)) of a subgroup.
std::vector<int> nfs_class(const FusionSystem& F, int p);
std::vector<int> centric_radical(const FusionSystem& F);
// {S, P_1, ..., P_k}; S first, the rest in canonical order.
std::vector<int> controlling_family(const FusionSystem& F, bool complete);

struct ClassInfo {
  std::vector<int> members;
  int rep = 0;
  bool fully_normalized = false;
  bool fully_centralized = false;
  bool centric = false;
  bool radical = false;
  bool normal = false;
  int aut_order = 0;
  int out_order = 0;
};
std::vector<ClassInfo> fusion_classes(const FusionSystem& F);

}  // namespace flab
