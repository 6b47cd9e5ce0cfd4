// Robinson setups and their amalgams, with exact normal-form arithmetic.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flab/fusion.hpp"
#include "flab/linking.hpp"

namespace flab {

enum class Variant { Robinson, LibmanSeeliger };
std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// A vertex group Aut_L(P) as a table; element i is morphism morphs[i].
struct VertexGroup {
  int sub = 0;   // lattice id of P
  int obj = 0;   // object of L
  Group group;
  std::vector<int> morphs;
  std::vector<int> index;  // morphism id -> element, -1 outside
  std::vector<int> delta;      // S element -> element of delta_P(g), -1 outside N_S(P)
  std::vector<int> delta_inv;  // element -> S element, -1 outside delta_P(N_S(P))
};

VertexGroup vertex_group(const LinkingSystem& L, int obj);

struct Leaf {
  VertexGroup v;
  Subgroup N;              // N_P inside the hub group
  std::vector<int> j;      // hub element -> leaf element (restriction), -1 outside N
  std::vector<int> j_inv;  // leaf element -> hub element, -1 outside j(N)
};

struct RobinsonSetup {
  std::shared_ptr<const LinkingSystem> L;
  std::vector<int> family;  // lattice ids, family[0] = S
  Variant variant = Variant::Robinson;
  VertexGroup hub;
  std::vector<Leaf> leaves;  // leaves[i] belongs to family[i + 1]
  bool controlling = true;
  bool complete = true;  // exactly one member per N_F(S)-class of centric radicals
  std::string controlling_detail;

  int k() const { return static_cast<int>(leaves.size()); }
  const VertexGroup& vertex(int v) const { return v == 0 ? hub : leaves[v - 1].v; }
};

// Throws InputError when the conditions fail. With require_controlling the
// family must be a fusion controlling family; otherwise the outcome is only
// recorded in `controlling`.
RobinsonSetup build_setup(std::shared_ptr<const LinkingSystem> L, const std::vector<int>& family, Variant variant,
                          bool require_controlling = true);

// Normal form h * y_1 x_1 * ... * y_m x_m: h in the hub, y_j a non-identity
// right coset representative of j(N) in leaf i_j, x_j a right coset
// representative of N in the hub, and never x_j = 1 with i_{j+1} = i_j.
struct AmalgamWord {
  struct Pair {
    int leaf;  // 1-based
    int y;
    int x;
    auto operator<=>(const Pair&) const = default;
  };
  int h = 0;
  std::vector<Pair> pairs;
  int length() const { return static_cast<int>(pairs.size()); }
  auto operator<=>(const AmalgamWord&) const = default;
};

// A raw letter: vertex 0 is the hub, v >= 1 is leaf v.
struct Letter {
  int vertex;
  int elem;
};

class AmalgamGroup {
 public:
  explicit AmalgamGroup(std::shared_ptr<const RobinsonSetup> setup);

  const RobinsonSetup& setup() const { return *setup_; }
  std::shared_ptr<const RobinsonSetup> setup_ptr() const { return setup_; }
  const Group& hub() const { return setup_->hub.group; }
  int k() const { return setup_->k(); }

  AmalgamWord identity() const { return AmalgamWord{hub().identity(), {}}; }
  AmalgamWord letter(int vertex, int elem) const;
  AmalgamWord left_multiply(const Letter& a, AmalgamWord w) const;
  AmalgamWord reduce(const std::vector<Letter>& letters) const;
  AmalgamWord multiply(const AmalgamWord& a, const AmalgamWord& b) const;
  AmalgamWord invert(const AmalgamWord& w) const;
  std::vector<Letter> letters(const AmalgamWord& w) const;  // hub letters equal to 1 omitted

  AmalgamWord parse(const std::string& text) const;
  std::string format(const AmalgamWord& w) const;

  // Finite exactly when no normal form of length 2 exists.
  bool is_finite() const;
  // All normal forms of length <= radius, deterministic order.
  std::vector<AmalgamWord> enumerate(int radius) const;

  std::optional<int> element_of_S(const AmalgamWord& w) const;
  struct Conjugate {
    int sub;
    FMap map;  // P -> result, x |-> w x w^-1
  };
  std::optional<Conjugate> conjugate_subgroup(const AmalgamWord& w, int P) const;

  int hub_split_n(int leaf, int h) const { return hub_n_[leaf - 1][h]; }
  int hub_split_x(int leaf, int h) const { return hub_x_[leaf - 1][h]; }

 private:
  std::shared_ptr<const RobinsonSetup> setup_;
  // h = n * x with n in N_i and x the coset minimum
  std::vector<std::vector<int>> hub_n_, hub_x_;
  // l = j(n) * y with y the coset minimum; n stored in the hub
  std::vector<std::vector<int>> leaf_n_, leaf_y_;
};

struct FusionCheck {
  bool equal = true;
  std::string witness;
  std::vector<std::pair<std::string, std::pair<int, int>>> counts;  // subgroup -> (|F|, |generated|)
};
FusionCheck verify_fusion(const AmalgamGroup& G, const FusionSystem& F);

// {z in Z(S) : delta(z) central in every vertex group}, as S elements.
std::vector<int> amalgam_center(const AmalgamGroup& G);

// Words of length <= radius conjugating P onto Q (a truncation).
std::vector<AmalgamWord> transporter_in_amalgam(const AmalgamGroup& G, int P, int Q, int radius);

// Multiplication table of a finite amalgam together with its elements.
Group amalgam_table(const AmalgamGroup& G, std::vector<AmalgamWord>* elements = nullptr);

}  // namespace flab
