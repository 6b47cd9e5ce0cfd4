// Isotypical self-equivalences of a linking system, Out_typ, and the maps
// between them and automorphisms of the amalgam.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flab/amalgam.hpp"
#include "flab/limits.hpp"
#include "flab/linking.hpp"

namespace flab {

// A self-equivalence of L stored in full. psi is the automorphism of S it
// induces through delta_S; it is determined by `mor`.
struct IsotypicalEquivalence {
  std::vector<int> psi;  // S element -> S element
  std::vector<int> obj;  // object -> object
  std::vector<int> mor;  // morphism -> morphism
  bool operator==(const IsotypicalEquivalence& o) const { return mor == o.mor; }
  bool operator<(const IsotypicalEquivalence& o) const { return mor < o.mor; }
};

IsotypicalEquivalence equivalence_identity(const LinkingSystem& L);
// a after b
IsotypicalEquivalence equivalence_compose(const IsotypicalEquivalence& a, const IsotypicalEquivalence& b);
IsotypicalEquivalence equivalence_inverse(const IsotypicalEquivalence& a);
// c_alpha(phi) = alpha|Q o phi o (alpha|P)^-1 for alpha in Aut_L(S).
IsotypicalEquivalence conjugation_equivalence(const LinkingSystem& L, int alpha_morphism);
// Empty when functorial, bijective, inclusion preserving and compatible with
// delta and rho; else a description.
std::string check_equivalence(const LinkingSystem& L, const IsotypicalEquivalence& e);
bool is_inclusion_preserving(const LinkingSystem& L, const IsotypicalEquivalence& e);

// Builds the unique equivalence over psi extending `seeds` (morphism ->
// image) together with the delta data, closing under inverses, restrictions
// and composites. nullopt when the seeds are inconsistent.
std::optional<IsotypicalEquivalence> close_equivalence(const LinkingSystem& L, const std::vector<int>& psi,
                                                       const std::vector<std::pair<int, int>>& seeds,
                                                       std::string* why = nullptr);

// psi in Aut(S) with psi Hom_F(P,Q) psi^-1 = Hom_F(psi P, psi Q).
std::vector<GroupHom> fusion_preserving_autos(const FusionSystem& F);

// Aut^I_typ(L), seeded on Aut_L(S) and on Aut_L(P) for P in the family.
std::vector<IsotypicalEquivalence> enumerate_aut_typ(const LinkingSystem& L, const std::vector<int>& family);

struct OutClass {
  int rep = 0;               // index into the enumeration
  std::vector<int> members;  // indices, ascending
};
struct OutTyp {
  std::vector<IsotypicalEquivalence> auts;
  std::vector<OutClass> classes;
  std::vector<int> class_of;                 // aut index -> class
  std::vector<IsotypicalEquivalence> conj;   // distinct c_alpha, alpha in Aut_L(S)
  int find(const IsotypicalEquivalence& e) const;  // aut index or -1
};
OutTyp out_typ(const LinkingSystem& L, const std::vector<int>& family);

// Leaf permutation (0-based): P_{u[i]+1} is N_F(S)-conjugate to psi(P_{i+1}).
std::vector<int> upsilon(const LinkingSystem& L, const IsotypicalEquivalence& e, const std::vector<int>& family);

// An automorphism of the amalgam: hub letter h -> theta_s[h], leaf letter
// l of leaf i -> y[i] * theta[i][l] * y[i]^-1 with theta[i][l] in leaf sigma[i].
struct AmalgamAutomorphism {
  std::vector<int> sigma;
  std::vector<int> theta_s;
  std::vector<std::vector<int>> theta;
  std::vector<int> y;
  std::string mode;  // how gamma built it; informational
};

AmalgamAutomorphism automorphism_identity(const AmalgamGroup& G);
AmalgamAutomorphism hub_conjugation(const AmalgamGroup& G, int x);
// a after b
AmalgamAutomorphism automorphism_compose(const AmalgamGroup& G, const AmalgamAutomorphism& a,
                                         const AmalgamAutomorphism& b);
AmalgamWord apply_automorphism(const AmalgamGroup& G, const AmalgamAutomorphism& a, const AmalgamWord& w);
// Empty when the vertex maps are isomorphisms and every edge commutes.
std::string check_automorphism(const AmalgamGroup& G, const AmalgamAutomorphism& a);
// Equal as automorphisms of G: same images of every vertex letter.
bool automorphisms_equal(const AmalgamGroup& G, const AmalgamAutomorphism& a, const AmalgamAutomorphism& b);
// Some hub element x with a = c_x o b, if any.
std::optional<int> differ_by_hub_conjugation(const AmalgamGroup& G, const AmalgamAutomorphism& a,
                                             const AmalgamAutomorphism& b);

nlohmann::json automorphism_to_json(const AmalgamGroup& G, const AmalgamAutomorphism& a);
AmalgamAutomorphism automorphism_from_json(const AmalgamGroup& G, const nlohmann::json& j);

// gamma: first tries the simultaneous hub search of the construction (mode
// "strict"); when no hub element normalizes the leaves already placed it
// conjugates each leaf separately and records the twist in y (mode "twisted").
AmalgamAutomorphism gamma(const AmalgamGroup& G, const IsotypicalEquivalence& e);
// Omega: the equivalence of L induced by an automorphism preserving delta(S).
IsotypicalEquivalence omega(const AmalgamGroup& G, const AmalgamAutomorphism& a);

struct SplitReport {
  struct ClassRow {
    int cls = 0;
    std::vector<int> upsilon;
    std::string mode;
    bool edges_ok = false;
    bool family_match = false;  // on the family subcategory
    bool full_match = false;    // on all of L
    int alpha = -1;             // hub element with Omega(gamma) = c_alpha o Psi
    bool order_independent = false;
    std::string detail;
  };
  std::vector<ClassRow> rows;
  int step4_pairs = 0, step4_ok = 0;
  int omega_pairs = 0, omega_ok = 0;      // Omega multiplicative
  int upsilon_pairs = 0, upsilon_ok = 0;  // upsilon multiplicative
  int inner_checked = 0, inner_ok = 0;    // Omega(c_x) = c_x
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// Leaf-order independence is tested on every reordering of the leaves when
// k <= 3, else on the reversed order.
SplitReport verify_split(const AmalgamGroup& G, const OutTyp& T);

struct ExactSequenceReport {
  std::vector<int> center_amalgam;  // S elements
  std::vector<int> center_limit;    // S elements
  bool centers_equal = false;
  int aut_L_S = 0;
  int conj_kernel = 0;       // |{alpha : c_alpha = id}|
  bool kernel_is_center = false;
  int distinct_conjugations = 0;
  int aut_typ = 0;
  int out_typ = 0;
  bool counts_consistent = false;   // |Aut^I_typ| = |Out_typ| * distinct c_alpha
  bool conj_in_identity_class = false;
  AbelianInvariants lim1;
  int twists = 0;                   // enumerated hub twists fixing S
  int twists_mod_center = 0;        // modulo conjugation by C_hub(delta S)
  std::string twists_note;
  // 1 -> Z(H) -> N -> Aut(H, S) -> Out for H = Aut_L(S)
  int hub_center = 0, hub_normalizer = 0, hub_aut_s = 0, hub_out = 0;
  bool hub_sequence_exact = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ExactSequenceReport exact_sequence_report(const AmalgamGroup& G, const OutTyp& T);

struct LeafConditionRow {
  std::string subgroup;
  bool i = false, ii = false, iii = false, iv = false;
  std::string detail;
};
struct LeafConditionReport {
  bool center_cyclic_p = false;
  std::vector<LeafConditionRow> rows;  // one per leaf P_1..P_k
  bool finite = false;
  int out_G = -1;                // when the amalgam is finite
  int out_typ = -1;
  bool injective_checked = false;
  bool injective = false;
};
// Expects a Libman-Seeliger setup.
LeafConditionReport leaf_conditions(const AmalgamGroup& G, const OutTyp* T = nullptr);
bool injectivity_criterion_holds(const LeafConditionReport& r);

}  // namespace flab
