#include <doctest.h>

#include <random>

#include "flab/autos.hpp"
#include "support.hpp"

using namespace flab;

namespace {

struct Fixture {
  const Instance* inst;
  std::vector<int> family;
  std::shared_ptr<AmalgamGroup> G;
  OutTyp T;
};

const Fixture& fixture(const std::string& name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    Fixture f;
    f.inst = &support::instance(name);
    f.family = controlling_family(*f.inst->F, true);
    f.G = std::make_shared<AmalgamGroup>(
        std::make_shared<RobinsonSetup>(build_setup(f.inst->L, f.family, Variant::Robinson)));
    f.T = out_typ(*f.inst->L, f.family);
    it = cache.emplace(name, std::move(f)).first;
  }
  return it->second;
}

// Automorphisms of S (as maps of permutations) that carry every G-induced
// map between subgroups of S to another G-induced map.
std::vector<std::map<oracle::Pm, oracle::Pm>> fusion_preserving_oracle(const oracle::FusionOracle& O) {
  const oracle::Table t = oracle::table_of(O.S);
  const std::vector<oracle::Pm> el(O.S.begin(), O.S.end());
  // distinct F-maps as (source elements, images)
  std::set<std::vector<std::pair<oracle::Pm, oracle::Pm>>> maps;
  for (const auto& P : O.subs)
    for (const auto& x : O.G) {
      std::vector<std::pair<oracle::Pm, oracle::Pm>> m;
      bool in = true;
      for (const auto& p : P) {
        m.push_back({p, oracle::conj(x, p)});
        in = in && O.S.count(m.back().second);
      }
      if (in) maps.insert(m);
    }
  std::vector<std::map<oracle::Pm, oracle::Pm>> out;
  for (const auto& f : oracle::isomorphisms(t, t)) {
    std::map<oracle::Pm, oracle::Pm> psi;
    for (std::size_t i = 0; i < el.size(); ++i) psi[el[i]] = el[f[i]];
    bool ok = true;
    for (const auto& m : maps) {
      if (!ok) break;
      bool found = false;
      for (const auto& y : O.G) {
        bool all = true;
        for (const auto& [p, q] : m)
          if (oracle::conj(y, psi[p]) != psi[q]) {
            all = false;
            break;
          }
        if (all) {
          found = true;
          break;
        }
      }
      ok = found;
    }
    if (ok) out.push_back(psi);
  }
  return out;
}

oracle::Pm evaluate(const Fixture& f, const AmalgamWord& w) {
  oracle::Pm r = oracle::ident(f.inst->ambient->degree());
  for (const Letter& l : f.G->letters(w)) {
    const int m = f.G->setup().vertex(l.vertex).morphs[l.elem];
    r = oracle::mul(r, f.inst->ambient->element(f.inst->L->ambient(m)).images());
  }
  return r;
}

}  // namespace

TEST_CASE("fusion preserving automorphisms of S") {
  for (const char* name : {"s4-d8", "a6-d8", "inner-d8"}) {
    CAPTURE(name);
    const Instance& inst = support::instance(name);
    const auto want = fusion_preserving_oracle(support::fusion_oracle(inst));
    CHECK(fusion_preserving_autos(*inst.F).size() == want.size());
  }
  // inner automorphisms are always there
  CHECK(fusion_preserving_autos(*support::instance("s4-d8").F).size() >= 4);
  CHECK(static_cast<long>(fusion_preserving_autos(*support::instance("inner-d8").F).size()) ==
        oracle::automorphism_count(oracle::d8()));

  // A6: a swap of the two Klein fours exists iff the oracle finds one
  const Fixture& f = fixture("a6-d8");
  const auto oracle_autos = fusion_preserving_oracle(support::fusion_oracle(*f.inst));
  const oracle::Set V1 = support::as_set(f.inst->F->lat(), f.family[1], 6);
  const oracle::Set V2 = support::as_set(f.inst->F->lat(), f.family[2], 6);
  bool oracle_swap = false;
  for (const auto& psi : oracle_autos) {
    oracle::Set img;
    for (const auto& x : V1) img.insert(psi.at(x));
    oracle_swap = oracle_swap || img == V2;
  }
  bool lib_swap = false;
  for (std::size_t c = 0; c < f.T.classes.size(); ++c)
    lib_swap = lib_swap || upsilon(*f.inst->L, f.T.auts[f.T.classes[c].rep], f.family) == std::vector<int>{1, 0};
  CHECK(lib_swap == oracle_swap);
}

TEST_CASE("Aut_typ basics") {
  for (const char* name : {"s4-d8", "a6-d8", "inner-d8", "pgl2-9"}) {
    CAPTURE(name);
    const Fixture& f = fixture(name);
    const LinkingSystem& L = *f.inst->L;
    REQUIRE_FALSE(f.T.auts.empty());
    CHECK(f.T.auts[0] == equivalence_identity(L));
    for (const auto& e : f.T.auts) CHECK(check_equivalence(L, e).empty());
    // closed under composition and inverse
    for (const auto& a : f.T.auts) {
      CHECK(f.T.find(equivalence_inverse(a)) >= 0);
      for (const auto& b : f.T.auts) CHECK(f.T.find(equivalence_compose(a, b)) >= 0);
    }
    // every conjugation is there and lies in the identity class
    for (int alpha : L.auts(L.s_object())) {
      const int i = f.T.find(conjugation_equivalence(L, alpha));
      REQUIRE(i >= 0);
      CHECK(f.T.class_of[i] == 0);
    }
    // the class count two ways: orbit count and |Aut_typ| / |distinct c_alpha|
    CHECK(f.T.classes.size() * f.T.conj.size() == f.T.auts.size());
  }
}

TEST_CASE("Out_typ against Out of the realizing group") {
  // S4 collapses the amalgam; the split epimorphism bounds |Out_typ| by |Out(S4)|
  CHECK(oracle::outer_count(oracle::s4()) == 1);
  CHECK(fixture("s4-d8").T.classes.size() == 1);
  CHECK(fixture("s4-d8").T.auts.size() == 8);
  // inner fusion on D8: the amalgam is D8 itself
  CHECK(static_cast<long>(fixture("inner-d8").T.classes.size()) == oracle::outer_count(oracle::d8()));
}

TEST_CASE("upsilon") {
  const Fixture& s4 = fixture("s4-d8");
  CHECK(upsilon(*s4.inst->L, s4.T.auts[0], s4.family) == std::vector<int>{0});
  const Fixture& a6 = fixture("a6-d8");
  CHECK(upsilon(*a6.inst->L, a6.T.auts[0], a6.family) == std::vector<int>{0, 1});
  // multiplicative on all pairs
  const auto& T = a6.T;
  for (const auto& a : T.auts)
    for (const auto& b : T.auts) {
      const auto ua = upsilon(*a6.inst->L, a, a6.family), ub = upsilon(*a6.inst->L, b, a6.family);
      const auto uab = upsilon(*a6.inst->L, equivalence_compose(a, b), a6.family);
      for (int i = 0; i < 2; ++i) CHECK(uab[i] == ua[ub[i]]);
    }
}

TEST_CASE("gamma and omega") {
  for (const char* name : {"s4-d8", "a6-d8", "inner-d8", "pgl2-9"}) {
    CAPTURE(name);
    const Fixture& f = fixture(name);
    const LinkingSystem& L = *f.inst->L;
    const AmalgamGroup& G = *f.G;
    // identity class: inner up to hub conjugation
    const AmalgamAutomorphism g0 = gamma(G, f.T.auts[0]);
    CHECK(check_automorphism(G, g0).empty());
    CHECK(differ_by_hub_conjugation(G, g0, automorphism_identity(G)).has_value());
    CHECK(omega(G, automorphism_identity(G)) == equivalence_identity(L));
    for (int x = 0; x < G.hub().order(); ++x)
      CHECK(omega(G, hub_conjugation(G, x)) == conjugation_equivalence(L, G.setup().hub.morphs[x]));
    for (std::size_t c = 0; c < f.T.classes.size(); ++c) {
      const auto& e = f.T.auts[f.T.classes[c].rep];
      const AmalgamAutomorphism a = gamma(G, e);
      CHECK(check_automorphism(G, a).empty());
      const int back = f.T.find(omega(G, a));
      REQUIRE(back >= 0);
      CHECK(f.T.class_of[back] == static_cast<int>(c));
      CHECK(a.sigma == upsilon(L, e, f.family));
      // JSON round trip
      const AmalgamAutomorphism r = automorphism_from_json(G, automorphism_to_json(G, a));
      CHECK(automorphisms_equal(G, a, r));
    }
  }
}

TEST_CASE("gamma outputs are homomorphisms of the amalgam") {
  const Fixture& f = fixture("a6-d8");
  const AmalgamGroup& G = *f.G;
  std::mt19937 rng(99);
  for (const auto& cls : f.T.classes) {
    const AmalgamAutomorphism a = gamma(G, f.T.auts[cls.rep]);
    for (int it = 0; it < 100; ++it) {
      std::vector<Letter> la, lb;
      for (int i = 0; i < 4; ++i) {
        const int v = static_cast<int>(rng() % (G.k() + 1));
        la.push_back({v, static_cast<int>(rng() % G.setup().vertex(v).group.order())});
        const int u = static_cast<int>(rng() % (G.k() + 1));
        lb.push_back({u, static_cast<int>(rng() % G.setup().vertex(u).group.order())});
      }
      const AmalgamWord x = G.reduce(la), y = G.reduce(lb);
      CHECK(apply_automorphism(G, a, G.multiply(x, y)) ==
            G.multiply(apply_automorphism(G, a, x), apply_automorphism(G, a, y)));
    }
  }
}

TEST_CASE("on the collapsed S4 every gamma output is conjugation by an element of S4") {
  const Fixture& f = fixture("s4-d8");
  const AmalgamGroup& G = *f.G;
  const auto words = G.enumerate(4);
  for (const auto& cls : f.T.classes) {
    const AmalgamAutomorphism a = gamma(G, f.T.auts[cls.rep]);
    bool inner = false;
    for (const auto& g : oracle::s4()) {
      bool all = true;
      for (const auto& w : words)
        if (evaluate(f, apply_automorphism(G, a, w)) != oracle::conj(g, evaluate(f, w))) {
          all = false;
          break;
        }
      inner = inner || all;
    }
    CHECK(inner);
  }
}

TEST_CASE("split verification") {
  for (const char* name : {"s4-d8", "a6-d8", "inner-d8", "pgl2-9"}) {
    CAPTURE(name);
    const Fixture& f = fixture(name);
    const SplitReport r = verify_split(*f.G, f.T);
    for (const auto& s : r.failures) MESSAGE(s);
    CHECK(r.ok());
    CHECK(r.rows.size() == f.T.classes.size());
    for (const auto& row : r.rows) {
      CHECK(row.full_match);
      CHECK(row.family_match);
      CHECK(row.order_independent);
    }
    CHECK(r.step4_ok == r.step4_pairs);
    CHECK(r.omega_ok == r.omega_pairs);
    CHECK(r.upsilon_ok == r.upsilon_pairs);
    CHECK(r.inner_ok == r.inner_checked);
    CHECK(r.inner_checked > 0);
  }
}

TEST_CASE("exact sequences") {
  for (const char* name : {"s4-d8", "a6-d8", "inner-d8"}) {
    CAPTURE(name);
    const Fixture& f = fixture(name);
    const ExactSequenceReport e = exact_sequence_report(*f.G, f.T);
    for (const auto& s : e.failures) MESSAGE(s);
    CHECK(e.ok());
    CHECK(e.centers_equal);
    CHECK(e.counts_consistent);
    const OrbitCategory O = orbit_category(*f.inst->F, true);
    CHECK(e.lim1 == higher_limits(O.cat, center_functor(*f.inst->F, O), 1));
    CHECK(e.center_amalgam.size() == support::fusion_oracle(*f.inst).fusion_center().size());
  }
}

TEST_CASE("condition table and the injectivity criterion") {
  const Fixture& pgl = fixture("pgl2-9");
  auto ls = [](const Fixture& f) {
    return AmalgamGroup(std::make_shared<RobinsonSetup>(
        build_setup(f.inst->L, f.family, Variant::LibmanSeeliger)));
  };
  const LeafConditionReport r = leaf_conditions(ls(pgl), &pgl.T);
  REQUIRE_FALSE(r.rows.empty());
  for (const auto& row : r.rows) {
    CHECK(row.i);
    CHECK(row.ii);
    CHECK(row.iii);
    CHECK(row.iv);
  }
  CHECK(r.center_cyclic_p);
  CHECK(injectivity_criterion_holds(r));

  const Fixture& a6 = fixture("a6-d8");
  const LeafConditionReport ra = leaf_conditions(ls(a6), &a6.T);
  CHECK(ra.rows.size() == 2);

  const Fixture& s4 = fixture("s4-d8");
  const LeafConditionReport rs = leaf_conditions(ls(s4), &s4.T);
  REQUIRE(rs.rows.size() == 1);
  CHECK(rs.rows[0].iii);  // [N_S(V) : V] = 2
  REQUIRE(rs.injective_checked);
  CHECK(rs.out_G == static_cast<int>(oracle::outer_count(oracle::s4())));
}
