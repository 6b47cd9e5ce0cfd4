// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "flab/autos.hpp"
#include "flab/catalog.hpp"
#include "flab/limits.hpp"
#include "support.hpp"

using namespace flab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failed = 0;

void criterion(int n, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) o.require(false, "over the time limit");
  failed += !o.ok;
  std::printf("criterion %2d: %s  %s  (%.2fs, limit %.0fs)%s%s\n", n, o.ok ? "PASS" : "FAIL", title, secs, limit_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

const char* const kEntries[] = {"s4-d8", "a6-d8", "pgl2-9", "inner-d8"};

std::shared_ptr<AmalgamGroup> amalgam(const Instance& inst, Variant v) {
  return std::make_shared<AmalgamGroup>(
      std::make_shared<RobinsonSetup>(build_setup(inst.L, controlling_family(*inst.F, true), v)));
}

FiniteCategory cone() {
  FiniteCategory C({"a", "b", "t"});
  const int ia = C.add_morphism(0, 0, "1"), ib = C.add_morphism(1, 1, "1"), it = C.add_morphism(2, 2, "1");
  C.add_morphism(0, 2, "u");
  C.add_morphism(1, 2, "v");
  C.set_identity(0, ia);
  C.set_identity(1, ib);
  C.set_identity(2, it);
  C.allocate_composition();
  for (int m = 0; m < C.morphism_count(); ++m) {
    C.set_compose(C.identity(C.morphism(m).dst), m, m);
    C.set_compose(m, C.identity(C.morphism(m).src), m);
  }
  return C;
}

Group cyclic(int n) {
  std::vector<std::string> labels;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return Group::from_table(labels, t);
}

}  // namespace

int main() {
  criterion(1, "fusion analysis of s4-d8 matches the subgroup-scan oracle", 5, [] {
    Outcome o;
    const Instance& inst = support::instance("s4-d8");
    // the oracle works from S4 written out by hand and the Sylow subgroup
    const oracle::FusionOracle O(oracle::s4(), support::library_S(inst), 2);
    std::set<std::set<oracle::Set>> want_c, want_cr, got_c, got_cr;
    for (const auto& cl : O.classes()) {
      if (!O.centric(cl.front())) continue;
      want_c.insert({cl.begin(), cl.end()});
      if (O.radical(cl.front())) want_cr.insert({cl.begin(), cl.end()});
    }
    for (const ClassInfo& c : fusion_classes(*inst.F)) {
      if (!c.centric) continue;
      std::set<oracle::Set> s;
      for (int id : c.members) s.insert(support::as_set(inst.F->lat(), id, 4));
      got_c.insert(s);
      if (c.radical) got_cr.insert(s);
    }
    o.require(want_c.size() == 4, "oracle centric classes != 4");
    o.require(want_cr.size() == 2, "oracle centric radical classes != 2");
    o.require(got_c == want_c, "centric classes differ from the oracle");
    o.require(got_cr == want_cr, "centric radical classes differ from the oracle");
    return o;
  });

  criterion(2, "saturation holds on s4-d8, a6-d8, pgl2-9, inner-d8", 60, [] {
    Outcome o;
    for (const char* name : kEntries) {
      const SaturationReport r = check_saturation(*support::instance(name).F);
      o.require(r.saturated && r.axiom1 && r.axiom2, std::string(name) + ": " + r.witness);
      o.require(r.axiom3.find("vacuous") != std::string::npos, "axiom III not reported vacuous");
    }
    return o;
  });

  criterion(3, "s4-d8 amalgam has 24 normal forms and is isomorphic to S4", 5, [] {
    Outcome o;
    const auto G = amalgam(support::instance("s4-d8"), Variant::Robinson);
    o.require(G->is_finite(), "not finite");
    o.require(G->enumerate(6).size() == 24, "normal form count != 24");
    const Group T = amalgam_table(*G);
    oracle::Table t;
    t.n = T.order();
    t.id = T.identity();
    t.mul = [&](int a, int b) { return T.mul(a, b); };
    o.require(!oracle::isomorphisms(t, oracle::table_of(oracle::s4()), true).empty(), "no isomorphism to S4");
    return o;
  });

  criterion(4, "normal form laws on 10^4 random words in S4 *_D8 S4", 30, [] {
    Outcome o;
    const auto G = amalgam(support::instance("a6-d8"), Variant::Robinson);
    o.require(!G->is_finite(), "amalgam reported finite");
    std::mt19937 rng(20240601);
    auto word = [&](int len) {
      std::vector<Letter> ls;
      for (int i = 0; i < len; ++i) {
        const int v = static_cast<int>(rng() % (G->k() + 1));
        ls.push_back({v, static_cast<int>(rng() % G->setup().vertex(v).group.order())});
      }
      return G->reduce(ls);
    };
    int long_words = 0;
    for (int it = 0; it < 10000; ++it) {
      const AmalgamWord a = word(1 + static_cast<int>(rng() % 10));
      const AmalgamWord b = word(1 + static_cast<int>(rng() % 10));
      const AmalgamWord c = word(1 + static_cast<int>(rng() % 10));
      o.require(G->reduce(G->letters(a)) == a, "reduce is not idempotent");
      o.require(G->multiply(a, G->invert(a)) == G->identity(), "a * a^-1 != 1");
      o.require(G->multiply(G->invert(a), a) == G->identity(), "a^-1 * a != 1");
      o.require(G->multiply(G->multiply(a, b), c) == G->multiply(a, G->multiply(b, c)), "associativity");
      if (a.length() >= 2) {
        ++long_words;
        o.require(!G->element_of_S(a).has_value(), "a word of length >= 2 lies in S");
      }
    }
    o.require(long_words > 1000, "too few long words sampled");
    return o;
  });

  criterion(5, "verify_fusion for both variants; {S} on s4-d8 fails with a witness", 120, [] {
    Outcome o;
    for (const char* name : {"s4-d8", "a6-d8", "pgl2-9"})
      for (Variant v : {Variant::Robinson, Variant::LibmanSeeliger}) {
        const Instance& inst = support::instance(name);
        const FusionCheck c = verify_fusion(*amalgam(inst, v), *inst.F);
        o.require(c.equal, std::string(name) + " " + variant_name(v) + ": " + c.witness);
      }
    const Instance& inst = support::instance("s4-d8");
    AmalgamGroup bad(std::make_shared<RobinsonSetup>(
        build_setup(inst.L, {inst.F->lat().whole()}, Variant::Robinson, false)));
    const FusionCheck c = verify_fusion(bad, *inst.F);
    o.require(!c.equal, "{S} passed");
    o.require(!c.witness.empty(), "no witness for {S}");
    return o;
  });

  criterion(6, "center of G equals the inverse limit of Z_F on every catalog entry", 10, [] {
    Outcome o;
    for (const char* name : kEntries) {
      const Instance& inst = support::instance(name);
      const auto G = amalgam(inst, Variant::Robinson);
      const auto zg = amalgam_center(*G);
      const OrbitCategory O = orbit_category(*inst.F, true);
      const InverseLimit lim = inverse_limit(O.cat, center_functor(*inst.F, O));
      o.require(static_cast<long>(zg.size()) == lim.invariants.order(), std::string(name) + ": orders differ");
      o.require(zg.size() == support::fusion_oracle(inst).fusion_center().size(),
                std::string(name) + ": differs from the oracle Z(F)");
      const std::string want = std::string(name) == "inner-d8" ? "C2" : "1";
      o.require(lim.invariants.str() == want, std::string(name) + ": limit is " + lim.invariants.str());
    }
    return o;
  });

  std::map<std::string, std::pair<std::shared_ptr<AmalgamGroup>, OutTyp>> built;
  for (const char* name : {"s4-d8", "a6-d8"}) {
    const Instance& inst = support::instance(name);
    built[name] = {amalgam(inst, Variant::Robinson), out_typ(*inst.L, controlling_family(*inst.F, true))};
  }
  std::map<std::string, SplitReport> split;

  criterion(7, "Omega(gamma) matches every Out_typ class; gamma is order independent", 600, [&] {
    Outcome o;
    for (const char* name : {"s4-d8", "a6-d8"}) {
      const auto& [G, T] = built[name];
      split[name] = verify_split(*G, T);
      const SplitReport& r = split[name];
      o.require(r.rows.size() == T.classes.size(), std::string(name) + ": missing classes");
      for (const auto& row : r.rows) {
        o.require(row.full_match && row.family_match, std::string(name) + ": class " + std::to_string(row.cls));
        o.require(row.order_independent, std::string(name) + ": order dependence in class " + std::to_string(row.cls));
      }
      o.require(r.step4_ok == r.step4_pairs, std::string(name) + ": gamma not multiplicative on classes");
    }
    return o;
  });

  criterion(8, "Omega and upsilon multiplicative; Omega(c_x) = c_x", 300, [&] {
    Outcome o;
    for (const char* name : {"s4-d8", "a6-d8"}) {
      if (!split.count(name)) split[name] = verify_split(*built[name].first, built[name].second);
      const SplitReport& r = split[name];
      o.require(r.omega_pairs > 0 && r.omega_ok == r.omega_pairs, std::string(name) + ": Omega");
      o.require(r.upsilon_pairs > 0 && r.upsilon_ok == r.upsilon_pairs, std::string(name) + ": upsilon");
      o.require(r.inner_checked > 0 && r.inner_ok == r.inner_checked, std::string(name) + ": Omega(c_x)");
    }
    return o;
  });

  criterion(9, "higher limits: degree 0 is the limit, terminal objects kill lim^n, lim^1 recorded", 60, [&] {
    Outcome o;
    for (const char* name : kEntries) {
      const Instance& inst = support::instance(name);
      const OrbitCategory O = orbit_category(*inst.F, true);
      for (const AbFunctor& Z : {center_functor(*inst.F, O), constant_functor(O.cat, cyclic(2))})
        o.require(higher_limits(O.cat, Z, 0) == inverse_limit(O.cat, Z).invariants, std::string(name) + ": degree 0");
    }
    const FiniteCategory C = cone();
    for (int q : {2, 3, 4}) {
      const AbFunctor Z = constant_functor(C, cyclic(q));
      o.require(higher_limits(C, Z, 0).order() == q, "constant functor limit");
      for (int n = 1; n <= 3; ++n) o.require(higher_limits(C, Z, n).order() == 1, "nonzero lim^n on a cone");
    }
    for (const char* name : {"s4-d8", "a6-d8"}) {
      const auto& [G, T] = built[name];
      const ExactSequenceReport e = exact_sequence_report(*G, T);
      const Instance& inst = support::instance(name);
      const OrbitCategory O = orbit_category(*inst.F, true);
      o.require(e.lim1 == higher_limits(O.cat, center_functor(*inst.F, O), 1), std::string(name) + ": lim^1 not recorded");
      o.require(e.ok(), std::string(name) + ": " + (e.failures.empty() ? "" : e.failures.front()));
      std::printf("              %s: lim^1(Z_F) = %s\n", name, e.lim1.str().c_str());
    }
    return o;
  });

  criterion(10, "condition table for a6-d8 and pgl2-9; pgl2-9 passes all four and the injectivity criterion holds", 300, [] {
    Outcome o;
    for (const char* name : {"a6-d8", "pgl2-9"}) {
      const Instance& inst = support::instance(name);
      const auto fam = controlling_family(*inst.F, true);
      const OutTyp T = out_typ(*inst.L, fam);
      const LeafConditionReport r = leaf_conditions(*amalgam(inst, Variant::LibmanSeeliger), &T);
      o.require(static_cast<int>(r.rows.size()) == static_cast<int>(fam.size()) - 1, std::string(name) + ": table size");
      for (const auto& row : r.rows)
        std::printf("              %s %s: (i) %d (ii) %d (iii) %d (iv) %d\n", name, row.subgroup.c_str(), row.i, row.ii,
                    row.iii, row.iv);
      if (std::string(name) == "pgl2-9") {
        for (const auto& row : r.rows) o.require(row.i && row.ii && row.iii && row.iv, "pgl2-9: " + row.detail);
        o.require(r.center_cyclic_p, "pgl2-9: Z(S) is not of order 2");
        o.require(injectivity_criterion_holds(r), "pgl2-9: injectivity criterion fails");
      }
    }
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failed);
  return failed;
}
