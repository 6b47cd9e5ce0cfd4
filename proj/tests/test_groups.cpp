#include <doctest.h>

#include "flab/perm_group.hpp"
#include "oracle.hpp"

using namespace flab;

namespace {

PermGroup perm_group(int n, const std::vector<oracle::Pm>& gens) {
  std::vector<Perm> ps;
  for (const auto& g : gens) ps.emplace_back(g);
  return PermGroup::closure(n, ps);
}

oracle::Set as_set(const PermGroup& G, const Subgroup& H) {
  oracle::Set r;
  for (int x : H.elems) r.insert(G.element(x).images());
  return r;
}

Subgroup from_set(const PermGroup& G, const oracle::Set& s) {
  Subgroup h;
  for (const auto& x : s) h.elems.push_back(G.index_of(Perm(x)));
  std::sort(h.elems.begin(), h.elems.end());
  return h;
}

const oracle::Pm c4 = oracle::from_cycles(4, {{1, 2, 3, 4}});
const oracle::Pm t13 = oracle::from_cycles(4, {{1, 3}});
const oracle::Pm t12 = oracle::from_cycles(4, {{1, 2}});

}  // namespace

TEST_CASE("closure orders match the oracle") {
  CHECK(perm_group(4, {c4, t13}).order() == static_cast<int>(oracle::closure(4, {c4, t13}).size()));
  CHECK(perm_group(4, {c4, t13}).order() == 8);
  CHECK(perm_group(4, {}).order() == 1);
  CHECK(perm_group(4, {t12, c4}).order() == static_cast<int>(oracle::s4().size()));
  const oracle::Set a6 = oracle::a6();
  CHECK(perm_group(6, {oracle::from_cycles(6, {{1, 2, 3}}), oracle::from_cycles(6, {{2, 3, 4, 5, 6}})}).order() ==
        static_cast<int>(a6.size()));
}

TEST_CASE("perm labels and composition convention") {
  const Perm a(oracle::from_cycles(4, {{1, 2, 3}}));
  const Perm b(t12);
  CHECK((a * b).images() == oracle::mul(a.images(), b.images()));
  CHECK(a.cycles() == oracle::cycles(a.images()));
  CHECK(Perm::parse_cycles(4, "(1 2 3)") == a);
  CHECK(Perm::identity(4).cycles() == "()");
}

TEST_CASE("sylow subgroups") {
  const PermGroup S4 = perm_group(4, {t12, c4});
  const Subgroup P = sylow(S4.table(), 2);
  CHECK(P.order() == oracle::sylow_order(24, 2));
  // dihedral: the oracle finds exactly 8 automorphisms
  CHECK(oracle::automorphism_count(as_set(S4, P)) == 8);
  CHECK(sylow(S4.table(), 5).order() == 1);

  const PermGroup A6 = perm_group(6, {oracle::from_cycles(6, {{1, 2, 3}}), oracle::from_cycles(6, {{2, 3, 4, 5, 6}})});
  CHECK(sylow(A6.table(), 2).order() == oracle::sylow_order(static_cast<long>(oracle::a6().size()), 2));
  CHECK(is_p_group(sylow(A6.table(), 3), 3));
}

TEST_CASE("normalizer, centralizer and center against element scans") {
  const PermGroup S4 = perm_group(4, {t12, c4});
  const oracle::Set s4 = oracle::s4();
  const oracle::Set V = oracle::closure(4, {oracle::from_cycles(4, {{1, 2}, {3, 4}}), oracle::from_cycles(4, {{1, 3}, {2, 4}})});
  const Subgroup v = from_set(S4, V);
  CHECK(as_set(S4, normalizer(S4.table(), v)) == oracle::normalizer(s4, V));
  CHECK(normalizer(S4.table(), v).order() == 24);
  CHECK(as_set(S4, centralizer(S4.table(), v)) == oracle::centralizer(s4, V));
  CHECK(as_set(S4, centralizer(S4.table(), v)) == V);
  CHECK(center(S4.table()).order() == 1);
  for (const oracle::Set& H : oracle::subgroups(s4)) {
    const Subgroup h = from_set(S4, H);
    CHECK(as_set(S4, normalizer(S4.table(), h)) == oracle::normalizer(s4, H));
    CHECK(as_set(S4, centralizer(S4.table(), h)) == oracle::centralizer(s4, H));
  }
}

TEST_CASE("subgroup lattices") {
  const PermGroup D8 = perm_group(4, {c4, t13});
  const oracle::Set d8 = oracle::d8();
  const auto subs = oracle::subgroups(d8);
  CHECK(all_subgroups(D8.table()).size() == subs.size());
  // classes under conjugation, counted by the oracle
  std::set<std::set<oracle::Set>> classes;
  for (const auto& H : subs) {
    std::set<oracle::Set> cl;
    for (const auto& g : d8) cl.insert(oracle::conj_set(g, H));
    classes.insert(cl);
  }
  CHECK(subgroups_up_to_conjugacy(D8.table()).size() == classes.size());
  CHECK(subgroups_up_to_conjugacy(perm_group(4, {}).table()).size() == 1);
  CHECK(subgroups_up_to_conjugacy(perm_group(4, {t12}).table()).size() == 2);

  const PermGroup S4 = perm_group(4, {t12, c4});
  CHECK(all_subgroups(S4.table()).size() == oracle::subgroups(oracle::s4()).size());
}

TEST_CASE("automorphism counts") {
  const PermGroup D8 = perm_group(4, {c4, t13});
  CHECK(static_cast<long>(automorphisms(D8.table()).size()) == oracle::automorphism_count(oracle::d8()));
  CHECK(automorphisms(perm_group(4, {}).table()).size() == 1);
  const oracle::Pm a = oracle::from_cycles(4, {{1, 2}, {3, 4}}), b = oracle::from_cycles(4, {{1, 3}, {2, 4}});
  CHECK(static_cast<long>(automorphisms(perm_group(4, {a, b}).table()).size()) ==
        oracle::automorphism_count(oracle::closure(4, {a, b})));
  CHECK(oracle::automorphism_count(oracle::closure(4, {a, b})) == 6);
  for (const GroupHom& h : automorphisms(D8.table())) {
    CHECK(h.is_homomorphism());
    CHECK(h.is_injective());
  }
}

TEST_CASE("normal p-complements") {
  // C6 = <(1,2,3)(4,5)>
  const PermGroup C6 = perm_group(5, {oracle::from_cycles(5, {{1, 2, 3}, {4, 5}})});
  auto k = normal_p_complement(C6.table(), whole_group(C6.table()), 2);
  REQUIRE(k.has_value());
  CHECK(k->order() == 3);
  const PermGroup S3 = perm_group(3, {oracle::from_cycles(3, {{1, 2}}), oracle::from_cycles(3, {{1, 2, 3}})});
  CHECK_FALSE(normal_p_complement(S3.table(), whole_group(S3.table()), 3).has_value());
  auto k2 = normal_p_complement(S3.table(), whole_group(S3.table()), 2);
  REQUIRE(k2.has_value());
  CHECK(as_set(S3, *k2) == oracle::closure(3, {oracle::from_cycles(3, {{1, 2, 3}})}));
}

TEST_CASE("quotients") {
  const PermGroup S4 = perm_group(4, {t12, c4});
  const oracle::Pm a = oracle::from_cycles(4, {{1, 2}, {3, 4}}), b = oracle::from_cycles(4, {{1, 3}, {2, 4}});
  const Quotient q = quotient(S4.table(), whole_group(S4.table()), from_set(S4, oracle::closure(4, {a, b})));
  CHECK(q.group.order() == 6);
  const PermGroup S3 = perm_group(3, {oracle::from_cycles(3, {{1, 2}}), oracle::from_cycles(3, {{1, 2, 3}})});
  CHECK(find_isomorphism(q.group, S3.table()).has_value());
  // a cross-check of the same fact with the oracle's own search
  oracle::Table qt;
  qt.n = q.group.order();
  qt.id = q.group.identity();
  qt.mul = [&](int x, int y) { return q.group.mul(x, y); };
  CHECK(!oracle::isomorphisms(qt, oracle::table_of(oracle::closure(3, {oracle::from_cycles(3, {{1, 2}}),
                                                                      oracle::from_cycles(3, {{1, 2, 3}})})),
                              true)
             .empty());
  CHECK(quotient(S4.table(), whole_group(S4.table()), trivial_subgroup(S4.table())).group.order() == 24);
  CHECK(quotient(S4.table(), whole_group(S4.table()), whole_group(S4.table())).group.order() == 1);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(Perm::parse_cycles(4, "(1,5)"), InputError);
  CHECK_THROWS_AS(FiniteGroupTable::from_table({"a", "b"}, {0, 1, 0, 0}), InputError);
}
