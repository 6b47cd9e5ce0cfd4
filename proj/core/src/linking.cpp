#include "flab/linking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <cctype>
#include <sstream>

#include "flab/perm_group.hpp"

namespace flab {

namespace {

const Realization& need_realization(const FusionSystem& F) {
  if (!F.realization()) throw InputError("fusion system is not group-realized");
  if (F.top() != F.lat().whole()) throw InputError("fusion system must live over all of S");
  return *F.realization();
}

std::vector<int> centric_objects(const FusionSystem& F) {
  std::vector<int> out;
  for (int P : F.subgroups())
    if (is_f_centric(F, P)) out.push_back(P);
  return out;
}

}  // namespace

// ---- transporter category ----

TransporterCategory transporter_category(const FusionSystem& F, const std::vector<int>& collection) {
  const Realization& R = need_realization(F);
  const SubgroupLattice& L = F.lat();
  const Group& G = *R.G;
  std::set<int> coll(collection.begin(), collection.end());
  for (int P : collection) {
    for (int Q : f_conjugates(F, P))
      if (!coll.count(Q)) throw InputError("collection is not closed under F-conjugacy: " + L.name(Q));
    for (int Q = 0; Q < L.count(); ++Q)
      if (L.leq(P, Q) && !coll.count(Q)) throw InputError("collection is not closed under overgroups: " + L.name(Q));
  }
  TransporterCategory T;
  T.objects.assign(coll.begin(), coll.end());
  std::vector<std::string> names;
  for (int P : T.objects) names.push_back(L.name(P));
  T.cat = FiniteCategory(names);
  const int n = static_cast<int>(T.objects.size());
  std::vector<std::map<int, int>> by_elem(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Subgroup Pa = R.in_G(L[T.objects[a]]);
      Subgroup Qb = R.in_G(L[T.objects[b]]);
      for (int g : transporter(G, Pa, Qb)) {
        int m = T.cat.add_morphism(a, b, G.label(g));
        T.element.push_back(g);
        by_elem[a * n + b][g] = m;
      }
    }
  for (int a = 0; a < n; ++a) T.cat.set_identity(a, by_elem[a * n + a].at(G.identity()));
  T.cat.allocate_composition();
  for (int a = 0; a < T.cat.morphism_count(); ++a) {
    const auto& A = T.cat.morphism(a);
    for (int c = 0; c < n; ++c)
      for (int b : T.cat.hom(A.dst, c))
        T.cat.set_compose(b, a, by_elem[A.src * n + c].at(G.mul(T.element[b], T.element[a])));
  }
  return T;
}

// ---- linking systems ----

int LinkingSystem::delta(int P, int Q, int g) const {
  return delta_[static_cast<std::size_t>(P) * object_count() + Q][g];
}

Group LinkingSystem::aut_table(int P, std::vector<int>* morphs) const {
  std::vector<int> ms = auts(P);
  const int e = cat_.identity(P);
  std::stable_partition(ms.begin(), ms.end(), [&](int m) { return m == e; });
  std::map<int, int> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index[ms[i]] = static_cast<int>(i);
  const int n = static_cast<int>(ms.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = cat_.morphism(ms[a]).label;
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(cat_.compose(ms[a], ms[b]));
  }
  if (morphs) *morphs = ms;
  return Group::trusted(std::move(labels), std::move(table));
}

namespace {
int safe_compose(const FiniteCategory& c, int b, int a) {
  if (a < 0 || b < 0) return -1;
  return c.compose(b, a);
}
}  // namespace

void LinkingSystem::finalize() {
  const int n = object_count();
  const int e = lat_->S().identity();
  for (int P = 0; P < n; ++P) cat_.set_identity(P, delta(P, P, e));
  const int m = cat_.morphism_count();
  inverse_.assign(m, -1);
  restrict_.assign(static_cast<std::size_t>(m) * n, -1);
  for (int a = 0; a < m; ++a) {
    const auto& A = cat_.morphism(a);
    const int P = A.src, Q = A.dst;
    if (lat_->order(obj_sub_[P]) == lat_->order(obj_sub_[Q]))
      for (int b : cat_.hom(Q, P))
        if (safe_compose(cat_, b, a) == cat_.identity(P) && cat_.identity(P) >= 0) {
          inverse_[a] = b;
          break;
        }
    for (int R = 0; R < n; ++R) {
      if (!lat_->leq(obj_sub_[R], obj_sub_[P])) continue;
      const int img = fmap_restrict(*lat_, rho_[a], obj_sub_[R]).dst;
      const int R2 = sub_obj_[img];
      if (R2 < 0) continue;
      const int lhs = safe_compose(cat_, a, iota(R, P));
      if (lhs < 0) continue;
      for (int c : cat_.hom(R, R2))
        if (safe_compose(cat_, iota(R2, Q), c) == lhs) {
          restrict_[static_cast<std::size_t>(a) * n + R] = c;
          break;
        }
    }
  }
}

LinkingSystem linking_from_group(const FusionSystem& F) {
  const Realization& R = need_realization(F);
  const Group& G = *R.G;
  LinkingSystem Lk;
  Lk.lat_ = F.lattice_ptr();
  Lk.F_ = F;
  const SubgroupLattice& L = *Lk.lat_;
  Lk.obj_sub_ = centric_objects(F);
  Lk.sub_obj_.assign(L.count(), -1);
  const int n = Lk.object_count();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    Lk.sub_obj_[Lk.obj_sub_[i]] = i;
    names.push_back(L.name(Lk.obj_sub_[i]));
  }
  Lk.cat_ = FiniteCategory(names);

  // canon[P][g] = minimal element of g C'_G(P)
  std::vector<std::vector<int>> canon(n, std::vector<int>(G.order()));
  std::vector<Subgroup> PG(n);
  for (int P = 0; P < n; ++P) {
    PG[P] = R.in_G(L[Lk.obj_sub_[P]]);
    Subgroup C = centralizer(G, PG[P]);
    auto K = normal_p_complement(G, C, F.p());
    if (!K) throw std::logic_error("C_G(" + L.name(Lk.obj_sub_[P]) + ") has no normal p-complement");
    for (int g = 0; g < G.order(); ++g) {
      int best = g;
      for (int c : K->elems) best = std::min(best, G.mul(g, c));
      canon[P][g] = best;
    }
  }
  std::vector<std::vector<int>> by_rep(static_cast<std::size_t>(n) * n);
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q) {
      auto& idx = by_rep[P * n + Q];
      idx.assign(G.order(), -1);
      std::set<int> reps;
      for (int g : transporter(G, PG[P], PG[Q])) reps.insert(canon[P][g]);
      for (int g : reps) {
        int m = Lk.cat_.add_morphism(P, Q, G.label(g));
        idx[g] = m;
        Lk.ambient_.push_back(g);
        std::vector<int> img;
        for (int x : L[Lk.obj_sub_[P]].elems) img.push_back(R.g_to_s[G.conj(g, R.s_to_g[x])]);
        Lk.rho_.push_back(fmap_from_images(L, Lk.obj_sub_[P], std::move(img)));
      }
    }
  Lk.cat_.allocate_composition();
  for (int a = 0; a < Lk.cat_.morphism_count(); ++a) {
    const auto& A = Lk.cat_.morphism(a);
    for (int Q = 0; Q < n; ++Q)
      for (int b : Lk.cat_.hom(A.dst, Q))
        Lk.cat_.set_compose(b, a, by_rep[A.src * n + Q][canon[A.src][G.mul(Lk.ambient_[b], Lk.ambient_[a])]]);
  }
  Lk.delta_.assign(static_cast<std::size_t>(n) * n, std::vector<int>(L.S().order(), -1));
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q)
      for (int s = 0; s < L.S().order(); ++s) {
        int g = R.s_to_g[s];
        if (!L.leq(L.conj(s, Lk.obj_sub_[P]), Lk.obj_sub_[Q])) continue;
        Lk.delta_[P * n + Q][s] = by_rep[P * n + Q][canon[P][g]];
      }
  Lk.finalize();
  return Lk;
}

// ---- validators ----

std::vector<AxiomResult> LinkingSystem::validate() const {
  std::vector<AxiomResult> out;
  const SubgroupLattice& L = *lat_;
  const Group& S = L.S();
  const int n = object_count();
  auto fail = [](AxiomResult& r, const std::string& w) {
    if (r.ok) r.witness = w;
    r.ok = false;
  };
  auto lbl = [&](int m) { return m < 0 ? std::string("<none>") : cat_.morphism(m).label; };

  AxiomResult cat{"category", true, {}};
  std::string c = cat_.check_axioms();
  if (!c.empty()) fail(cat, c);
  out.push_back(cat);

  AxiomResult a1{"A1", true, {}};
  if (sub_obj_[L.whole()] < 0) fail(a1, "S is not an object");
  for (int P = 0; P < n; ++P) {
    const int p = obj_sub_[P];
    for (int q : f_conjugates(F_, p))
      if (sub_obj_[q] < 0) fail(a1, "F-conjugate " + L.name(q) + " of " + L.name(p) + " is not an object");
    for (int q = 0; q < L.count(); ++q)
      if (L.leq(p, q) && sub_obj_[q] < 0) fail(a1, "overgroup " + L.name(q) + " of " + L.name(p) + " is not an object");
  }
  for (int q = 0; q < L.count(); ++q)
    if (is_f_centric(F_, q) != (sub_obj_[q] >= 0))
      fail(a1, "objects differ from the F-centric subgroups at " + L.name(q));
  out.push_back(a1);
  if (!c.empty()) {
    // Composition is unreliable; the remaining checks would only cascade.
    for (const char* ax : {"A2", "B", "C", "I", "II"}) out.push_back(AxiomResult{ax, false, "skipped: category axioms fail"});
    return out;
  }

  AxiomResult a2{"A2", true, {}};
  for (int P = 0; P < n && a2.ok; ++P) {
    const Subgroup& Z = L[L.center(obj_sub_[P])];
    for (int Q = 0; Q < n; ++Q) {
      std::map<FMap, int> fibre;
      for (int m : cat_.hom(P, Q)) {
        std::set<int> orbit;
        for (int z : Z.elems) {
          int mz = safe_compose(cat_, m, delta(P, P, z));
          if (mz < 0) continue;
          orbit.insert(mz);
          if (rho_[mz] != rho_[m]) fail(a2, "rho not constant on the E(P)-orbit of " + lbl(m));
        }
        if (static_cast<int>(orbit.size()) != Z.order())
          fail(a2, "E(" + L.name(obj_sub_[P]) + ") does not act freely on " + lbl(m));
        ++fibre[rho_[m]];
      }
      std::vector<FMap> homs = F_.hom(obj_sub_[P], obj_sub_[Q]);
      if (homs.size() != fibre.size()) fail(a2, "rho is not onto Hom_F(" + L.name(obj_sub_[P]) + ", " + L.name(obj_sub_[Q]) + ")");
      for (const auto& [f, k] : fibre)
        if (k != Z.order()) fail(a2, "rho fibre over " + fmap_describe(L, f) + " has size " + std::to_string(k));
    }
  }
  out.push_back(a2);

  AxiomResult b{"B", true, {}};
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q) {
      std::set<int> seen;
      for (int s = 0; s < S.order(); ++s) {
        const bool in = L.leq(L.conj(s, obj_sub_[P]), obj_sub_[Q]);
        const int d = delta(P, Q, s);
        if (!in) {
          if (d >= 0) fail(b, "delta defined outside N_S(P,Q) at " + S.label(s));
          continue;
        }
        if (d < 0) {
          fail(b, "delta_{" + L.name(obj_sub_[P]) + "," + L.name(obj_sub_[Q]) + "}(" + S.label(s) + ") is undefined");
          continue;
        }
        if (!seen.insert(d).second) fail(b, "delta is not injective at " + S.label(s));
        if (rho_[d] != fmap_conj(L, s, obj_sub_[P])) fail(b, "rho(delta(g)) != c_g at " + S.label(s));
        for (int R = 0; R < n; ++R)
          for (int t = 0; t < S.order(); ++t) {
            const int d2 = delta(Q, R, t);
            const int d3 = delta(P, R, S.mul(t, s));
            if (d2 < 0 || d3 < 0) continue;
            if (safe_compose(cat_, d2, d) != d3) fail(b, "delta is not a functor at " + S.label(t) + " o " + S.label(s));
          }
      }
    }
  out.push_back(b);

  AxiomResult cc{"C", true, {}};
  for (int m = 0; m < cat_.morphism_count(); ++m) {
    const int P = cat_.morphism(m).src, P2 = cat_.morphism(m).dst;
    for (int g : L[obj_sub_[P]].elems) {
      const int lhs = safe_compose(cat_, m, delta(P, P, g));
      const int rhs = safe_compose(cat_, delta(P2, P2, fmap_apply(L, rho_[m], g)), m);
      if (lhs != rhs || lhs < 0) {
        fail(cc, "square fails for " + lbl(m) + " at " + S.label(g));
        break;
      }
    }
  }
  out.push_back(cc);

  AxiomResult ax1{"I", true, {}};
  const int s_obj = sub_obj_[L.whole()];
  if (s_obj >= 0) {
    const int aut = static_cast<int>(auts(s_obj).size());
    if (aut % S.order() != 0 || (aut / S.order()) % p() == 0)
      fail(ax1, "delta(S) is not Sylow in Aut_L(S), |Aut_L(S)| = " + std::to_string(aut));
  } else {
    fail(ax1, "S is not an object");
  }
  out.push_back(ax1);

  AxiomResult ax2{"II", true, {}};
  for (int phi = 0; phi < cat_.morphism_count() && ax2.ok; ++phi) {
    const int P = cat_.morphism(phi).src, P2 = cat_.morphism(phi).dst;
    if (rho_[phi].dst != obj_sub_[P2]) continue;
    const int inv = inverse_[phi];
    if (inv < 0) {
      fail(ax2, "isomorphism " + lbl(phi) + " has no inverse");
      break;
    }
    for (int T = 0; T < n; ++T) {
      if (!L.leq(obj_sub_[P], obj_sub_[T]) || !L.leq(obj_sub_[T], L.normalizer(obj_sub_[P]))) continue;
      for (int T2 = 0; T2 < n; ++T2) {
        if (!L.leq(obj_sub_[P2], obj_sub_[T2]) || !L.leq(obj_sub_[T2], L.normalizer(obj_sub_[P2]))) continue;
        std::set<int> allowed;
        for (int h : L[obj_sub_[T2]].elems) allowed.insert(delta(P2, P2, h));
        bool cond = true;
        for (int g : L[obj_sub_[T]].elems)
          if (!allowed.count(safe_compose(cat_, safe_compose(cat_, phi, delta(P, P, g)), inv))) {
            cond = false;
            break;
          }
        if (!cond) continue;
        const int target = safe_compose(cat_, iota(P2, T2), phi);
        bool found = false;
        for (int ext : cat_.hom(T, T2))
          if (safe_compose(cat_, ext, iota(P, T)) == target) {
            found = true;
            break;
          }
        if (!found) fail(ax2, lbl(phi) + " does not extend to " + L.name(obj_sub_[T]) + " -> " + L.name(obj_sub_[T2]));
      }
    }
  }
  out.push_back(ax2);
  return out;
}

// ---- abstract data ----

nlohmann::json LinkingSystem::to_json(const std::string& name) const {
  using nlohmann::json;
  const SubgroupLattice& L = *lat_;
  const Group& S = L.S();
  // S as a permutation group on the points of its labels.
  int degree = 0;
  std::vector<int> gens = small_generating_set(S, L[L.whole()]);
  for (int x = 0; x < S.order(); ++x) {
    const std::string& s = S.label(x);
    std::string num;
    for (char ch : s + ")") {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        num += ch;
      } else if (!num.empty()) {
        degree = std::max(degree, std::stoi(num));
        num.clear();
      }
    }
  }
  json j;
  j["name"] = name;
  j["p"] = p();
  json sj;
  sj["name"] = "S";
  sj["degree"] = degree;
  sj["generators"] = json::array();
  for (int g : gens) sj["generators"].push_back(Perm::parse_cycles(degree, S.label(g)).images());
  j["S"] = sj;
  j["objects"] = json::array();
  for (int P : obj_sub_) {
    json o = json::array();
    for (int g : small_generating_set(S, L[P])) o.push_back(S.label(g));
    j["objects"].push_back(o);
  }
  j["morphisms"] = json::array();
  for (int m = 0; m < cat_.morphism_count(); ++m) {
    const auto& M = cat_.morphism(m);
    json mj;
    mj["label"] = M.label;
    mj["src"] = M.src;
    mj["dst"] = M.dst;
    json rho = json::array();
    for (int g : small_generating_set(S, L[obj_sub_[M.src]]))
      rho.push_back({S.label(g), S.label(fmap_apply(L, rho_[m], g))});
    mj["rho"] = rho;
    j["morphisms"].push_back(mj);
  }
  j["composition"] = json::array();
  for (int a = 0; a < cat_.morphism_count(); ++a)
    for (int Q = 0; Q < object_count(); ++Q)
      for (int b : cat_.hom(cat_.morphism(a).dst, Q)) j["composition"].push_back({b, a, cat_.compose(b, a)});
  j["delta"] = json::array();
  for (int P = 0; P < object_count(); ++P)
    for (int Q = 0; Q < object_count(); ++Q)
      for (int s = 0; s < S.order(); ++s)
        if (delta(P, Q, s) >= 0) j["delta"].push_back({P, Q, S.label(s), delta(P, Q, s)});
  return j;
}

LinkingSystem linking_from_data(const nlohmann::json& j) {
  LinkingSystem Lk;
  try {
    const int p = j.at("p").get<int>();
    if (!is_prime(p)) throw InputError("p must be prime");
    PermGroup S = PermGroup::from_json(j.at("S"));
    auto lat = std::make_shared<SubgroupLattice>(S.table(), p);
    Lk.lat_ = lat;
    const SubgroupLattice& L = *lat;
    const Group& St = L.S();
    auto elem = [&](const std::string& label) {
      int x = St.find_label(label);
      if (x < 0) x = S.index_of(Perm::parse_cycles(S.degree(), label));
      if (x < 0) throw InputError("unknown element of S: " + label);
      return x;
    };
    Lk.sub_obj_.assign(L.count(), -1);
    std::vector<std::string> names;
    for (const auto& o : j.at("objects")) {
      std::vector<int> gens;
      for (const auto& g : o) gens.push_back(elem(g.get<std::string>()));
      const int id = L.find(generate(St, gens));
      if (Lk.sub_obj_[id] >= 0) throw InputError("object listed twice: " + L.name(id));
      Lk.sub_obj_[id] = static_cast<int>(Lk.obj_sub_.size());
      Lk.obj_sub_.push_back(id);
      names.push_back(L.name(id));
    }
    const int n = Lk.object_count();
    Lk.cat_ = FiniteCategory(names);
    for (const auto& mj : j.at("morphisms")) {
      const int src = mj.at("src").get<int>(), dst = mj.at("dst").get<int>();
      if (src < 0 || src >= n || dst < 0 || dst >= n) throw InputError("morphism endpoint out of range");
      Lk.cat_.add_morphism(src, dst, mj.value("label", std::string("m") + std::to_string(Lk.rho_.size())));
      // extend the generator table to a map on the whole source
      const Subgroup& P = L[Lk.obj_sub_[src]];
      std::vector<int> map(St.order(), -1);
      std::vector<std::pair<int, int>> gens;
      for (const auto& pr : mj.at("rho")) gens.emplace_back(elem(pr.at(0).get<std::string>()), elem(pr.at(1).get<std::string>()));
      map[St.identity()] = St.identity();
      std::vector<int> done{St.identity()};
      for (std::size_t i = 0; i < done.size(); ++i)
        for (auto [x, y] : gens) {
          const int u = St.mul(done[i], x), v = St.mul(map[done[i]], y);
          if (map[u] < 0) {
            map[u] = v;
            done.push_back(u);
          } else if (map[u] != v) {
            throw InputError("rho of " + Lk.cat_.morphism(Lk.cat_.morphism_count() - 1).label + " is not a homomorphism");
          }
        }
      std::vector<int> img;
      for (int x : P.elems) {
        if (map[x] < 0) throw InputError("rho table does not generate the source object");
        img.push_back(map[x]);
      }
      FMap f = fmap_from_images(L, Lk.obj_sub_[src], std::move(img));
      if (!fmap_is_hom(L, f) || !L.leq(f.dst, Lk.obj_sub_[dst])) throw InputError("rho image is not an injective map into the target");
      Lk.rho_.push_back(std::move(f));
    }
    Lk.cat_.allocate_composition();
    const int m = Lk.cat_.morphism_count();
    for (const auto& t : j.at("composition")) {
      const int b = t.at(0).get<int>(), a = t.at(1).get<int>(), c = t.at(2).get<int>();
      if (a < 0 || a >= m || b < 0 || b >= m || c < 0 || c >= m) throw InputError("composition entry out of range");
      Lk.cat_.set_compose(b, a, c);
    }
    Lk.delta_.assign(static_cast<std::size_t>(n) * n, std::vector<int>(St.order(), -1));
    for (const auto& t : j.at("delta")) {
      const int P = t.at(0).get<int>(), Q = t.at(1).get<int>(), mm = t.at(3).get<int>();
      if (P < 0 || P >= n || Q < 0 || Q >= n || mm < 0 || mm >= m) throw InputError("delta entry out of range");
      Lk.delta_[P * n + Q][elem(t.at(2).get<std::string>())] = mm;
    }
    std::vector<FMap> gens(Lk.rho_.begin(), Lk.rho_.end());
    Lk.F_ = FusionSystem::generated(lat, L.whole(), gens, "abstract");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("linking data: ") + e.what());
  }
  Lk.finalize();
  std::string failures;
  for (const AxiomResult& r : Lk.validate())
    if (!r.ok) failures += (failures.empty() ? "" : "; ") + ("axiom " + r.axiom + ": " + r.witness);
  if (!failures.empty()) throw InputError("linking data rejected: " + failures);
  return Lk;
}

RestrictedAut aut_L_restricted(const LinkingSystem& L, int P) {
  RestrictedAut r;
  const int s = L.s_object();
  const int p = L.subgroup_of(P);
  std::set<int> seen;
  for (int m : L.auts(s)) {
    if (fmap_restrict(L.lat(), L.rho(m), p).dst != p) continue;
    r.morphs.push_back(m);
    const int res = L.restrict_to(m, P);
    r.restricted.push_back(res);
    if (!seen.insert(res).second) r.injective = false;
  }
  return r;
}

// ---- orbit category ----

OrbitCategory orbit_category(const FusionSystem& F, bool centric_only) {
  const SubgroupLattice& L = F.lat();
  OrbitCategory O;
  for (int P : F.subgroups())
    if (!centric_only || is_f_centric(F, P)) O.objects.push_back(P);
  const int n = static_cast<int>(O.objects.size());
  std::vector<std::string> names;
  for (int P : O.objects) names.push_back(L.name(P));
  O.cat = FiniteCategory(names);
  // (map, target object) -> orbit morphism
  std::map<std::pair<FMap, int>, int> orbit_of;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int Q = O.objects[b];
      for (const FMap& f : F.hom(O.objects[a], Q)) {
        if (orbit_of.count({f, b})) continue;
        std::set<FMap> orbit;
        for (int q : L[Q].elems) orbit.insert(fmap_compose(L, fmap_conj(L, q, f.dst), f));
        const int id = O.cat.add_morphism(a, b, fmap_describe(L, *orbit.begin()));
        O.rep.push_back(*orbit.begin());
        for (const FMap& g : orbit) orbit_of[{g, b}] = id;
      }
    }
  for (int a = 0; a < n; ++a) O.cat.set_identity(a, orbit_of.at({fmap_identity(L, O.objects[a]), a}));
  O.cat.allocate_composition();
  for (int a = 0; a < O.cat.morphism_count(); ++a) {
    const auto& A = O.cat.morphism(a);
    for (int c = 0; c < n; ++c)
      for (int b : O.cat.hom(A.dst, c)) {
        const FMap& fa = O.rep[a];
        FMap comp = fmap_compose(L, fmap_restrict(L, O.rep[b], fa.dst), fa);
        O.cat.set_compose(b, a, orbit_of.at({comp, c}));
      }
  }
  return O;
}

}  // namespace flab
