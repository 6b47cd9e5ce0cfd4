#include "flab/fusion.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace flab {

// ---- lattice ----

SubgroupLattice::SubgroupLattice(Group s, int p) : s_(std::move(s)), p_(p) {
  subs_ = all_subgroups(s_);
  if (!is_p_group(subs_.back(), p_)) throw InputError("lattice: S is not a p-group");
  const int n = count();
  const int m = s_.order();
  pos_.assign(n, std::vector<int>(m, -1));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < subs_[i].order(); ++t) pos_[i][subs_[i].elems[t]] = t;
  below_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (subs_[j].subset_of(subs_[i])) below_[i].push_back(j);
  norm_.resize(n);
  cent_.resize(n);
  center_.resize(n);
  frat_.resize(n);
  const Subgroup all = subs_.back();
  for (int i = 0; i < n; ++i) {
    norm_[i] = find(normalizer_in(s_, all, subs_[i]));
    cent_[i] = find(centralizer_in(s_, all, subs_[i]));
    center_[i] = find(center_of(s_, subs_[i]));
    std::vector<int> gens;
    for (int a : subs_[i].elems) {
      gens.push_back(s_.power(a, p_));
      for (int b : subs_[i].elems) gens.push_back(s_.mul(s_.mul(a, b), s_.mul(s_.inv(a), s_.inv(b))));
    }
    frat_[i] = find(generate(s_, gens));
  }
}

int SubgroupLattice::find(const std::vector<int>& sorted) const {
  auto it = std::lower_bound(subs_.begin(), subs_.end(), Subgroup{sorted}, canonical_less);
  if (it != subs_.end() && it->elems == sorted) return static_cast<int>(it - subs_.begin());
  return -1;
}

bool SubgroupLattice::leq(int a, int b) const {
  return std::binary_search(below_[b].begin(), below_[b].end(), a);
}

int SubgroupLattice::conj(int x, int id) const { return find(conjugate(s_, subs_[id], x)); }

int SubgroupLattice::meet(int a, int b) const { return find(intersect(subs_[a], subs_[b])); }

std::string SubgroupLattice::name(int id) const {
  if (subs_[id].order() == 1) return "1";
  std::vector<int> gens = small_generating_set(s_, subs_[id]);
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += s_.label(gens[i]);
  }
  return out + ">";
}

// ---- maps ----

FMap fmap_from_images(const SubgroupLattice& lat, int src, std::vector<int> img) {
  std::vector<int> sorted = img;
  std::sort(sorted.begin(), sorted.end());
  int dst = lat.find(sorted);
  if (dst < 0) throw InputError("map image is not a subgroup");
  return FMap{src, dst, std::move(img)};
}

FMap fmap_identity(const SubgroupLattice& lat, int p) { return FMap{p, p, lat[p].elems}; }

FMap fmap_conj(const SubgroupLattice& lat, int x, int p) {
  std::vector<int> img;
  for (int y : lat[p].elems) img.push_back(lat.S().conj(x, y));
  return fmap_from_images(lat, p, std::move(img));
}

int fmap_apply(const SubgroupLattice& lat, const FMap& f, int x) {
  int t = lat.pos(f.src, x);
  if (t < 0) throw std::logic_error("fmap_apply: element outside domain");
  return f.img[t];
}

FMap fmap_compose(const SubgroupLattice& lat, const FMap& g, const FMap& f) {
  if (f.dst != g.src) throw std::logic_error("fmap_compose: not composable");
  FMap r{f.src, g.dst, {}};
  r.img.reserve(f.img.size());
  for (int y : f.img) r.img.push_back(g.img[lat.pos(g.src, y)]);
  return r;
}

FMap fmap_inverse(const SubgroupLattice& lat, const FMap& f) {
  FMap r{f.dst, f.src, std::vector<int>(f.img.size())};
  const auto& dom = lat[f.src].elems;
  for (std::size_t t = 0; t < f.img.size(); ++t) r.img[lat.pos(f.dst, f.img[t])] = dom[t];
  return r;
}

FMap fmap_restrict(const SubgroupLattice& lat, const FMap& f, int sub) {
  std::vector<int> img;
  for (int x : lat[sub].elems) img.push_back(fmap_apply(lat, f, x));
  return fmap_from_images(lat, sub, std::move(img));
}

bool fmap_is_hom(const SubgroupLattice& lat, const FMap& f) {
  const Group& s = lat.S();
  for (int a : lat[f.src].elems)
    for (int b : lat[f.src].elems)
      if (fmap_apply(lat, f, s.mul(a, b)) != s.mul(fmap_apply(lat, f, a), fmap_apply(lat, f, b)))
        return false;
  std::vector<int> sorted = f.img;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string fmap_describe(const SubgroupLattice& lat, const FMap& f) {
  std::ostringstream out;
  out << lat.name(f.src) << " -> " << lat.name(f.dst) << " [";
  std::vector<int> gens = small_generating_set(lat.S(), lat[f.src]);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ", ";
    out << lat.S().label(gens[i]) << " |-> " << lat.S().label(fmap_apply(lat, f, gens[i]));
  }
  out << "]";
  return out.str();
}

Subgroup Realization::in_G(const Subgroup& p_in_s) const {
  Subgroup r;
  for (int x : p_in_s.elems) r.elems.push_back(s_to_g[x]);
  std::sort(r.elems.begin(), r.elems.end());
  return r;
}

// ---- fusion systems ----

FusionSystem::FusionSystem(std::shared_ptr<const SubgroupLattice> lat, int top, std::string provenance)
    : lat_(std::move(lat)), top_(top), provenance_(std::move(provenance)) {
  isos_.assign(lat_->count(), {});
}

std::vector<FMap> FusionSystem::hom(int p, int q) const {
  std::vector<FMap> out;
  for (const FMap& f : isos_[p])
    if (lat_->leq(f.dst, q)) out.push_back(f);
  return out;
}

bool FusionSystem::contains(const FMap& f) const { return isos_[f.src].count(f) > 0; }

std::size_t FusionSystem::morphism_count() const {
  std::size_t n = 0;
  for (const auto& s : isos_) n += s.size();
  return n;
}

std::vector<int> FusionSystem::subgroups() const { return lat_->contained_in(top_); }

int FusionSystem::normalizer(int p) const { return lat_->meet(lat_->normalizer(p), top_); }

int FusionSystem::centralizer(int p) const { return lat_->meet(lat_->centralizer(p), top_); }

FusionSystem FusionSystem::generated(std::shared_ptr<const SubgroupLattice> lat, int top,
                                     const std::vector<FMap>& gens, std::string provenance) {
  FusionSystem F(lat, top, std::move(provenance));
  const SubgroupLattice& L = *lat;
  std::vector<std::vector<FMap>> by_dst(L.count());
  std::deque<FMap> queue;
  auto add = [&](FMap f) {
    if (!L.leq(f.src, top) || !L.leq(f.dst, top)) throw InputError("generator is not inside the carrier");
    if (F.isos_[f.src].insert(f).second) {
      by_dst[f.dst].push_back(f);
      queue.push_back(std::move(f));
    }
  };
  for (const FMap& g : gens) {
    if (!fmap_is_hom(L, g)) throw InputError("generator is not an injective homomorphism");
    add(g);
  }
  for (int x : L[top].elems) add(fmap_conj(L, x, top));
  while (!queue.empty()) {
    FMap f = std::move(queue.front());
    queue.pop_front();
    add(fmap_inverse(L, f));
    for (int r : L.contained_in(f.src))
      if (r != f.src) add(fmap_restrict(L, f, r));
    std::vector<FMap> after(F.isos_[f.dst].begin(), F.isos_[f.dst].end());
    for (const FMap& g : after) add(fmap_compose(L, g, f));
    std::vector<FMap> before = by_dst[f.src];
    for (const FMap& h : before) add(fmap_compose(L, f, h));
  }
  return F;
}

FusionSystem fusion_from_group(std::shared_ptr<const Group> G, const Subgroup& S, int p) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (!is_p_group(S, p) || S.order() != p_part(G->order(), p))
    throw InputError("S is not a Sylow p-subgroup of G");
  Realization real;
  real.G = G;
  real.S = S;
  real.s_to_g = S.elems;
  real.g_to_s.assign(G->order(), -1);
  for (int i = 0; i < S.order(); ++i) real.g_to_s[S.elems[i]] = i;
  auto lat = std::make_shared<SubgroupLattice>(subgroup_table(*G, S), p);
  FusionSystem F(lat, lat->whole(), "group-realized");
  for (int id = 0; id < lat->count(); ++id) {
    const Subgroup& P = (*lat)[id];
    for (int g = 0; g < G->order(); ++g) {
      std::vector<int> img;
      img.reserve(P.elems.size());
      bool inside = true;
      for (int x : P.elems) {
        int y = real.g_to_s[G->conj(g, real.s_to_g[x])];
        if (y < 0) { inside = false; break; }
        img.push_back(y);
      }
      if (inside) F.isos_[id].insert(fmap_from_images(*lat, id, std::move(img)));
    }
  }
  F.set_realization(std::move(real));
  return F;
}

std::vector<int> f_conjugates(const FusionSystem& F, int p) {
  std::set<int> out;
  for (const FMap& f : F.isos_from(p)) out.insert(f.dst);
  return {out.begin(), out.end()};
}

bool is_fully_normalized(const FusionSystem& F, int p) {
  const int n = F.lat().order(F.normalizer(p));
  for (int q : f_conjugates(F, p))
    if (F.lat().order(F.normalizer(q)) > n) return false;
  return true;
}

bool is_fully_centralized(const FusionSystem& F, int p) {
  const int c = F.lat().order(F.centralizer(p));
  for (int q : f_conjugates(F, p))
    if (F.lat().order(F.centralizer(q)) > c) return false;
  return true;
}

bool is_f_centric(const FusionSystem& F, int p) {
  for (int q : f_conjugates(F, p))
    if (!F.lat().leq(F.centralizer(q), q)) return false;
  return true;
}

Group aut_f_table(const FusionSystem& F, int p, std::vector<FMap>* elements) {
  std::vector<FMap> auts = F.aut(p);
  // identity first
  FMap id = fmap_identity(F.lat(), p);
  auto it = std::find(auts.begin(), auts.end(), id);
  std::rotate(auts.begin(), it, it + 1);
  std::sort(auts.begin() + 1, auts.end());
  std::map<FMap, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(auts.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = "a" + std::to_string(a);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(fmap_compose(F.lat(), auts[a], auts[b]));
  }
  if (elements) *elements = auts;
  return Group::trusted(std::move(labels), std::move(table));
}

namespace {
// Aut_F(P) with Inn(P) and Aut_S(P) as subgroups of its table.
struct AutData {
  Group table;
  std::vector<FMap> elems;
  Subgroup inn, auts;
};

AutData aut_data(const FusionSystem& F, int p) {
  AutData d;
  d.table = aut_f_table(F, p, &d.elems);
  std::map<FMap, int> index;
  for (std::size_t i = 0; i < d.elems.size(); ++i) index[d.elems[i]] = static_cast<int>(i);
  std::set<int> inn, auts;
  for (int x : F.lat()[p].elems) inn.insert(index.at(fmap_conj(F.lat(), x, p)));
  for (int x : F.lat()[F.normalizer(p)].elems) auts.insert(index.at(fmap_conj(F.lat(), x, p)));
  d.inn.elems.assign(inn.begin(), inn.end());
  d.auts.elems.assign(auts.begin(), auts.end());
  return d;
}
}  // namespace

int out_f_order(const FusionSystem& F, int p) {
  AutData d = aut_data(F, p);
  return d.table.order() / d.inn.order();
}

int aut_s_order(const FusionSystem& F, int p) { return aut_data(F, p).auts.order(); }

bool is_f_radical(const FusionSystem& F, int p) {
  AutData d = aut_data(F, p);
  Quotient out = quotient(d.table, whole_group(d.table), d.inn);
  return op_subgroup(out.group, whole_group(out.group), F.p()).order() == 1;
}

SaturationReport check_saturation(const FusionSystem& F) {
  SaturationReport rep;
  const SubgroupLattice& L = F.lat();
  const int p = F.p();
  for (int P : F.subgroups()) {
    if (!is_fully_normalized(F, P)) continue;
    ++rep.checked_axiom1;
    if (!is_fully_centralized(F, P)) {
      rep.axiom1 = false;
      if (rep.witness.empty()) rep.witness = "axiom I: " + L.name(P) + " is fully normalized but not fully centralized";
      continue;
    }
    AutData d = aut_data(F, P);
    if ((d.table.order() / d.auts.order()) % p == 0 && rep.witness.empty()) {
      rep.axiom1 = false;
      rep.witness = "axiom I: Out_S(" + L.name(P) + ") is not Sylow in Out_F; |Aut_F| = " +
                    std::to_string(d.table.order()) + ", |Aut_S| = " + std::to_string(d.auts.order());
    } else if ((d.table.order() / d.auts.order()) % p == 0) {
      rep.axiom1 = false;
    }
  }
  for (int P : F.subgroups()) {
    const int NP = F.normalizer(P);
    for (const FMap& f : F.isos_from(P)) {
      if (!is_fully_centralized(F, f.dst)) continue;
      ++rep.checked_axiom2;
      // Aut_S(f(P)) as maps
      std::set<FMap> auts_target;
      for (int x : L[F.normalizer(f.dst)].elems) auts_target.insert(fmap_conj(L, x, f.dst));
      FMap finv = fmap_inverse(L, f);
      std::vector<int> nf;
      for (int g : L[NP].elems) {
        FMap t = fmap_compose(L, f, fmap_compose(L, fmap_conj(L, g, P), finv));
        if (auts_target.count(t)) nf.push_back(g);
      }
      int Nf = L.find(nf);
      bool extended = false;
      for (const FMap& e : F.isos_from(Nf))
        if (fmap_restrict(L, e, P) == f) { extended = true; break; }
      if (!extended) {
        rep.axiom2 = false;
        if (rep.witness.empty())
          rep.witness = "axiom II: " + fmap_describe(L, f) + " does not extend to N_f = " + L.name(Nf);
      }
    }
  }
  rep.saturated = rep.axiom1 && rep.axiom2;
  return rep;
}

FusionSystem normalizer_fusion_system(const FusionSystem& F, int p) {
  if (!is_fully_normalized(F, p)) throw InputError("normalizer fusion system: subgroup is not fully normalized");
  const SubgroupLattice& L = F.lat();
  const int N = F.normalizer(p);
  std::vector<FMap> gens;
  for (int R : L.contained_in(N)) {
    if (!L.leq(p, R)) continue;
    for (const FMap& f : F.isos_from(R)) {
      if (!L.leq(f.dst, N)) continue;
      if (fmap_restrict(L, f, p).dst != p) continue;
      gens.push_back(f);
    }
  }
  return FusionSystem::generated(F.lattice_ptr(), N, gens, "normalizer");
}

bool is_normal_in_F(const FusionSystem& F, int p) {
  if (F.normalizer(p) != F.top()) return false;
  return fusion_equals(normalizer_fusion_system(F, p), F);
}

FusionSystem generated_fusion(std::shared_ptr<const SubgroupLattice> lat, int top, const std::vector<FMap>& gens) {
  return FusionSystem::generated(std::move(lat), top, gens, "generated");
}

FusionWitness fusion_compare(const FusionSystem& a, const FusionSystem& b) {
  FusionWitness w;
  if (a.top() != b.top()) {
    w.equal = false;
    w.detail = "different carriers";
    return w;
  }
  for (int P : a.subgroups()) {
    for (const FMap& f : a.isos_from(P))
      if (!b.contains(f)) {
        w.equal = false;
        w.detail = "only in first: " + fmap_describe(a.lat(), f);
        return w;
      }
    for (const FMap& f : b.isos_from(P))
      if (!a.contains(f)) {
        w.equal = false;
        w.detail = "only in second: " + fmap_describe(a.lat(), f);
        return w;
      }
  }
  return w;
}

std::vector<int> nfs_class(const FusionSystem& F, int p) {
  std::set<int> out;
  for (const FMap& a : F.aut(F.top())) out.insert(fmap_restrict(F.lat(), a, p).dst);
  return {out.begin(), out.end()};
}

std::vector<int> centric_radical(const FusionSystem& F) {
  std::vector<int> out;
  for (int P : F.subgroups())
    if (is_f_centric(F, P) && is_f_radical(F, P)) out.push_back(P);
  return out;
}

namespace {
int choose_rep(const FusionSystem& F, const std::vector<int>& members) {
  int best = -1;
  bool best_fn = false;
  int best_n = -1;
  for (int m : members) {  // members are in canonical order
    bool fn = is_fully_normalized(F, m);
    int n = F.lat().order(F.normalizer(m));
    if (best < 0 || (fn && !best_fn) || (fn == best_fn && n > best_n)) {
      best = m;
      best_fn = fn;
      best_n = n;
    }
  }
  return best;
}
}  // namespace

std::vector<int> controlling_family(const FusionSystem& F, bool complete) {
  std::vector<int> cr = centric_radical(F);
  std::vector<int> family{F.top()};
  std::set<int> covered{F.top()};
  for (int P : cr) {
    if (covered.count(P)) continue;
    std::vector<int> cls = complete ? nfs_class(F, P) : f_conjugates(F, P);
    for (int m : cls) covered.insert(m);
    if (std::find(cls.begin(), cls.end(), F.top()) != cls.end()) continue;
    family.push_back(choose_rep(F, cls));
  }
  std::sort(family.begin() + 1, family.end());
  return family;
}

std::vector<ClassInfo> fusion_classes(const FusionSystem& F) {
  std::vector<ClassInfo> out;
  std::set<int> seen;
  for (int P : F.subgroups()) {
    if (seen.count(P)) continue;
    ClassInfo c;
    c.members = f_conjugates(F, P);
    for (int m : c.members) seen.insert(m);
    c.rep = choose_rep(F, c.members);
    c.fully_normalized = is_fully_normalized(F, c.rep);
    c.fully_centralized = is_fully_centralized(F, c.rep);
    c.centric = is_f_centric(F, c.rep);
    c.radical = is_f_radical(F, c.rep);
    c.normal = c.fully_normalized && is_normal_in_F(F, c.rep);
    c.aut_order = static_cast<int>(F.aut(c.rep).size());
    c.out_order = out_f_order(F, c.rep);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace flab
