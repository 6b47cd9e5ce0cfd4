#include "flab/amalgam.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flab {

std::string variant_name(Variant v) { return v == Variant::Robinson ? "robinson" : "ls"; }

Variant parse_variant(const std::string& s) {
  if (s == "robinson") return Variant::Robinson;
  if (s == "ls" || s == "libman-seeliger") return Variant::LibmanSeeliger;
  throw InputError("unknown variant '" + s + "' (expected robinson or ls)");
}

VertexGroup vertex_group(const LinkingSystem& L, int obj) {
  VertexGroup v;
  v.obj = obj;
  v.sub = L.subgroup_of(obj);
  v.group = L.aut_table(obj, &v.morphs);
  v.index.assign(L.cat().morphism_count(), -1);
  for (std::size_t i = 0; i < v.morphs.size(); ++i) v.index[v.morphs[i]] = static_cast<int>(i);
  const Group& S = L.lat().S();
  v.delta.assign(S.order(), -1);
  v.delta_inv.assign(v.group.order(), -1);
  for (int s = 0; s < S.order(); ++s) {
    const int m = L.delta(obj, obj, s);
    if (m < 0) continue;
    v.delta[s] = v.index[m];
    v.delta_inv[v.delta[s]] = s;
  }
  return v;
}

RobinsonSetup build_setup(std::shared_ptr<const LinkingSystem> Lp, const std::vector<int>& family, Variant variant,
                          bool require_controlling) {
  const LinkingSystem& L = *Lp;
  const SubgroupLattice& lat = L.lat();
  const FusionSystem& F = L.fusion();
  RobinsonSetup st;
  st.L = Lp;
  st.family = family;
  st.variant = variant;
  if (family.empty() || family[0] != lat.whole()) throw InputError("setup: the family must start with S");
  std::set<int> seen;
  for (int P : family) {
    if (!seen.insert(P).second) throw InputError("setup: " + lat.name(P) + " listed twice");
    if (L.object_of(P) < 0) throw InputError("setup: " + lat.name(P) + " is not F-centric");
  }

  // fusion control: fully normalized members meeting every centric radical class
  std::string detail;
  for (int P : family)
    if (!is_fully_normalized(F, P) && detail.empty()) detail = lat.name(P) + " is not fully normalized";
  for (int R : centric_radical(F)) {
    int hits = 0, nfs_hits = 0;
    std::vector<int> cls = f_conjugates(F, R), ncls = nfs_class(F, R);
    for (int P : family) {
      if (std::find(cls.begin(), cls.end(), P) != cls.end()) ++hits;
      if (std::find(ncls.begin(), ncls.end(), P) != ncls.end()) ++nfs_hits;
    }
    if (hits == 0 && detail.empty()) detail = "no member is F-conjugate to the centric radical " + lat.name(R);
    if (nfs_hits != 1) st.complete = false;
  }
  st.controlling = detail.empty();
  if (!st.controlling) st.complete = false;
  st.controlling_detail = st.controlling ? "fusion controlling" : detail;
  if (require_controlling && !st.controlling) throw InputError("setup: family is not fusion controlling: " + detail);

  st.hub = vertex_group(L, L.s_object());
  const Group& H = st.hub.group;
  for (std::size_t i = 1; i < family.size(); ++i) {
    const int P = family[i];
    Leaf leaf;
    leaf.v = vertex_group(L, L.object_of(P));
    std::vector<int> N;
    if (variant == Variant::Robinson) {
      for (int s : lat[lat.normalizer(P)].elems) N.push_back(st.hub.delta[s]);
    } else {
      for (int h = 0; h < H.order(); ++h)
        if (fmap_restrict(lat, L.rho(st.hub.morphs[h]), P).dst == P) N.push_back(h);
    }
    std::sort(N.begin(), N.end());
    N.erase(std::unique(N.begin(), N.end()), N.end());
    leaf.N = Subgroup{N};
    if (!is_subgroup(H, N)) throw std::logic_error("setup: N_P is not a subgroup");
    leaf.j.assign(H.order(), -1);
    leaf.j_inv.assign(leaf.v.group.order(), -1);
    for (int n : N) {
      const int r = L.restrict_to(st.hub.morphs[n], leaf.v.obj);
      if (r < 0) throw std::logic_error("setup: restriction to " + lat.name(P) + " is missing");
      const int e = leaf.v.index[r];
      if (leaf.j_inv[e] >= 0)
        throw InputError("setup: restriction N_P -> Aut_L(" + lat.name(P) + ") is not injective; " +
                         H.label(n) + " and " + H.label(leaf.j_inv[e]) + " agree");
      leaf.j[n] = e;
      leaf.j_inv[e] = n;
    }
    for (int a : N)
      for (int b : N)
        if (leaf.j[H.mul(a, b)] != leaf.v.group.mul(leaf.j[a], leaf.j[b]))
          throw std::logic_error("setup: restriction is not a homomorphism");
    for (int s : lat[lat.normalizer(P)].elems)
      if (!leaf.N.contains(st.hub.delta[s]))
        throw InputError("setup: delta(N_S(P)) is not contained in N_P for " + lat.name(P));
    st.leaves.push_back(std::move(leaf));
  }
  return st;
}

// ---- normal forms ----

AmalgamGroup::AmalgamGroup(std::shared_ptr<const RobinsonSetup> setup) : setup_(std::move(setup)) {
  const Group& H = hub();
  for (const Leaf& leaf : setup_->leaves) {
    std::vector<int> hn(H.order()), hx(H.order());
    for (int h = 0; h < H.order(); ++h) {
      int x = h;
      for (int n : leaf.N.elems) x = std::min(x, H.mul(n, h));
      hx[h] = x;
      hn[h] = H.mul(h, H.inv(x));
    }
    hub_n_.push_back(std::move(hn));
    hub_x_.push_back(std::move(hx));
    const Group& Lg = leaf.v.group;
    std::vector<int> ln(Lg.order()), ly(Lg.order());
    for (int l = 0; l < Lg.order(); ++l) {
      int y = l;
      for (int n : leaf.N.elems) y = std::min(y, Lg.mul(leaf.j[n], l));
      ly[l] = y;
      ln[l] = leaf.j_inv[Lg.mul(l, Lg.inv(y))];
    }
    leaf_n_.push_back(std::move(ln));
    leaf_y_.push_back(std::move(ly));
  }
}

AmalgamWord AmalgamGroup::letter(int vertex, int elem) const { return left_multiply(Letter{vertex, elem}, identity()); }

AmalgamWord AmalgamGroup::left_multiply(const Letter& a, AmalgamWord w) const {
  const Group& H = hub();
  if (a.vertex == 0) {
    w.h = H.mul(a.elem, w.h);
    return w;
  }
  const int i = a.vertex;
  const Leaf& leaf = setup_->leaves[i - 1];
  const Group& Lg = leaf.v.group;
  const int n = hub_n_[i - 1][w.h], x = hub_x_[i - 1][w.h];
  const int b = Lg.mul(a.elem, leaf.j[n]);
  const int n1 = leaf_n_[i - 1][b], y = leaf_y_[i - 1][b];
  if (y == Lg.identity()) {
    w.h = H.mul(n1, x);
    return w;
  }
  if (x != H.identity() || w.pairs.empty() || w.pairs[0].leaf != i) {
    w.pairs.insert(w.pairs.begin(), AmalgamWord::Pair{i, y, x});
    w.h = n1;
    return w;
  }
  const int yy = Lg.mul(y, w.pairs[0].y);
  const int n2 = leaf_n_[i - 1][yy], y2 = leaf_y_[i - 1][yy];
  if (y2 != Lg.identity()) {
    w.pairs[0].y = y2;
    w.h = H.mul(n1, n2);
  } else {
    w.h = H.mul(H.mul(n1, n2), w.pairs[0].x);
    w.pairs.erase(w.pairs.begin());
  }
  return w;
}

AmalgamWord AmalgamGroup::reduce(const std::vector<Letter>& letters) const {
  AmalgamWord w = identity();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = left_multiply(*it, std::move(w));
  return w;
}

std::vector<Letter> AmalgamGroup::letters(const AmalgamWord& w) const {
  std::vector<Letter> out;
  const int e = hub().identity();
  if (w.h != e) out.push_back({0, w.h});
  for (const auto& p : w.pairs) {
    out.push_back({p.leaf, p.y});
    if (p.x != e) out.push_back({0, p.x});
  }
  return out;
}

AmalgamWord AmalgamGroup::multiply(const AmalgamWord& a, const AmalgamWord& b) const {
  AmalgamWord w = b;
  std::vector<Letter> ls = letters(a);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) w = left_multiply(*it, std::move(w));
  return w;
}

AmalgamWord AmalgamGroup::invert(const AmalgamWord& w) const {
  std::vector<Letter> ls = letters(w);
  std::reverse(ls.begin(), ls.end());
  for (Letter& l : ls) l.elem = setup_->vertex(l.vertex).group.inv(l.elem);
  return reduce(ls);
}

AmalgamWord AmalgamGroup::parse(const std::string& text) const {
  std::vector<Letter> ls;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::string tok = text.substr(start, end - start);
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    start = end + 1;
    if (tok.empty() || tok == "1") continue;
    const std::size_t colon = tok.find(':');
    if (colon == std::string::npos) throw InputError("word token '" + tok + "' needs a vertex prefix");
    const std::string vert = tok.substr(0, colon), label = tok.substr(colon + 1);
    int v = -1;
    if (vert == "hub") {
      v = 0;
    } else if (vert.rfind("leaf", 0) == 0) {
      try {
        v = std::stoi(vert.substr(4));
      } catch (const std::exception&) {
        v = -1;
      }
      if (v < 1 || v > k()) throw InputError("no vertex named " + vert);
    } else {
      throw InputError("no vertex named " + vert);
    }
    const int e = setup_->vertex(v).group.find_label(label);
    if (e < 0) throw InputError("letter " + label + " is not in the group of " + vert);
    ls.push_back({v, e});
  }
  return reduce(ls);
}

std::string AmalgamGroup::format(const AmalgamWord& w) const {
  std::vector<Letter> ls = letters(w);
  if (ls.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += "*";
    out += ls[i].vertex == 0 ? "hub:" : "leaf" + std::to_string(ls[i].vertex) + ":";
    out += setup_->vertex(ls[i].vertex).group.label(ls[i].elem);
  }
  return out;
}

bool AmalgamGroup::is_finite() const {
  std::vector<int> proper;
  for (int i = 0; i < k(); ++i)
    if (setup_->leaves[i].N.order() < setup_->leaves[i].v.group.order()) proper.push_back(i);
  if (proper.empty()) return true;
  return proper.size() == 1 && setup_->leaves[proper[0]].N.order() == hub().order();
}

std::vector<AmalgamWord> AmalgamGroup::enumerate(int radius) const {
  const Group& H = hub();
  // transversal elements per leaf
  std::vector<std::vector<int>> ys(k() + 1), xs(k() + 1);
  for (int i = 1; i <= k(); ++i) {
    std::set<int> yset(leaf_y_[i - 1].begin(), leaf_y_[i - 1].end()), xset(hub_x_[i - 1].begin(), hub_x_[i - 1].end());
    yset.erase(setup_->leaves[i - 1].v.group.identity());
    ys[i].assign(yset.begin(), yset.end());
    xs[i].assign(xset.begin(), xset.end());
  }
  const std::size_t bound = order_bound(1000000);
  std::vector<std::vector<AmalgamWord::Pair>> tails{{}};
  std::vector<std::vector<AmalgamWord::Pair>> level{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<AmalgamWord::Pair>> next;
    for (const auto& t : level)
      for (int i = 1; i <= k(); ++i)
        for (int y : ys[i])
          for (int x : xs[i]) {
            if (!t.empty() && x == H.identity() && t.front().leaf == i) continue;
            std::vector<AmalgamWord::Pair> u;
            u.push_back({i, y, x});
            u.insert(u.end(), t.begin(), t.end());
            next.push_back(std::move(u));
            if (next.size() * H.order() > bound) throw ResourceError("enumerate: too many normal forms");
          }
    if (next.empty()) break;
    tails.insert(tails.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<AmalgamWord> out;
  for (const auto& t : tails)
    for (int h = 0; h < H.order(); ++h) out.push_back(AmalgamWord{h, t});
  return out;
}

std::optional<int> AmalgamGroup::element_of_S(const AmalgamWord& w) const {
  if (!w.pairs.empty()) return std::nullopt;
  const int s = setup_->hub.delta_inv[w.h];
  if (s < 0) return std::nullopt;
  return s;
}

std::optional<AmalgamGroup::Conjugate> AmalgamGroup::conjugate_subgroup(const AmalgamWord& w, int P) const {
  const SubgroupLattice& lat = setup_->L->lat();
  std::vector<int> cur = lat[P].elems;
  std::vector<Letter> ls = letters(w);
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const VertexGroup& v = setup_->vertex(it->vertex);
    for (int& s : cur) {
      if (v.delta[s] < 0) return std::nullopt;
      const int t = v.group.conj(it->elem, v.delta[s]);
      if (v.delta_inv[t] < 0) return std::nullopt;
      s = v.delta_inv[t];
    }
  }
  std::vector<int> sorted = cur;
  std::sort(sorted.begin(), sorted.end());
  const int sub = lat.find(sorted);
  if (sub < 0) throw std::logic_error("conjugate_subgroup: image is not a subgroup");
  return Conjugate{sub, FMap{P, sub, cur}};
}

// ---- checks ----

FusionCheck verify_fusion(const AmalgamGroup& G, const FusionSystem& F) {
  const RobinsonSetup& st = G.setup();
  const LinkingSystem& L = *st.L;
  const SubgroupLattice& lat = L.lat();
  std::vector<FMap> gens;
  for (int m : st.hub.morphs) gens.push_back(L.rho(m));
  for (const Leaf& leaf : st.leaves) {
    const int NP = lat.normalizer(leaf.v.sub);
    const Group& Lg = leaf.v.group;
    for (int l = 0; l < Lg.order(); ++l) {
      std::vector<int> dom, img;
      for (int s : lat[NP].elems) {
        const int t = leaf.v.delta_inv[Lg.conj(l, leaf.v.delta[s])];
        if (t >= 0) {
          dom.push_back(s);
          img.push_back(t);
        }
      }
      const int d = lat.find(dom);
      if (d < 0) throw std::logic_error("verify_fusion: maximal domain is not a subgroup");
      gens.push_back(fmap_from_images(lat, d, img));
    }
  }
  FusionSystem gen = generated_fusion(F.lattice_ptr(), lat.whole(), gens);
  FusionWitness w = fusion_compare(F, gen);
  FusionCheck out;
  out.equal = w.equal;
  out.witness = w.detail;
  for (int P = 0; P < lat.count(); ++P)
    out.counts.push_back({lat.name(P), {static_cast<int>(F.isos_from(P).size()), static_cast<int>(gen.isos_from(P).size())}});
  return out;
}

std::vector<int> amalgam_center(const AmalgamGroup& G) {
  const RobinsonSetup& st = G.setup();
  const SubgroupLattice& lat = st.L->lat();
  std::vector<int> out;
  for (int z : lat[lat.center(lat.whole())].elems) {
    bool central = true;
    for (int v = 0; v <= st.k() && central; ++v) {
      const VertexGroup& V = st.vertex(v);
      const int d = V.delta[z];
      if (d < 0) {
        central = false;
        break;
      }
      for (int g = 0; g < V.group.order() && central; ++g) central = V.group.mul(g, d) == V.group.mul(d, g);
    }
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<AmalgamWord> transporter_in_amalgam(const AmalgamGroup& G, int P, int Q, int radius) {
  std::vector<AmalgamWord> out;
  for (const AmalgamWord& w : G.enumerate(radius)) {
    auto c = G.conjugate_subgroup(w, P);
    if (c && c->sub == Q) out.push_back(w);
  }
  return out;
}

Group amalgam_table(const AmalgamGroup& G, std::vector<AmalgamWord>* elements) {
  if (!G.is_finite()) throw InputError("amalgam is infinite; no multiplication table");
  std::vector<AmalgamWord> el = G.enumerate(1);
  std::sort(el.begin(), el.end());
  std::map<AmalgamWord, int> index;
  for (std::size_t i = 0; i < el.size(); ++i) index[el[i]] = static_cast<int>(i);
  const int n = static_cast<int>(el.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = G.format(el[a]);
    for (int b = 0; b < n; ++b) {
      auto it = index.find(G.multiply(el[a], el[b]));
      if (it == index.end()) throw std::logic_error("amalgam_table: product outside the enumerated forms");
      table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  if (elements) *elements = el;
  return Group::from_table(std::move(labels), std::move(table));
}

}  // namespace flab
