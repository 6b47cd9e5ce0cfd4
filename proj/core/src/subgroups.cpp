#include <algorithm>
#include <map>
#include <set>

#include "flab/groups.hpp"

namespace flab {

Subgroup trivial_subgroup(const Group& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const Group& g) {
  Subgroup s;
  s.elems.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.elems[i] = i;
  return s;
}

Subgroup generate(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> list{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int y = g.mul(list[i], s);
      if (!in[y]) { in[y] = 1; list.push_back(y); }
    }
  std::sort(list.begin(), list.end());
  return Subgroup{std::move(list)};
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> gens = small_generating_set(g, a);
  for (int x : small_generating_set(g, b)) gens.push_back(x);
  return generate(g, gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(r.elems));
  return r;
}

bool is_subgroup(const Group& g, const std::vector<int>& sorted) {
  if (sorted.empty() || !std::binary_search(sorted.begin(), sorted.end(), g.identity())) return false;
  for (int a : sorted)
    for (int b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.mul(a, b))) return false;
  return true;
}

std::vector<int> small_generating_set(const Group& g, const Subgroup& h) {
  // Greedy: elements of largest order first, keep those that enlarge the span.
  std::vector<int> cand = h.elems;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup(g);
  for (int x : cand) {
    if (cur.order() == h.order()) break;
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = generate(g, gens);
  }
  return gens;
}

Subgroup conjugate(const Group& g, const Subgroup& h, int x) {
  Subgroup r;
  r.elems.reserve(h.elems.size());
  for (int y : h.elems) r.elems.push_back(g.conj(x, y));
  std::sort(r.elems.begin(), r.elems.end());
  return r;
}

Subgroup normalizer_in(const Group& g, const Subgroup& within, const Subgroup& h) {
  Subgroup r;
  std::vector<int> gens = small_generating_set(g, h);
  for (int x : within.elems) {
    bool ok = true;
    for (int s : gens)
      if (!h.contains(g.conj(x, s))) { ok = false; break; }
    if (ok) r.elems.push_back(x);
  }
  return r;
}

Subgroup normalizer(const Group& g, const Subgroup& h) { return normalizer_in(g, whole_group(g), h); }

Subgroup centralizer_in(const Group& g, const Subgroup& within, const Subgroup& h) {
  Subgroup r;
  std::vector<int> gens = small_generating_set(g, h);
  for (int x : within.elems) {
    bool ok = true;
    for (int s : gens)
      if (g.mul(x, s) != g.mul(s, x)) { ok = false; break; }
    if (ok) r.elems.push_back(x);
  }
  return r;
}

Subgroup centralizer(const Group& g, const Subgroup& h) { return centralizer_in(g, whole_group(g), h); }

Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

Subgroup center_of(const Group& g, const Subgroup& h) { return centralizer_in(g, h, h); }

bool is_normal(const Group& g, const Subgroup& k, const Subgroup& h) {
  if (!k.subset_of(h)) return false;
  for (int x : small_generating_set(g, h))
    for (int y : k.elems)
      if (!k.contains(g.conj(x, y))) return false;
  return true;
}

std::vector<int> transporter(const Group& g, const Subgroup& p, const Subgroup& q) {
  std::vector<int> gens = small_generating_set(g, p);
  std::vector<int> r;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int s : gens)
      if (!q.contains(g.conj(x, s))) { ok = false; break; }
    if (ok) r.push_back(x);
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int p_part(long n, int p) {
  int r = 1;
  while (n % p == 0) { n /= p; r *= p; }
  return r;
}

bool is_p_group(const Subgroup& h, int p) { return p_part(h.order(), p) == h.order(); }

Subgroup sylow_in(const Group& g, const Subgroup& h, int p) {
  if (!is_prime(p)) throw InputError("sylow: p must be prime");
  const int target = p_part(h.order(), p);
  Subgroup cur = trivial_subgroup(g);
  while (cur.order() < target) {
    // Cauchy in N_h(cur)/cur supplies an element of order p modulo cur.
    Subgroup n = normalizer_in(g, h, cur);
    bool grown = false;
    for (int x : n.elems) {
      if (cur.contains(x)) continue;
      if (!cur.contains(g.power(x, p))) continue;
      std::vector<int> gens = small_generating_set(g, cur);
      gens.push_back(x);
      cur = generate(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow: no element of order p in N(P)/P");
  }
  return cur;
}

Subgroup sylow(const Group& g, int p) { return sylow_in(g, whole_group(g), p); }

Subgroup op_subgroup(const Group& g, const Subgroup& h, int p) {
  Subgroup s = sylow_in(g, h, p);
  Subgroup r = s;
  std::set<std::vector<int>> seen;
  for (int x : h.elems) {
    Subgroup c = conjugate(g, s, x);
    if (!seen.insert(c.elems).second) continue;
    r = intersect(r, c);
  }
  return r;
}

std::optional<Subgroup> normal_p_complement(const Group& g, const Subgroup& h, int p) {
  Subgroup k;
  for (int x : h.elems)
    if (g.elem_order(x) % p != 0) k.elems.push_back(x);
  if (!is_subgroup(g, k.elems)) return std::nullopt;
  if (static_cast<long>(k.order()) * p_part(h.order(), p) != h.order()) return std::nullopt;
  return k;
}

std::vector<Subgroup> all_subgroups(const Group& g) {
  const std::size_t bound = order_bound(10000);
  if (static_cast<std::size_t>(g.order()) > bound)
    throw ResourceError("all_subgroups: group order exceeds bound");
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out{trivial_subgroup(g)};
  seen.insert(out[0].elems);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<int> base = small_generating_set(g, out[i]);
    for (int x = 0; x < g.order(); ++x) {
      if (out[i].contains(x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup k = generate(g, gens);
      if (seen.insert(k.elems).second) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {
std::vector<int> min_conjugate_key(const Group& g, const Subgroup& h) {
  std::vector<int> best = h.elems;
  for (int x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate(g, h, x);
    if (c.elems < best) best = c.elems;
  }
  return best;
}
}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& g) {
  const std::size_t bound = order_bound(10000);
  if (static_cast<std::size_t>(g.order()) > bound)
    throw ResourceError("subgroups_up_to_conjugacy: group order exceeds bound");
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> reps{trivial_subgroup(g)};
  seen.insert(reps[0].elems);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::vector<int> base = small_generating_set(g, reps[i]);
    std::set<std::vector<int>> local;
    for (int x = 0; x < g.order(); ++x) {
      if (reps[i].contains(x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      Subgroup k = generate(g, gens);
      if (!local.insert(k.elems).second) continue;
      std::vector<int> key = min_conjugate_key(g, k);
      if (seen.insert(key).second) reps.push_back(Subgroup{key});
    }
  }
  std::sort(reps.begin(), reps.end(), canonical_less);
  return reps;
}

Quotient quotient(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (!is_normal(g, k, h)) throw InputError("quotient: subgroup is not normal");
  Quotient q;
  q.proj.assign(g.order(), -1);
  for (int x : h.elems) {
    if (q.proj[x] >= 0) continue;
    int idx = static_cast<int>(q.rep.size());
    q.rep.push_back(x);  // h.elems is sorted, so x is the minimal member of its coset
    for (int y : k.elems) q.proj[g.mul(x, y)] = idx;
  }
  const int m = static_cast<int>(q.rep.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(q.rep[a]);
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = q.proj[g.mul(q.rep[a], q.rep[b])];
  }
  q.group = Group::trusted(std::move(labels), std::move(table));
  return q;
}

Group subgroup_table(const Group& g, const Subgroup& h, std::vector<int>* embedding) {
  const int m = h.order();
  std::map<int, int> pos;
  for (int i = 0; i < m; ++i) pos[h.elems[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = g.label(h.elems[a]);
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = pos.at(g.mul(h.elems[a], h.elems[b]));
  }
  if (embedding) *embedding = h.elems;
  return Group::trusted(std::move(labels), std::move(table));
}

}  // namespace flab
