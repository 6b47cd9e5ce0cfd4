#include <algorithm>
#include <functional>

#include "flab/groups.hpp"

namespace flab {

namespace {

struct PartialHom {
  std::vector<int> map;                     // -1 where undefined
  std::vector<std::pair<int, int>> gens;    // generator pairs of the defined part
  std::vector<int> domain;                  // defined elements
};

// Extend `h` by the pair (x -> y) and close under multiplication.
bool extend(const Group& a, const Group& b, PartialHom& h, int x, int y) {
  if (h.map[x] >= 0) return h.map[x] == y;
  h.gens.emplace_back(x, y);
  if (h.domain.empty()) {
    h.map[a.identity()] = b.identity();
    h.domain.push_back(a.identity());
  }
  for (std::size_t i = 0; i < h.domain.size(); ++i) {
    const int u = h.domain[i];
    for (auto [s, t] : h.gens) {
      const int v = a.mul(u, s);
      const int w = b.mul(h.map[u], t);
      if (h.map[v] < 0) {
        h.map[v] = w;
        h.domain.push_back(v);
      } else if (h.map[v] != w) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> extend_homs(const Group& a, const Group& b,
                                          const std::vector<std::pair<int, int>>& fixed,
                                          bool bijective, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (bijective && a.order() != b.order()) return out;
  PartialHom start;
  start.map.assign(a.order(), -1);
  start.map[a.identity()] = b.identity();
  start.domain.push_back(a.identity());
  for (auto [x, y] : fixed)
    if (!extend(a, b, start, x, y)) return out;

  // Remaining generators of a, chosen greedily outside the fixed part.
  std::vector<int> order_by;
  for (int x = 0; x < a.order(); ++x) order_by.push_back(x);
  std::stable_sort(order_by.begin(), order_by.end(),
                   [&](int u, int v) { return a.elem_order(u) > a.elem_order(v); });
  std::vector<int> extra;
  {
    std::vector<int> span_gens;
    for (auto [x, y] : start.gens) span_gens.push_back(x);
    Subgroup cur = generate(a, span_gens);
    for (int x : order_by) {
      if (cur.order() == a.order()) break;
      if (cur.contains(x)) continue;
      extra.push_back(x);
      span_gens.push_back(x);
      cur = generate(a, span_gens);
    }
  }

  std::function<void(const PartialHom&, std::size_t)> rec = [&](const PartialHom& h, std::size_t idx) {
    if (limit && out.size() >= limit) return;
    if (idx == extra.size()) {
      if (bijective) {
        std::vector<char> hit(b.order(), 0);
        for (int v : h.map) {
          if (hit[v]) return;
          hit[v] = 1;
        }
      }
      out.push_back(h.map);
      return;
    }
    const int x = extra[idx];
    for (int y = 0; y < b.order(); ++y) {
      if (bijective ? b.elem_order(y) != a.elem_order(x) : a.elem_order(x) % b.elem_order(y) != 0) continue;
      PartialHom next = h;
      if (extend(a, b, next, x, y)) rec(next, idx + 1);
    }
  };
  rec(start, 0);
  return out;
}

std::vector<GroupHom> automorphisms(const Group& g) {
  const std::size_t bound = order_bound(512);
  if (static_cast<std::size_t>(g.order()) > bound)
    throw ResourceError("automorphisms: group order exceeds bound");
  std::vector<GroupHom> out;
  for (auto& m : extend_homs(g, g, {}, true)) out.push_back(GroupHom{&g, &g, std::move(m)});
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b) {
  auto r = extend_homs(a, b, {}, true, 1);
  if (r.empty()) return std::nullopt;
  return r.front();
}

}  // namespace flab
