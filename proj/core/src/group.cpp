#include <algorithm>
#include <numeric>

#include "flab/groups.hpp"

namespace flab {

FiniteGroupTable::FiniteGroupTable() : n_(1), id_(0), table_{0}, labels_{"1"} { finish(); }

FiniteGroupTable FiniteGroupTable::trusted(std::vector<std::string> labels, std::vector<int> table) {
  FiniteGroupTable g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.id_ = -1;
  for (int e = 0; e < g.n_ && g.id_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < g.n_ && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.id_ = e;
  }
  if (g.id_ < 0) throw InputError("group table has no identity");
  g.finish();
  return g;
}

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::string> labels, std::vector<int> table) {
  const std::size_t n = labels.size();
  if (n == 0 || table.size() != n * n) throw InputError("group table has wrong size");
  for (int v : table)
    if (v < 0 || v >= static_cast<int>(n)) throw InputError("group table entry out of range");
  FiniteGroupTable g = trusted(std::move(labels), std::move(table));
  for (int a = 0; a < g.n_; ++a)
    for (int b = 0; b < g.n_; ++b)
      for (int c = 0; c < g.n_; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw InputError("group table is not associative at (" + g.labels_[a] + ", " +
                           g.labels_[b] + ", " + g.labels_[c] + ")");
  for (int a = 0; a < g.n_; ++a)
    if (g.inv_[a] < 0) throw InputError("element without inverse: " + g.labels_[a]);
  return g;
}

void FiniteGroupTable::finish() {
  inv_.assign(n_, -1);
  ord_.assign(n_, 0);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == id_) { inv_[a] = b; break; }
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != id_ && k <= n_) { x = mul(x, a); ++k; }
    ord_[a] = k;
  }
  by_label_.clear();
  for (int a = 0; a < n_; ++a) by_label_.emplace(labels_[a], a);
}

int FiniteGroupTable::power(int a, long k) const {
  long m = ord_[a];
  k %= m;
  if (k < 0) k += m;
  int r = id_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroupTable::find_label(const std::string& s) const {
  auto it = by_label_.find(s);
  return it == by_label_.end() ? -1 : it->second;
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }

bool Subgroup::subset_of(const Subgroup& o) const {
  return std::includes(o.elems.begin(), o.elems.end(), elems.begin(), elems.end());
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elems < b.elems;
}

bool GroupHom::is_homomorphism() const {
  const int n = source->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool GroupHom::is_injective() const { return kernel().order() == 1; }

Subgroup GroupHom::kernel() const {
  Subgroup k;
  for (int a = 0; a < source->order(); ++a)
    if (images[a] == target->identity()) k.elems.push_back(a);
  return k;
}

}  // namespace flab
