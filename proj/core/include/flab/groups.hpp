// Finite group kernel: permutations, multiplication tables, subgroups,
// homomorphisms. Every group is materialized as an element set.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flab {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration bound; FLAB_MAX_ORDER overrides the fallback when set.
std::size_t order_bound(std::size_t fallback);

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree);
  // 1-based cycle notation, e.g. "(1 2 3)(4 5)" or "(1,2,3)".
  static Perm parse_cycles(int degree, const std::string& text);

  int degree() const { return static_cast<int>(im_.size()); }
  int operator[](int i) const { return im_[i]; }
  const std::vector<int>& images() const { return im_; }

  // (a * b)(x) = a(b(x))
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::string cycles() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> im_;
};

// A finite group given by its multiplication table over 0..n-1.
class FiniteGroupTable {
 public:
  FiniteGroupTable();  // trivial group

  // Validates closure, associativity, identity and inverses.
  static FiniteGroupTable from_table(std::vector<std::string> labels, std::vector<int> table);
  // Trusted constructor for tables produced by this library.
  static FiniteGroupTable trusted(std::vector<std::string> labels, std::vector<int> table);

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int elem_order(int a) const { return ord_[a]; }
  int power(int a, long k) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int find_label(const std::string& s) const;
  bool is_abelian() const;

 private:
  void finish();
  int n_ = 1;
  int id_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<std::string> labels_;
  std::map<std::string, int> by_label_;
};

using Group = FiniteGroupTable;

struct Subgroup {
  std::vector<int> elems;  // sorted element indices of the parent group

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int x) const;
  bool subset_of(const Subgroup& o) const;
  auto operator<=>(const Subgroup&) const = default;
};

// Canonical order: by order, then lexicographic element list.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);
Subgroup generate(const Group& g, const std::vector<int>& gens);
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const Group& g, const std::vector<int>& sorted);
std::vector<int> small_generating_set(const Group& g, const Subgroup& h);

Subgroup conjugate(const Group& g, const Subgroup& h, int x);  // x h x^-1
Subgroup normalizer(const Group& g, const Subgroup& h);
Subgroup normalizer_in(const Group& g, const Subgroup& within, const Subgroup& h);
Subgroup centralizer(const Group& g, const Subgroup& h);
Subgroup centralizer_in(const Group& g, const Subgroup& within, const Subgroup& h);
Subgroup center(const Group& g);
Subgroup center_of(const Group& g, const Subgroup& h);
bool is_normal(const Group& g, const Subgroup& k, const Subgroup& h);  // k normal in h
// {x in g : x p x^-1 <= q}
std::vector<int> transporter(const Group& g, const Subgroup& p, const Subgroup& q);

bool is_prime(int p);
int p_part(long n, int p);
bool is_p_group(const Subgroup& h, int p);

Subgroup sylow(const Group& g, int p);
Subgroup sylow_in(const Group& g, const Subgroup& h, int p);
Subgroup op_subgroup(const Group& g, const Subgroup& h, int p);  // O_p(h)
// Normal p-complement of h; nullopt when none exists.
std::optional<Subgroup> normal_p_complement(const Group& g, const Subgroup& h, int p);

// Every subgroup (for small groups, e.g. p-groups), canonical order.
std::vector<Subgroup> all_subgroups(const Group& g);
// One representative per conjugacy class, canonical order of the minimal
// member of each class.
std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& g);

struct Quotient {
  Group group;
  std::vector<int> proj;  // parent element -> coset index (-1 outside h)
  std::vector<int> rep;   // coset index -> minimal representative
};
// h / k for k normal in h.
Quotient quotient(const Group& g, const Subgroup& h, const Subgroup& k);
Group subgroup_table(const Group& g, const Subgroup& h, std::vector<int>* embedding = nullptr);

// A homomorphism stored as the image of every source element.
struct GroupHom {
  const Group* source = nullptr;
  const Group* target = nullptr;
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_injective() const;
  Subgroup kernel() const;
};

// All homomorphisms a -> b agreeing with `fixed` (pairs source -> image).
// With bijective=true only isomorphisms are returned. Order is deterministic.
std::vector<std::vector<int>> extend_homs(const Group& a, const Group& b,
                                          const std::vector<std::pair<int, int>>& fixed,
                                          bool bijective, std::size_t limit = 0);
std::vector<GroupHom> automorphisms(const Group& g);
std::optional<std::vector<int>> find_isomorphism(const Group& a, const Group& b);

}  // namespace flab
