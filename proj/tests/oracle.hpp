// Brute-force reference computations on raw permutations. Nothing here calls
// into flab; tests compare library output against these.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Pm = std::vector<int>;
using Set = std::set<Pm>;

inline Pm ident(int n) {
  Pm r(n);
  for (int i = 0; i < n; ++i) r[i] = i;
  return r;
}
// (a*b)(x) = a(b(x))
inline Pm mul(const Pm& a, const Pm& b) {
  Pm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}
inline Pm inv(const Pm& a) {
  Pm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<int>(x);
  return r;
}
inline Pm conj(const Pm& g, const Pm& x) { return mul(mul(g, x), inv(g)); }

// 1-based, commas, cycles ordered by least point: "(1,2)(3,4)"; identity "()".
inline std::string cycles(const Pm& a) {
  std::string s;
  std::vector<bool> seen(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

inline Pm from_cycles(int n, const std::vector<std::vector<int>>& cs) {
  Pm r = ident(n);
  for (const auto& c : cs)
    for (std::size_t i = 0; i < c.size(); ++i) r[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return r;
}

inline Set closure(int n, const std::vector<Pm>& gens) {
  Set out{ident(n)};
  std::vector<Pm> todo{ident(n)};
  while (!todo.empty()) {
    Pm x = todo.back();
    todo.pop_back();
    for (const Pm& g : gens) {
      Pm y = mul(x, g);
      if (out.insert(y).second) todo.push_back(y);
    }
  }
  return out;
}

inline int degree(const Set& s) { return static_cast<int>(s.begin()->size()); }

inline Set conj_set(const Pm& g, const Set& h) {
  Set r;
  for (const Pm& x : h) r.insert(conj(g, x));
  return r;
}
inline bool subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline Set centralizer(const Set& g, const Set& h) {
  Set r;
  for (const Pm& x : g)
    if (std::all_of(h.begin(), h.end(), [&](const Pm& y) { return mul(x, y) == mul(y, x); })) r.insert(x);
  return r;
}
inline Set normalizer(const Set& g, const Set& h) {
  Set r;
  for (const Pm& x : g)
    if (conj_set(x, h) == h) r.insert(x);
  return r;
}
inline Set center(const Set& g) { return centralizer(g, g); }

// Every subgroup, found as closures of all subsets of size <= 3; enough for
// the groups of order <= 24 used in the tests.
inline std::vector<Set> subgroups(const Set& g) {
  const int n = degree(g);
  std::set<Set> found;
  std::vector<Pm> el(g.begin(), g.end());
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a; b < el.size(); ++b)
      for (std::size_t c = b; c < el.size(); ++c) found.insert(closure(n, {el[a], el[b], el[c]}));
  return {found.begin(), found.end()};
}

inline std::set<std::string> labels(const Set& s) {
  std::set<std::string> r;
  for (const Pm& x : s) r.insert(cycles(x));
  return r;
}

inline bool is_p_power(long n, int p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

// Largest normal p-subgroup order: generated by the elements whose normal
// closure is a p-group.
inline long op_order(const Set& x, int p) {
  const int n = degree(x);
  std::vector<Pm> good;
  for (const Pm& a : x) {
    std::vector<Pm> cl;
    for (const Pm& y : x) cl.push_back(conj(y, a));
    if (is_p_power(static_cast<long>(closure(n, cl).size()), p)) good.push_back(a);
  }
  return static_cast<long>(closure(n, good).size());
}

// Aut_G(P) as permutations of the sorted elements of P.
inline Set induced_autos(const Set& g, const Set& p) {
  std::vector<Pm> el(p.begin(), p.end());
  std::map<Pm, int> pos;
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<int>(i);
  Set r;
  for (const Pm& x : normalizer(g, p)) {
    Pm a(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) a[i] = pos[conj(x, el[i])];
    r.insert(a);
  }
  return r;
}

// Fusion data of G at a p-subgroup S, by direct scans over G.
struct FusionOracle {
  Set G, S;
  int p;
  std::vector<Set> subs;  // subgroups of S

  FusionOracle(Set g, Set s, int prime) : G(std::move(g)), S(std::move(s)), p(prime), subs(subgroups(S)) {}

  std::vector<Set> g_conjugates_in_S(const Set& P) const {
    std::set<Set> r;
    for (const Pm& x : G) {
      Set Q = conj_set(x, P);
      if (subset(Q, S)) r.insert(Q);
    }
    return {r.begin(), r.end()};
  }
  bool centric(const Set& P) const {
    for (const Set& Q : g_conjugates_in_S(P))
      if (!subset(centralizer(S, Q), Q)) return false;
    return true;
  }
  bool radical(const Set& P) const {
    const Set inn = induced_autos(P, P);
    return op_order(induced_autos(G, P), p) == static_cast<long>(inn.size());
  }
  // Classes of subgroups of S under G-conjugation, each as a sorted list.
  std::vector<std::vector<Set>> classes() const {
    std::set<std::vector<Set>> r;
    for (const Set& P : subs) r.insert(g_conjugates_in_S(P));
    return {r.begin(), r.end()};
  }
  // |Hom_F(P, Q)|: distinct maps P -> Q induced by g with gPg^-1 <= Q.
  long hom_count(const Set& P, const Set& Q) const {
    std::set<std::vector<Pm>> maps;
    for (const Pm& x : G) {
      std::vector<Pm> img;
      bool in = true;
      for (const Pm& y : P) {
        img.push_back(conj(x, y));
        in = in && Q.count(img.back());
      }
      if (in) maps.insert(img);
    }
    return static_cast<long>(maps.size());
  }
  // |N_G(P, Q)|
  long transporter_count(const Set& P, const Set& Q) const {
    long c = 0;
    for (const Pm& x : G) c += subset(conj_set(x, P), Q);
    return c;
  }
  // Centric linking system morphism count: N_G(P,Q) / O^p(C_G(P)), and
  // C_G(P) = Z(P) x O^p(C_G(P)) for centric P.
  long linking_morphisms(const Set& P, const Set& Q) const {
    return transporter_count(P, Q) * static_cast<long>(center(P).size()) /
           static_cast<long>(centralizer(G, P).size());
  }
  // Z(F): elements of Z(S) fixed by every F-map from a centric subgroup.
  Set fusion_center() const {
    Set r;
    for (const Pm& z : center(S)) {
      bool fixed = true;
      for (const Set& P : subs) {
        if (!fixed || !centric(P)) continue;
        for (const Pm& x : G)
          if (subset(conj_set(x, P), S) && conj(x, z) != z) {
            fixed = false;
            break;
          }
      }
      if (fixed) r.insert(z);
    }
    return r;
  }
};

// Abstract finite group given by a multiplication table on 0..n-1.
struct Table {
  int n = 0;
  std::function<int(int, int)> mul;
  int id = 0;
};

inline Table table_of(const Set& g) {
  auto el = std::make_shared<std::vector<Pm>>(g.begin(), g.end());
  auto pos = std::make_shared<std::map<Pm, int>>();
  for (std::size_t i = 0; i < el->size(); ++i) (*pos)[(*el)[i]] = static_cast<int>(i);
  Table t;
  t.n = static_cast<int>(el->size());
  t.mul = [el, pos](int a, int b) { return pos->at(mul((*el)[a], (*el)[b])); };
  t.id = pos->at(ident(degree(g)));
  return t;
}

inline int elem_order(const Table& t, int a) {
  int k = 1;
  for (int x = a; x != t.id; x = t.mul(x, a)) ++k;
  return k;
}

// A generating sequence of t, greedily.
inline std::vector<int> generators(const Table& t) {
  std::vector<int> gens;
  std::set<int> span{t.id};
  auto grow = [&] {
    std::vector<int> todo(span.begin(), span.end());
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (int g : gens) {
        int y = t.mul(x, g);
        if (span.insert(y).second) todo.push_back(y);
      }
    }
  };
  for (int a = 0; a < t.n && static_cast<int>(span.size()) < t.n; ++a) {
    if (span.count(a)) continue;
    gens.push_back(a);
    grow();
  }
  return gens;
}

// Every isomorphism a -> b, by extending generator images along words.
inline std::vector<std::vector<int>> isomorphisms(const Table& a, const Table& b, bool first_only = false) {
  std::vector<std::vector<int>> out;
  if (a.n != b.n) return out;
  const std::vector<int> gens = generators(a);
  std::vector<int> img(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (first_only && !out.empty()) return;
    if (i == gens.size()) {
      std::vector<int> f(a.n, -1);
      f[a.id] = b.id;
      std::vector<int> todo{a.id};
      while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          int y = a.mul(x, gens[k]);
          int fy = b.mul(f[x], img[k]);
          if (f[y] == -1) {
            f[y] = fy;
            todo.push_back(y);
          } else if (f[y] != fy) {
            return;
          }
        }
      }
      std::vector<bool> hit(b.n);
      for (int x : f) {
        if (hit[x]) return;
        hit[x] = true;
      }
      for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < a.n; ++y)
          if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return;
      out.push_back(f);
      return;
    }
    for (int c = 0; c < b.n; ++c) {
      if (elem_order(b, c) != elem_order(a, gens[i])) continue;
      img[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline long automorphism_count(const Set& g) {
  Table t = table_of(g);
  return static_cast<long>(isomorphisms(t, t).size());
}
inline long outer_count(const Set& g) {
  return automorphism_count(g) * static_cast<long>(center(g).size()) / static_cast<long>(g.size());
}

}  // namespace oracle

namespace oracle {

// Parses "(1,2)(3,4)" (commas or spaces); "()" is the identity.
inline Pm parse(int n, const std::string& text) {
  std::vector<std::vector<int>> cs;
  std::vector<int> cur;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) cur.push_back(std::stoi(num));
    num.clear();
  };
  for (char ch : text) {
    if (ch == '(') {
      cur.clear();
    } else if (ch == ')') {
      flush();
      if (!cur.empty()) cs.push_back(cur);
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else {
      num += ch;
    }
  }
  return from_cycles(n, cs);
}

// Named groups, written down independently of the catalog.
inline Set s4() { return closure(4, {from_cycles(4, {{1, 2}}), from_cycles(4, {{1, 2, 3, 4}})}); }
inline Set a6() { return closure(6, {from_cycles(6, {{1, 2, 3}}), from_cycles(6, {{2, 3, 4, 5, 6}})}); }
inline Set d8() { return closure(4, {from_cycles(4, {{1, 2, 3, 4}}), from_cycles(4, {{1, 3}})}); }

// PGL2(9) acting on the projective line over F9 = F3[i], i^2 = -1. Points
// a + b i are numbered 3a + b, infinity is 9.
inline Set pgl2_9() {
  struct F9 {
    int a, b;
  };
  auto num = [](F9 x) { return 3 * x.a + x.b; };
  auto add = [](F9 x, F9 y) { return F9{(x.a + y.a) % 3, (x.b + y.b) % 3}; };
  auto mulf = [](F9 x, F9 y) { return F9{((x.a * y.a - x.b * y.b) % 3 + 3) % 3, (x.a * y.b + x.b * y.a) % 3}; };
  std::vector<F9> el;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) el.push_back({a, b});
  auto inverse = [&](F9 x) {
    for (F9 y : el)
      if (num(mulf(x, y)) == 3) return y;
    return F9{0, 0};
  };
  // z -> z + 1, z -> w z with w = 1 + i a generator of F9^*, z -> 1/z
  Pm t(10), m(10), s(10);
  const F9 w{1, 1};
  for (F9 z : el) {
    t[num(z)] = num(add(z, {1, 0}));
    m[num(z)] = num(mulf(w, z));
    s[num(z)] = num(z) == 0 ? 9 : num(inverse(z));
  }
  t[9] = 9;
  m[9] = 9;
  s[9] = 0;
  return closure(10, {t, m, s});
}

// The Sylow p-subgroup order of a group of order n.
inline long sylow_order(long n, int p) {
  long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace oracle
