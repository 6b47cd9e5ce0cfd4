#include "flab/limits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace flab {

std::string AbFunctor::check(const FiniteCategory& C) const {
  if (static_cast<int>(value.size()) != C.object_count() || static_cast<int>(map.size()) != C.morphism_count())
    return "functor size does not match the category";
  for (int m = 0; m < C.morphism_count(); ++m) {
    const auto& M = C.morphism(m);
    const Group& src = value[M.src];
    const Group& dst = value[M.dst];
    if (static_cast<int>(map[m].size()) != dst.order()) return "map of " + M.label + " has the wrong domain";
    for (int a = 0; a < dst.order(); ++a)
      for (int b = 0; b < dst.order(); ++b)
        if (map[m][dst.mul(a, b)] != src.mul(map[m][a], map[m][b])) return "map of " + M.label + " is not a homomorphism";
    if (C.is_identity(m))
      for (int a = 0; a < dst.order(); ++a)
        if (map[m][a] != a) return "identity " + M.label + " does not act trivially";
  }
  for (int a = 0; a < C.morphism_count(); ++a)
    for (int o = 0; o < C.object_count(); ++o)
      for (int b : C.hom(C.morphism(a).dst, o)) {
        const int ba = C.compose(b, a);
        for (int x = 0; x < value[o].order(); ++x)
          if (map[ba][x] != map[a][map[b][x]]) return "functoriality fails at " + C.morphism(b).label + " o " + C.morphism(a).label;
      }
  return "";
}

AbFunctor center_functor(const FusionSystem& F, const OrbitCategory& O) {
  const SubgroupLattice& L = F.lat();
  AbFunctor Z;
  for (int P : O.objects) Z.value.push_back(subgroup_table(L.S(), L[L.center(P)]));
  for (int m = 0; m < O.cat.morphism_count(); ++m) {
    const FMap& f = O.rep[m];
    const int src = L.center(O.objects[O.cat.morphism(m).src]);
    const int dst = L.center(O.objects[O.cat.morphism(m).dst]);
    std::vector<int> img;
    for (int z : L[dst].elems) {
      const int t = std::find(f.img.begin(), f.img.end(), z) - f.img.begin();
      if (t == static_cast<int>(f.img.size())) throw std::logic_error("center functor: Z(Q) is not inside f(P)");
      const int pre = L[f.src].elems[t];
      const int k = L.pos(src, pre);
      if (k < 0) throw std::logic_error("center functor: preimage is not central");
      img.push_back(k);
    }
    Z.map.push_back(std::move(img));
  }
  return Z;
}

AbFunctor constant_functor(const FiniteCategory& C, const Group& A) {
  AbFunctor Z;
  Z.value.assign(C.object_count(), A);
  std::vector<int> id(A.order());
  for (int i = 0; i < A.order(); ++i) id[i] = i;
  Z.map.assign(C.morphism_count(), id);
  return Z;
}

// ---- abelian groups ----

long AbelianInvariants::order() const {
  long n = 1;
  for (long f : factors) n *= f;
  return n;
}

std::string AbelianInvariants::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x C" : "C") + std::to_string(factors[i]);
  return s;
}

namespace {

std::vector<int> prime_divisors(long n) {
  std::vector<int> out;
  for (int q = 2; static_cast<long>(q) * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

bool is_q_power(long n, int q) {
  while (n % q == 0) n /= q;
  return n == 1;
}

}  // namespace

AbelianInvariants abelian_invariants(const Group& A) {
  if (!A.is_abelian()) throw InputError("abelian_invariants: group is not abelian");
  AbelianInvariants inv;
  for (int q : prime_divisors(A.order())) {
    // r[k] = number of cyclic factors of order >= q^k
    std::vector<int> logs{0};
    long qk = 1;
    for (;;) {
      qk *= q;
      long count = 0;
      for (int x = 0; x < A.order(); ++x)
        if (qk % A.elem_order(x) == 0) ++count;
      int lg = 0;
      for (long c = count; c > 1; c /= q) ++lg;
      if (lg == logs.back()) break;
      logs.push_back(lg);
    }
    const int K = static_cast<int>(logs.size()) - 1;
    for (int k = 1; k <= K; ++k) {
      const int at_least_k = logs[k] - logs[k - 1];
      const int at_least_next = k < K ? logs[k + 1] - logs[k] : 0;
      long order = 1;
      for (int i = 0; i < k; ++i) order *= q;
      for (int i = 0; i < at_least_k - at_least_next; ++i) inv.factors.push_back(order);
    }
  }
  std::sort(inv.factors.begin(), inv.factors.end());
  return inv;
}

// ---- inverse limit ----

InverseLimit inverse_limit(const FiniteCategory& C, const AbFunctor& Z) {
  std::string bad = Z.check(C);
  if (!bad.empty()) throw InputError("inverse_limit: " + bad);
  const int n = C.object_count();
  InverseLimit out;
  auto compatible = [&](const std::vector<int>& x) {
    for (int m = 0; m < C.morphism_count(); ++m) {
      const auto& M = C.morphism(m);
      if (Z.map[m][x[M.dst]] != x[M.src]) return false;
    }
    return true;
  };
  for (int t = n - 1; t >= 0 && out.anchor < 0; --t) {
    bool terminal = true;
    for (int o = 0; o < n && terminal; ++o) terminal = !C.hom(o, t).empty();
    if (terminal) out.anchor = t;
  }
  if (out.anchor >= 0) {
    const int t = out.anchor;
    for (int z = 0; z < Z.value[t].order(); ++z) {
      std::vector<int> x(n);
      for (int o = 0; o < n; ++o) x[o] = Z.map[C.hom(o, t).front()][z];
      if (compatible(x)) {
        out.families.push_back(x);
        out.embedding.push_back(z);
      }
    }
  } else {
    long total = 1;
    for (const Group& g : Z.value) {
      total *= g.order();
      if (total > static_cast<long>(order_bound(1000000))) throw ResourceError("inverse_limit: product too large to enumerate");
    }
    std::vector<int> x(n, 0);
    for (long i = 0; i < total; ++i) {
      long r = i;
      for (int o = n - 1; o >= 0; --o) {
        x[o] = static_cast<int>(r % Z.value[o].order());
        r /= Z.value[o].order();
      }
      if (compatible(x)) out.families.push_back(x);
    }
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.families.size(); ++i) index[out.families[i]] = static_cast<int>(i);
  const int k = static_cast<int>(out.families.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = out.anchor >= 0 ? Z.value[out.anchor].label(out.embedding[a]) : "x" + std::to_string(a);
    for (int b = 0; b < k; ++b) {
      std::vector<int> prod(n);
      for (int o = 0; o < n; ++o) prod[o] = Z.value[o].mul(out.families[a][o], out.families[b][o]);
      table[static_cast<std::size_t>(a) * k + b] = index.at(prod);
    }
  }
  out.group = Group::trusted(std::move(labels), std::move(table));
  out.invariants = abelian_invariants(out.group);
  return out;
}

// ---- higher limits ----

namespace {

// q-primary part of a finite abelian group with a chosen basis.
struct Primary {
  std::vector<int> basis;            // elements
  std::vector<int> exps;             // order of basis[i] is q^exps[i]
  std::map<int, std::vector<int>> coord;  // element -> coordinates
};

Primary primary_part(const Group& A, int q) {
  Primary P;
  std::vector<int> elems;
  for (int x = 0; x < A.order(); ++x)
    if (is_q_power(A.elem_order(x), q)) elems.push_back(x);
  std::set<int> H{A.identity()};
  while (H.size() < elems.size()) {
    int best = -1, best_q = 0;
    bool best_pure = false;
    for (int x : elems) {
      int k = 1, y = x;
      while (!H.count(y)) {
        y = A.mul(y, x);
        ++k;
      }
      const bool pure = A.elem_order(x) == k;
      if (k > best_q || (k == best_q && pure && !best_pure)) {
        best = x;
        best_q = k;
        best_pure = pure;
      }
    }
    P.basis.push_back(best);
    int e = 0;
    for (int o = A.elem_order(best); o > 1; o /= q) ++e;
    P.exps.push_back(e);
    std::vector<int> cur(H.begin(), H.end());
    for (int h : cur)
      for (int y = h, i = 0; i < A.elem_order(best); ++i, y = A.mul(y, best)) H.insert(y);
  }
  // coordinates by enumeration; this also verifies the basis is free
  std::vector<int> c(P.basis.size(), 0);
  long total = 1;
  for (int e : P.exps)
    for (int i = 0; i < e; ++i) total *= q;
  for (long i = 0; i < total; ++i) {
    long r = i;
    int x = A.identity();
    for (std::size_t b = 0; b < P.basis.size(); ++b) {
      long ob = 1;
      for (int t = 0; t < P.exps[b]; ++t) ob *= q;
      c[b] = static_cast<int>(r % ob);
      r /= ob;
      x = A.mul(x, A.power(P.basis[b], c[b]));
    }
    if (!P.coord.emplace(x, c).second) throw std::logic_error("abelian basis search failed");
  }
  if (P.coord.size() != elems.size()) throw std::logic_error("abelian basis search failed");
  return P;
}

struct ModRing {
  int q;
  int N;
  long long M;
  long long mod(long long x) const { return ((x % M) + M) % M; }
  int val(long long x) const {
    x = mod(x);
    if (x == 0) return N;
    int v = 0;
    while (x % q == 0) {
      x /= q;
      ++v;
    }
    return v;
  }
  long long inv_unit(long long u) const {
    long long a = mod(u), b = M, x0 = 1, x1 = 0;
    while (b) {
      long long t = a / b;
      a -= t * b;
      std::swap(a, b);
      x0 -= t * x1;
      std::swap(x0, x1);
    }
    return mod(x0);
  }
  long long pw(int e) const {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  }
};

struct Mat {
  int r = 0, c = 0;
  std::vector<long long> a;
  Mat(int rows, int cols) : r(rows), c(cols), a(static_cast<std::size_t>(rows) * cols, 0) {}
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * c + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * c + j]; }
};

// Diagonalizes A in place over Z/q^N. When C is given, records the column
// transform with A_in * C = U * A_out; Cinv tracks its inverse.
std::vector<int> snf(const ModRing& R, Mat& A, Mat* C, Mat* Cinv) {
  std::vector<int> vals;
  const int k_max = std::min(A.r, A.c);
  std::vector<int> nz;
  int live = A.r;
  for (int k = 0; k < k_max; ++k) {
    int bi = -1, bj = -1, bv = R.N;
    for (int i = k; i < live && bv > 0; ++i) {
      bool any = false;
      for (int j = k; j < A.c; ++j) {
        if (A.at(i, j) == 0) continue;
        any = true;
        const int v = R.val(A.at(i, j));
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
      if (!any) {
        // zero rows stay zero; park them below the live block
        --live;
        for (int j = 0; j < A.c; ++j) std::swap(A.at(i, j), A.at(live, j));
        if (bi == live) bi = i;
        --i;
      }
    }
    if (bi < 0) break;
    if (bi != k)
      for (int j = 0; j < A.c; ++j) std::swap(A.at(bi, j), A.at(k, j));
    if (bj != k) {
      for (int i = 0; i < A.r; ++i) std::swap(A.at(i, bj), A.at(i, k));
      if (C)
        for (int i = 0; i < C->r; ++i) std::swap(C->at(i, bj), C->at(i, k));
      if (Cinv)
        for (int j = 0; j < Cinv->c; ++j) std::swap(Cinv->at(bj, j), Cinv->at(k, j));
    }
    const long long qv = R.pw(bv);
    const long long u = R.inv_unit(A.at(k, k) / qv);
    nz.clear();
    for (int j = 0; j < A.c; ++j) {
      if (A.at(k, j) == 0) continue;
      A.at(k, j) = R.mod(A.at(k, j) * u);
      if (A.at(k, j) != 0) nz.push_back(j);
    }
    // rows: clear column k
    for (int i = 0; i < live; ++i) {
      if (i == k || A.at(i, k) == 0) continue;
      const long long t = A.at(i, k) / qv;
      for (int j : nz) A.at(i, j) = R.mod(A.at(i, j) - t * A.at(k, j));
    }
    // columns: column k is now zero off the pivot, so only row k changes in A
    std::vector<int> ck;
    if (C)
      for (int i = 0; i < C->r; ++i)
        if (C->at(i, k) != 0) ck.push_back(i);
    for (int j : nz) {
      if (j == k) continue;
      const long long t = A.at(k, j) / qv;
      A.at(k, j) = 0;
      if (C)
        for (int i : ck) C->at(i, j) = R.mod(C->at(i, j) - t * C->at(i, k));
      if (Cinv)
        for (int jj = 0; jj < Cinv->c; ++jj)
          if (Cinv->at(j, jj) != 0) Cinv->at(k, jj) = R.mod(Cinv->at(k, jj) + t * Cinv->at(j, jj));
    }
    vals.push_back(bv);
  }
  return vals;
}

// Chains of `len` composable non-identity morphisms; len 0 lists objects.
std::vector<std::vector<int>> chains(const FiniteCategory& C, int len) {
  std::vector<std::vector<int>> out;
  if (len == 0) {
    for (int o = 0; o < C.object_count(); ++o) out.push_back({o});
    return out;
  }
  for (int m = 0; m < C.morphism_count(); ++m)
    if (!C.is_identity(m)) out.push_back({m});
  const std::size_t bound = order_bound(200000);
  for (int l = 1; l < len; ++l) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : out)
      for (int o = 0; o < C.object_count(); ++o)
        for (int m : C.hom(C.morphism(ch.back()).dst, o)) {
          if (C.is_identity(m)) continue;
          next.push_back(ch);
          next.back().push_back(m);
          if (next.size() > bound) throw ResourceError("higher_limits: too many chains");
        }
    out = std::move(next);
  }
  return out;
}

struct Cochains {
  std::vector<std::vector<int>> ch;
  std::map<std::vector<int>, int> index;
  std::vector<int> offset;  // coordinate offset per chain
  std::vector<int> exps;    // exponent per coordinate
  int dim = 0;
};

Cochains cochains(const FiniteCategory& C, const std::vector<Primary>& prim, int len) {
  Cochains K;
  K.ch = chains(C, len);
  for (std::size_t i = 0; i < K.ch.size(); ++i) {
    K.index[K.ch[i]] = static_cast<int>(i);
    K.offset.push_back(K.dim);
    const int x0 = len == 0 ? K.ch[i][0] : C.morphism(K.ch[i][0]).src;
    for (int e : prim[x0].exps) K.exps.push_back(e);
    K.dim += static_cast<int>(prim[x0].exps.size());
  }
  return K;
}

// Matrix of d: C^len -> C^{len+1} in basis coordinates.
Mat differential(const ModRing& R, const FiniteCategory& C, const AbFunctor& Z, const std::vector<Primary>& prim,
                 const Cochains& src, const Cochains& dst, int len) {
  Mat D(dst.dim, src.dim);
  for (std::size_t s = 0; s < dst.ch.size(); ++s) {
    const auto& sig = dst.ch[s];
    const int x0 = C.morphism(sig[0]).src;
    const int r0 = dst.offset[s];
    const int dim0 = static_cast<int>(prim[x0].exps.size());
    auto add_identity = [&](const std::vector<int>& face, long long sign) {
      const int col = src.offset[src.index.at(face)];
      for (int i = 0; i < dim0; ++i) D.at(r0 + i, col + i) = R.mod(D.at(r0 + i, col + i) + sign);
    };
    // face 0: F(f_1) applied to c(f_2, ...)
    {
      const int f1 = sig[0];
      const int x1 = C.morphism(f1).dst;
      std::vector<int> face = len == 0 ? std::vector<int>{x1} : std::vector<int>(sig.begin() + 1, sig.end());
      const int col = src.offset[src.index.at(face)];
      for (std::size_t j = 0; j < prim[x1].basis.size(); ++j) {
        const auto& cj = prim[x0].coord.at(Z.map[f1][prim[x1].basis[j]]);
        for (int i = 0; i < dim0; ++i) D.at(r0 + i, col + static_cast<int>(j)) = R.mod(D.at(r0 + i, col + static_cast<int>(j)) + cj[i]);
      }
    }
    for (int i = 1; i <= len; ++i) {
      const int comp = C.compose(sig[i], sig[i - 1]);
      if (C.is_identity(comp)) continue;
      std::vector<int> face;
      for (int t = 0; t < i - 1; ++t) face.push_back(sig[t]);
      face.push_back(comp);
      for (int t = i + 1; t <= len; ++t) face.push_back(sig[t]);
      add_identity(face, (i % 2) ? -1 : 1);
    }
    {
      std::vector<int> face = len == 0 ? std::vector<int>{x0} : std::vector<int>(sig.begin(), sig.end() - 1);
      add_identity(face, ((len + 1) % 2) ? -1 : 1);
    }
  }
  return D;
}

AbelianInvariants primary_cohomology(const FiniteCategory& C, const AbFunctor& Z, int q, int n) {
  std::vector<Primary> prim;
  int N = 0;
  for (const Group& g : Z.value) {
    prim.push_back(primary_part(g, q));
    for (int e : prim.back().exps) N = std::max(N, e);
  }
  AbelianInvariants out;
  if (N == 0) return out;
  ModRing R{q, N, 0};
  R.M = R.pw(N);
  Cochains Kn = cochains(C, prim, n);
  Cochains Kn1 = cochains(C, prim, n + 1);
  const int m = Kn.dim;
  if (m == 0) return out;

  // kernel of d_n on the lifted module (Z/q^N)^m
  Mat T = differential(R, C, Z, prim, Kn, Kn1, n);
  for (int r = 0; r < T.r; ++r) {
    const long long s = R.pw(N - Kn1.exps[r]);
    for (int c = 0; c < T.c; ++c) T.at(r, c) = R.mod(T.at(r, c) * s);
  }
  Mat Cm(m, m), Ci(m, m);
  for (int i = 0; i < m; ++i) Cm.at(i, i) = Ci.at(i, i) = 1;
  std::vector<int> sv = snf(R, T, &Cm, &Ci);
  std::vector<int> t(m, 0);  // kernel in y-coordinates is prod q^t_i Z/q^N
  for (int i = 0; i < m; ++i) t[i] = N - (i < static_cast<int>(sv.size()) ? sv[i] : N);

  // generators of im d_{n-1} plus the relations q^a e_c
  std::vector<std::vector<long long>> gens;
  if (n > 0) {
    Cochains Kp = cochains(C, prim, n - 1);
    Mat Dp = differential(R, C, Z, prim, Kp, Kn, n - 1);
    for (int c = 0; c < Dp.c; ++c) {
      std::vector<long long> v(m);
      for (int r = 0; r < m; ++r) v[r] = Dp.at(r, c);
      gens.push_back(std::move(v));
    }
  }
  for (int c = 0; c < m; ++c) {
    std::vector<long long> v(m, 0);
    v[c] = R.pw(Kn.exps[c]) % R.M;
    gens.push_back(std::move(v));
  }
  Mat Mz(m, static_cast<int>(gens.size()) + m);
  std::vector<int> support;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    support.clear();
    for (int j = 0; j < m; ++j)
      if (gens[g][j] != 0) support.push_back(j);
    for (int i = 0; i < m; ++i) {
      long long y = 0;
      for (int j : support) y = R.mod(y + Ci.at(i, j) * gens[g][j]);
      const long long d = R.pw(t[i]);
      if (y % d != 0) throw std::logic_error("higher_limits: boundary outside the kernel");
      Mz.at(i, static_cast<int>(g)) = y / d;
    }
  }
  for (int i = 0; i < m; ++i) Mz.at(i, static_cast<int>(gens.size()) + i) = R.pw(N - t[i]) % R.M;
  std::vector<int> cv = snf(R, Mz, nullptr, nullptr);
  for (int i = 0; i < m; ++i) {
    const int e = i < static_cast<int>(cv.size()) ? cv[i] : N;
    if (e > 0) out.factors.push_back(R.pw(e));
  }
  return out;
}

}  // namespace

AbelianInvariants higher_limits(const FiniteCategory& C, const AbFunctor& Z, int n) {
  if (n < 0) throw InputError("higher_limits: negative degree");
  std::string bad = Z.check(C);
  if (!bad.empty()) throw InputError("higher_limits: " + bad);
  std::set<int> primes;
  for (const Group& g : Z.value)
    for (int q : prime_divisors(g.order())) primes.insert(q);
  AbelianInvariants out;
  for (int q : primes) {
    AbelianInvariants part = primary_cohomology(C, Z, q, n);
    out.factors.insert(out.factors.end(), part.factors.begin(), part.factors.end());
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace flab
