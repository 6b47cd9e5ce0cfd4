// Functors into finite abelian groups, inverse limits and higher limits.
#pragma once

#include <string>
#include <vector>

#include "flab/category.hpp"
#include "flab/fusion.hpp"
#include "flab/groups.hpp"
#include "flab/linking.hpp"

namespace flab {

// Contravariant functor: value(o) is a finite abelian group, map(m) sends
// value(dst(m)) to value(src(m)).
struct AbFunctor {
  std::vector<Group> value;
  std::vector<std::vector<int>> map;

  // Empty when functorial, else a description.
  std::string check(const FiniteCategory& C) const;
};

// Z_F on the orbit category: P -> Z(P), [f] -> (z -> f^-1(z)).
// value(o) elements are indexed like lat[Z(P)].elems.
AbFunctor center_functor(const FusionSystem& F, const OrbitCategory& O);
AbFunctor constant_functor(const FiniteCategory& C, const Group& A);

// Invariant factor data of a finite abelian group: prime-power cyclic orders.
struct AbelianInvariants {
  std::vector<long> factors;  // sorted ascending, each a prime power > 1
  long order() const;
  std::string str() const;    // "1" or "C2 x C4"
  bool operator==(const AbelianInvariants&) const = default;
};
AbelianInvariants abelian_invariants(const Group& A);

struct InverseLimit {
  std::vector<std::vector<int>> families;  // one entry per object
  Group group;                              // componentwise product
  int anchor = -1;                          // weakly terminal object used, or -1
  std::vector<int> embedding;               // family -> element of value(anchor)
  AbelianInvariants invariants;
};
InverseLimit inverse_limit(const FiniteCategory& C, const AbFunctor& Z);

// n-th cohomology of the normalized cochain complex of C with coefficients in Z.
AbelianInvariants higher_limits(const FiniteCategory& C, const AbFunctor& Z, int n);

}  // namespace flab
