#include "flab/category.hpp"

namespace flab {

FiniteCategory::FiniteCategory(std::vector<std::string> object_names)
    : objects_(std::move(object_names)),
      hom_(objects_.size() * objects_.size()),
      ident_(objects_.size(), -1) {}

int FiniteCategory::add_morphism(int src, int dst, std::string label) {
  const int id = static_cast<int>(mor_.size());
  mor_.push_back(Morphism{src, dst, std::move(label)});
  hom_[src * object_count() + dst].push_back(id);
  return id;
}

void FiniteCategory::allocate_composition() { comp_.assign(mor_.size() * mor_.size(), -1); }

std::string FiniteCategory::check_axioms() const {
  const int n = object_count();
  for (int o = 0; o < n; ++o) {
    const int e = ident_[o];
    if (e < 0 || mor_[e].src != o || mor_[e].dst != o) return "missing identity at " + objects_[o];
  }
  const int m = morphism_count();
  for (int a = 0; a < m; ++a) {
    const Morphism& A = mor_[a];
    if (compose(a, ident_[A.src]) != a || compose(ident_[A.dst], a) != a)
      return "identity law fails at " + A.label;
  }
  for (int a = 0; a < m; ++a) {
    const Morphism& A = mor_[a];
    for (int q = 0; q < n; ++q)
      for (int b : hom(A.dst, q)) {
        const int ba = compose(b, a);
        if (ba < 0 || mor_[ba].src != A.src || mor_[ba].dst != q)
          return "composition undefined or mistyped at " + mor_[b].label + " o " + A.label;
        for (int r = 0; r < n; ++r)
          for (int c : hom(q, r))
            if (compose(c, ba) != compose(compose(c, b), a))
              return "associativity fails at " + mor_[c].label + ", " + mor_[b].label + ", " + A.label;
      }
  }
  return "";
}

}  // namespace flab
