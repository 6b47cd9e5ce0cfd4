// Finite categories with a dense composition table.
#pragma once

#include <string>
#include <vector>

namespace flab {

class FiniteCategory {
 public:
  struct Morphism {
    int src = 0;
    int dst = 0;
    std::string label;
  };

  FiniteCategory() = default;
  explicit FiniteCategory(std::vector<std::string> object_names);

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  int morphism_count() const { return static_cast<int>(mor_.size()); }
  const Morphism& morphism(int m) const { return mor_[m]; }
  const std::vector<int>& hom(int a, int b) const { return hom_[a * object_count() + b]; }
  int identity(int o) const { return ident_[o]; }
  bool is_identity(int m) const { return ident_[mor_[m].src] == m; }

  // b after a; -1 when not composable.
  int compose(int b, int a) const {
    return comp_[static_cast<std::size_t>(b) * mor_.size() + a];
  }

  // Building.
  int add_morphism(int src, int dst, std::string label);
  void set_identity(int o, int m) { ident_[o] = m; }
  void allocate_composition();
  void set_compose(int b, int a, int c) { comp_[static_cast<std::size_t>(b) * mor_.size() + a] = c; }

  // Empty string when the category axioms hold, else a description.
  std::string check_axioms() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> mor_;
  std::vector<std::vector<int>> hom_;
  std::vector<int> ident_;
  std::vector<int> comp_;
};

}  // namespace flab
