#include "flab/catalog.hpp"

namespace flab {

namespace {

using nlohmann::json;

CatalogEntry group_entry(std::string name, std::string notes, int degree, json gens, json sylow = nullptr) {
  CatalogEntry e;
  e.name = name;
  e.notes = std::move(notes);
  e.group = {{"name", name}, {"degree", degree}, {"generators", std::move(gens)}};
  if (!sylow.is_null()) e.group["sylow"] = std::move(sylow);
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back(group_entry("s4-d8", "S4 at p = 2; the amalgam collapses back to S4", 4,
                            json::array({{1, 0, 2, 3}, {1, 2, 3, 0}}),
                            json::array({{1, 2, 3, 0}, {2, 1, 0, 3}})));
  out.push_back(group_entry("a6-d8", "A6 at p = 2; two classes of Klein fours, amalgam S4 *_D8 S4", 6,
                            json::array({{1, 2, 0, 3, 4, 5}, {0, 2, 3, 4, 5, 1}})));
  out.push_back(group_entry("pgl2-9", "PGL2(9) on the 10 points of the projective line; dihedral Sylow of order 16", 10,
                            json::array({{1, 2, 0, 4, 5, 3, 7, 8, 6, 9},
                                         {0, 4, 8, 5, 6, 1, 7, 2, 3, 9},
                                         {9, 1, 2, 6, 5, 4, 3, 8, 7, 0}})));
  out.push_back(group_entry("inner-d8", "D8 acting on itself; inner fusion, center of order 2", 4,
                            json::array({{1, 2, 3, 0}, {2, 1, 0, 3}})));

  CatalogEntry c4;
  c4.name = "c4-inversion";
  c4.notes = "C4 with the inversion automorphism declared; Out_S(C4) = 1 is not Sylow in C2";
  c4.fusion = {{"name", "c4-inversion"},
               {"p", 2},
               {"S", {{"name", "C4"}, {"degree", 4}, {"generators", json::array({{1, 2, 3, 0}})}}},
               {"maps", json::array({{{"src", {"(1,2,3,4)"}}, {"images", {"(1,4,3,2)"}}}})}};
  c4.negative = true;
  c4.expected_failure = "saturation axiom I";
  out.push_back(std::move(c4));

  CatalogEntry d8;
  d8.name = "d8-bad-extension";
  d8.notes = "D8 with a reflection fused to the central involution only; the fusion does not extend";
  d8.fusion = {{"name", "d8-bad-extension"},
               {"p", 2},
               {"S", {{"name", "D8"}, {"degree", 4}, {"generators", json::array({{1, 2, 3, 0}, {2, 1, 0, 3}})}}},
               {"maps", json::array({{{"src", {"(1,3)"}}, {"images", {"(1,3)(2,4)"}}}})}};
  d8.negative = true;
  d8.expected_failure = "saturation";
  out.push_back(std::move(d8));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace flab
