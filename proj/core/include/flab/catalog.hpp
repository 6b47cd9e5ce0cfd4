// Built-in example inputs.
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace flab {

struct CatalogEntry {
  std::string name;
  std::string notes;
  int p = 2;
  // Exactly one of these is set: an ambient group file (with optional
  // "sylow" generators), or an abstract fusion file.
  nlohmann::json group;
  nlohmann::json fusion;
  bool negative = false;  // expected to fail a check
  std::string expected_failure;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);

}  // namespace flab
