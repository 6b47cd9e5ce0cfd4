// Glue between library objects and the oracle's raw permutations.
#pragma once

#include <map>
#include <memory>
#include <string>

#include "flab/io.hpp"
#include "oracle.hpp"

namespace support {

// Instances are cached per process; building them is the slow part.
inline flab::Instance& instance(const std::string& name) {
  static std::map<std::string, flab::Instance> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    flab::Instance inst = flab::load_instance(name);
    if (!inst.negative) flab::ensure_linking(inst);
    it = cache.emplace(name, std::move(inst)).first;
  }
  return it->second;
}

inline oracle::Set as_set(const flab::SubgroupLattice& lat, int id, int degree) {
  oracle::Set r;
  for (int x : lat[id].elems) r.insert(oracle::parse(degree, lat.S().label(x)));
  return r;
}

inline int find_id(const flab::SubgroupLattice& lat, const oracle::Set& P, int degree) {
  for (int id = 0; id < lat.count(); ++id)
    if (as_set(lat, id, degree) == P) return id;
  return -1;
}

inline oracle::Set library_S(const flab::Instance& inst) {
  return as_set(inst.F->lat(), inst.F->lat().whole(), inst.ambient->degree());
}

// The ambient group regenerated by the oracle from the input generators.
inline oracle::Set ambient_set(const flab::Instance& inst) {
  std::vector<oracle::Pm> gens;
  for (const auto& g : inst.ambient->generators()) gens.push_back(g.images());
  return oracle::closure(inst.ambient->degree(), gens);
}

inline oracle::FusionOracle fusion_oracle(const flab::Instance& inst) {
  return oracle::FusionOracle(ambient_set(inst), library_S(inst), inst.p);
}

}  // namespace support
