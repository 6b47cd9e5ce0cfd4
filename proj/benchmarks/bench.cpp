#include <random>

#include <benchmark/benchmark.h>

#include "flab/autos.hpp"
#include "flab/io.hpp"
#include "flab/limits.hpp"

using namespace flab;

namespace {

Instance linked(const std::string& name) {
  Instance inst = load_instance(name);
  ensure_linking(inst);
  return inst;
}

std::shared_ptr<AmalgamGroup> amalgam(const Instance& inst) {
  return std::make_shared<AmalgamGroup>(std::make_shared<RobinsonSetup>(
      build_setup(inst.L, controlling_family(*inst.F, true), Variant::Robinson)));
}

void BM_LinkingBuild(benchmark::State& state, const char* name) {
  const Instance inst = load_instance(name);
  for (auto _ : state) benchmark::DoNotOptimize(linking_from_group(*inst.F));
}
BENCHMARK_CAPTURE(BM_LinkingBuild, s4_d8, "s4-d8");
BENCHMARK_CAPTURE(BM_LinkingBuild, pgl2_9, "pgl2-9");

void BM_Saturation(benchmark::State& state, const char* name) {
  const Instance inst = load_instance(name);
  for (auto _ : state) benchmark::DoNotOptimize(check_saturation(*inst.F));
}
BENCHMARK_CAPTURE(BM_Saturation, a6_d8, "a6-d8");
BENCHMARK_CAPTURE(BM_Saturation, pgl2_9, "pgl2-9");

// multiply of two reduced words of the given letter count in S4 *_D8 S4
void BM_NormalFormMultiply(benchmark::State& state) {
  const Instance inst = linked("a6-d8");
  const auto G = amalgam(inst);
  std::mt19937 rng(1);
  // alternate letters from the two leaves outside the edge groups, so the
  // normal form has exactly `len` syllables
  std::vector<std::vector<int>> outside(G->k());
  for (int i = 0; i < G->k(); ++i)
    for (int e = 0; e < G->setup().leaves[i].v.group.order(); ++e)
      if (G->setup().leaves[i].j_inv[e] < 0) outside[i].push_back(e);
  auto word = [&](int len) {
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) {
      const auto& pool = outside[i % 2];
      ls.push_back({1 + i % 2, pool[rng() % pool.size()]});
    }
    return G->reduce(ls);
  };
  const AmalgamWord a = word(static_cast<int>(state.range(0))), b = word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(G->multiply(a, b));
  state.counters["length"] = a.length();
}
BENCHMARK(BM_NormalFormMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_OutTyp(benchmark::State& state, const char* name) {
  const Instance inst = linked(name);
  const auto fam = controlling_family(*inst.F, true);
  for (auto _ : state) benchmark::DoNotOptimize(out_typ(*inst.L, fam));
}
BENCHMARK_CAPTURE(BM_OutTyp, a6_d8, "a6-d8");
BENCHMARK_CAPTURE(BM_OutTyp, pgl2_9, "pgl2-9");

void BM_HigherLimit(benchmark::State& state, const char* name) {
  const Instance inst = load_instance(name);
  const OrbitCategory O = orbit_category(*inst.F, true);
  const AbFunctor Z = center_functor(*inst.F, O);
  for (auto _ : state) benchmark::DoNotOptimize(higher_limits(O.cat, Z, static_cast<int>(state.range(0))));
}
BENCHMARK_CAPTURE(BM_HigherLimit, a6_d8, "a6-d8")->Arg(0)->Arg(1);
BENCHMARK_CAPTURE(BM_HigherLimit, pgl2_9, "pgl2-9")->Arg(1);

void BM_VerifySplit(benchmark::State& state) {
  const Instance inst = linked("a6-d8");
  const auto G = amalgam(inst);
  const OutTyp T = out_typ(*inst.L, controlling_family(*inst.F, true));
  for (auto _ : state) benchmark::DoNotOptimize(verify_split(*G, T));
}
BENCHMARK(BM_VerifySplit)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
