#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "flab/catalog.hpp"
#include "flab/pipeline.hpp"
#include "support.hpp"

using namespace flab;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("FLAB_MAX_ORDER", value, 1); }
  ~EnvGuard() { unsetenv("FLAB_MAX_ORDER"); }
};

const Report& stage(const Report& r, const std::string& name) {
  for (const auto& s : r["stages"])
    if (s["stage"] == name) return s;
  FAIL("no stage " << name);
  return r;
}

}  // namespace

TEST_CASE("catalog") {
  CHECK(catalog().size() >= 4);
  for (const char* name : {"s4-d8", "a6-d8", "pgl2-9", "inner-d8"}) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e != nullptr);
    CHECK_FALSE(e->negative);
  }
  CHECK(find_entry("nope") == nullptr);
  CHECK(support::instance("pgl2-9").F->lat().S().order() ==
        oracle::sylow_order(static_cast<long>(oracle::pgl2_9().size()), 2));
  CHECK(support::instance("pgl2-9").F->lat().S().order() == 16);
  CHECK(support::instance("a6-d8").F->lat().S().order() ==
        oracle::sylow_order(static_cast<long>(oracle::a6().size()), 2));
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    const Instance inst = load_instance(e.name);
    CHECK(check_saturation(*inst.F).saturated == !e.negative);
  }
}

TEST_CASE("file input") {
  const auto dir = std::filesystem::temp_directory_path() / "flab_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "s3.json";
  {
    std::ofstream out(path);
    out << R"({"name": "S3", "p": 3, "degree": 3, "generators": [[1,0,2],[1,2,0]]})";
  }
  const Instance inst = load_instance(path.string());
  CHECK(inst.p == 3);
  CHECK(inst.F->lat().S().order() == 3);
  {
    std::ofstream out(dir / "bad.json");
    out << "{not json";
  }
  CHECK_THROWS_AS(load_instance((dir / "bad.json").string()), InputError);
  CHECK_THROWS_AS(load_instance((dir / "missing.json").string()), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("order bound") {
  EnvGuard env("100");
  CHECK_THROWS_AS(load_instance("pgl2-9"), ResourceError);
}

TEST_CASE("subgroup and family parsing") {
  const FusionSystem& F = *support::instance("s4-d8").F;
  const SubgroupLattice& lat = F.lat();
  CHECK(parse_subgroup(lat, "S") == lat.whole());
  CHECK(parse_subgroup(lat, "1") == lat.trivial());
  const int V = parse_subgroup(lat, "<(1,2)(3,4),(1,3)(2,4)>");
  CHECK(support::as_set(lat, V, 4) ==
        oracle::closure(4, {oracle::from_cycles(4, {{1, 2}, {3, 4}}), oracle::from_cycles(4, {{1, 3}, {2, 4}})}));
  CHECK(parse_subgroup(lat, lat.name(V)) == V);
  CHECK(parse_family(F, "auto") == controlling_family(F, true));
  CHECK(parse_family(F, "{S}") == std::vector<int>{lat.whole()});
  CHECK(parse_family(F, "{S, <(1,2)(3,4),(1,3)(2,4)>}") == std::vector<int>{lat.whole(), V});
  CHECK(family_string(lat, {lat.whole(), V}) == "{S, " + lat.name(V) + "}");
  CHECK_THROWS_AS(parse_subgroup(lat, "<(1,2)>"), InputError);  // not in S
  CHECK_THROWS_AS(parse_family(F, "{S"), InputError);
}

TEST_CASE("pipeline") {
  PipelineOptions opt;
  SUBCASE("s4-d8 passes with Out_typ trivial") {
    const PipelineResult r = run_pipeline(load_instance("s4-d8"), opt);
    CHECK(r.exit_code == 0);
    CHECK(r.report["pass"] == true);
    CHECK(stage(r.report, "out_typ")["report"]["out_typ"] == 1);
    CHECK(stage(r.report, "leaf_conditions")["status"] == "pass");
  }
  SUBCASE("a6-d8 passes") {
    const PipelineResult r = run_pipeline(load_instance("a6-d8"), opt);
    CHECK(r.exit_code == 0);
    for (const auto& s : r.report["stages"]) CHECK(s["status"] == "pass");
  }
  SUBCASE("a non-controlling family fails at verify_fusion") {
    opt.family = "{S}";
    const PipelineResult r = run_pipeline(load_instance("s4-d8"), opt);
    CHECK(r.exit_code == 1);
    CHECK(r.report["failed_stage"] == "verify_fusion");
    CHECK_FALSE(r.report["witness"].get<std::string>().empty());
  }
  SUBCASE("negative entries fail at the fusion stage") {
    for (const char* name : {"c4-inversion", "d8-bad-extension"}) {
      const PipelineResult r = run_pipeline(load_instance(name), opt);
      CHECK(r.exit_code == 1);
      CHECK(r.report["failed_stage"] == "fusion");
    }
  }
  SUBCASE("output is deterministic and the JSON rendering round trips") {
    opt.variant = Variant::LibmanSeeliger;
    const PipelineResult a = run_pipeline(load_instance("inner-d8"), opt);
    const PipelineResult b = run_pipeline(load_instance("inner-d8"), opt);
    CHECK(render_text(a.report) == render_text(b.report));
    CHECK(a.report.dump() == b.report.dump());
    CHECK(Report::parse(a.report.dump()) == a.report);
  }
}
