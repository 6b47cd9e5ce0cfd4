// flab: command-line front end over the flab_core library.
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "flab/amalgam.hpp"
#include "flab/autos.hpp"
#include "flab/catalog.hpp"
#include "flab/io.hpp"
#include "flab/limits.hpp"
#include "flab/pipeline.hpp"

using namespace flab;

namespace {

struct Common {
  std::string entry;
  std::string variant = "robinson";
  std::string family = "auto";
  bool json = false;
};

int emit(const Report& r, bool json, int code) {
  if (json)
    std::cout << r.dump(2) << "\n";
  else
    std::cout << render_text(r);
  return code;
}

Instance load_linked(const std::string& entry) {
  Instance inst = load_instance(entry);
  const SaturationReport sat = check_saturation(*inst.F);
  if (!sat.saturated) throw InputError("fusion system is not saturated: " + sat.witness);
  ensure_linking(inst);
  return inst;
}

struct Built {
  Instance inst;
  std::vector<int> family;
  std::shared_ptr<const RobinsonSetup> setup;
  std::unique_ptr<AmalgamGroup> G;
};

Built build(const Common& c, bool require_controlling) {
  Built b;
  b.inst = load_linked(c.entry);
  b.family = parse_family(*b.inst.F, c.family);
  b.setup = std::make_shared<RobinsonSetup>(
      build_setup(b.inst.L, b.family, parse_variant(c.variant), require_controlling));
  b.G = std::make_unique<AmalgamGroup>(b.setup);
  return b;
}

void need_complete(const Built& b) {
  if (!b.setup->complete) throw InputError("family must contain exactly one member per N_F(S)-class");
}

int class_index(const OutTyp& T, int c) {
  if (c < 0 || c >= static_cast<int>(T.classes.size()))
    throw InputError("class " + std::to_string(c) + " out of range 0.." + std::to_string(T.classes.size() - 1));
  return c;
}

Group cyclic(int n) {
  std::vector<std::string> labels;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return Group::from_table(labels, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fusion systems, linking systems and their Robinson amalgams"};
  app.require_subcommand(1);
  Common c;
  auto add_entry = [&](CLI::App* s) {
    s->add_option("entry", c.entry, "catalog name or JSON file")->required();
    s->add_flag("--json", c.json, "machine-readable output");
  };
  auto add_setup = [&](CLI::App* s) {
    add_entry(s);
    s->add_option("--variant", c.variant, "robinson or ls")->check(CLI::IsMember({"robinson", "ls"}));
    s->add_option("--family", c.family, "auto, complete or {S,...}");
  };

  auto* examples = app.add_subcommand("examples", "catalog entries");
  auto* ex_list = examples->add_subcommand("list", "list catalog entries");
  ex_list->add_flag("--json", c.json);
  examples->require_subcommand(1);

  auto* fusion = app.add_subcommand("fusion", "fusion system analysis");
  fusion->require_subcommand(1);
  auto* fu_an = fusion->add_subcommand("analyze", "classes, centric and radical subgroups");
  auto* fu_sat = fusion->add_subcommand("saturation", "check axioms I and II");
  add_entry(fu_an);
  add_entry(fu_sat);

  auto* linking = app.add_subcommand("linking", "centric linking system");
  linking->require_subcommand(1);
  auto* li_build = linking->add_subcommand("build", "build and export the linking system");
  auto* li_val = linking->add_subcommand("validate", "check the linking system axioms");
  add_entry(li_build);
  add_entry(li_val);

  auto* limits = app.add_subcommand("limits", "higher limits over the centric orbit category");
  std::string functor = "center";
  int degree = 0;
  add_entry(limits);
  limits->add_option("--functor", functor)->check(CLI::IsMember({"center", "constant"}));
  limits->add_option("--degree", degree)->check(CLI::Range(0, 8));

  auto* amalgam = app.add_subcommand("amalgam", "the amalgam of a setup");
  amalgam->require_subcommand(1);
  auto* am_build = amalgam->add_subcommand("build", "setup and vertex groups");
  auto* am_reduce = amalgam->add_subcommand("reduce", "normal form of a word");
  auto* am_vf = amalgam->add_subcommand("verify-fusion", "compare F_S(G) with F");
  auto* am_center = amalgam->add_subcommand("center", "Z(G) and the inverse limit of Z_F");
  auto* am_tr = amalgam->add_subcommand("transporter", "words conjugating P onto Q");
  std::string word, from = "S", to = "S";
  int radius = 2;
  for (auto* s : {am_build, am_reduce, am_vf, am_center, am_tr}) add_setup(s);
  am_reduce->add_option("--word", word)->required();
  am_tr->add_option("--from", from);
  am_tr->add_option("--to", to);
  am_tr->add_option("--radius", radius)->check(CLI::Range(0, 6));

  auto* aut = app.add_subcommand("aut", "isotypical equivalences and amalgam automorphisms");
  aut->require_subcommand(1);
  auto* au_out = aut->add_subcommand("out-typ", "enumerate Out_typ");
  auto* au_ups = aut->add_subcommand("upsilon", "leaf permutation of a class");
  auto* au_gamma = aut->add_subcommand("gamma", "automorphism of G lifting a class");
  auto* au_omega = aut->add_subcommand("omega", "class of the equivalence induced by an automorphism file");
  auto* au_split = aut->add_subcommand("verify-split", "check Omega o gamma = id on Out_typ");
  auto* au_exact = aut->add_subcommand("exact-sequences", "centers, kernels and lim^1");
  auto* au_it = aut->add_subcommand("itworks", "conditions (i)-(iv) on the family");
  int cls = 0;
  std::string file;
  for (auto* s : {au_out, au_ups, au_gamma, au_omega, au_split, au_exact, au_it}) add_setup(s);
  au_ups->add_option("--class", cls)->required();
  au_gamma->add_option("--class", cls)->required();
  au_omega->add_option("--file", file)->required();

  auto* pipeline = app.add_subcommand("pipeline", "run every stage");
  add_setup(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (ex_list->parsed()) {
      Report r = Report::array();
      for (const CatalogEntry& e : catalog()) {
        Report row;
        row["name"] = e.name;
        row["p"] = e.p;
        row["input"] = e.group.is_null() ? "fusion" : "group";
        row["negative"] = e.negative;
        if (!e.expected_failure.empty()) row["expected_failure"] = e.expected_failure;
        row["notes"] = e.notes;
        r.push_back(std::move(row));
      }
      return emit(r, c.json, 0);
    }
    if (fu_an->parsed()) {
      Instance inst = load_instance(c.entry);
      return emit(fusion_report(*inst.F), c.json, 0);
    }
    if (fu_sat->parsed()) {
      Instance inst = load_instance(c.entry);
      const SaturationReport s = check_saturation(*inst.F);
      return emit(saturation_report(s), c.json, s.saturated ? 0 : 1);
    }
    if (li_build->parsed()) {
      Instance inst = load_linked(c.entry);
      if (c.json) {
        std::cout << inst.L->to_json(inst.name).dump(2) << "\n";
        return 0;
      }
      return emit(linking_report(*inst.L), false, 0);
    }
    if (li_val->parsed()) {
      Instance inst = load_linked(c.entry);
      Report r = linking_report(*inst.L);
      return emit(r, c.json, r["valid"].get<bool>() ? 0 : 1);
    }
    if (limits->parsed()) {
      Instance inst = load_linked(c.entry);
      OrbitCategory O = orbit_category(*inst.F, true);
      AbFunctor Z = functor == "center" ? center_functor(*inst.F, O) : constant_functor(O.cat, cyclic(inst.p));
      Report r;
      r["functor"] = functor;
      r["objects"] = O.objects.size();
      r["morphisms"] = O.cat.morphism_count();
      r["degree"] = degree;
      r["limit"] = higher_limits(O.cat, Z, degree).str();
      if (degree == 0) r["inverse_limit"] = inverse_limit(O.cat, Z).invariants.str();
      return emit(r, c.json, 0);
    }
    if (am_build->parsed()) {
      Built b = build(c, false);
      return emit(setup_report(*b.G), c.json, 0);
    }
    if (am_reduce->parsed()) {
      Built b = build(c, false);
      const AmalgamWord w = b.G->parse(word);
      Report r;
      r["word"] = word;
      r["normal_form"] = b.G->format(w);
      r["length"] = w.length();
      const auto s = b.G->element_of_S(w);
      r["in_S"] = s ? b.inst.F->lat().S().label(*s) : "no";
      return emit(r, c.json, 0);
    }
    if (am_vf->parsed()) {
      Built b = build(c, false);
      const FusionCheck fc = verify_fusion(*b.G, *b.inst.F);
      return emit(fusion_check_report(fc), c.json, fc.equal ? 0 : 1);
    }
    if (am_center->parsed()) {
      Built b = build(c, false);
      Report r = center_report(*b.G);
      return emit(r, c.json, r["equal"].get<bool>() ? 0 : 1);
    }
    if (am_tr->parsed()) {
      Built b = build(c, false);
      const SubgroupLattice& lat = b.inst.F->lat();
      const int P = parse_subgroup(lat, from), Q = parse_subgroup(lat, to);
      Report r;
      r["from"] = lat.name(P);
      r["to"] = lat.name(Q);
      r["radius"] = radius;
      r["note"] = "truncated at the given normal-form length";
      r["words"] = Report::array();
      for (const AmalgamWord& w : transporter_in_amalgam(*b.G, P, Q, radius)) r["words"].push_back(b.G->format(w));
      return emit(r, c.json, 0);
    }
    if (pipeline->parsed()) {
      PipelineOptions opt;
      opt.variant = parse_variant(c.variant);
      opt.family = c.family;
      PipelineResult res = run_pipeline(load_instance(c.entry), opt);
      return emit(res.report, c.json, res.exit_code);
    }

    // aut subcommands
    Built b = build(c, true);
    need_complete(b);
    const LinkingSystem& L = *b.inst.L;
    if (au_it->parsed()) {
      const OutTyp T = out_typ(L, b.family);
      std::unique_ptr<AmalgamGroup> Gls;
      if (b.setup->variant != Variant::LibmanSeeliger)
        Gls = std::make_unique<AmalgamGroup>(std::make_shared<RobinsonSetup>(
            build_setup(b.inst.L, b.family, Variant::LibmanSeeliger, true)));
      const LeafConditionReport it = leaf_conditions(Gls ? *Gls : *b.G, &T);
      const bool ok = !(injectivity_criterion_holds(it) && it.injective_checked && !it.injective);
      return emit(leaf_condition_report(it), c.json, ok ? 0 : 1);
    }
    const OutTyp T = out_typ(L, b.family);
    if (au_out->parsed()) return emit(out_typ_report(L, T, b.family), c.json, 0);
    if (au_ups->parsed()) {
      const int k = class_index(T, cls);
      Report r;
      r["class"] = k;
      Report u = Report::array();
      for (int x : upsilon(L, T.auts[T.classes[k].rep], b.family)) u.push_back(x + 1);
      r["upsilon"] = u;
      return emit(r, c.json, 0);
    }
    if (au_gamma->parsed()) {
      const int k = class_index(T, cls);
      const AmalgamAutomorphism a = gamma(*b.G, T.auts[T.classes[k].rep]);
      const std::string err = check_automorphism(*b.G, a);
      Report r = automorphism_to_json(*b.G, a);
      r["valid"] = err.empty();
      if (!err.empty()) r["witness"] = err;
      return emit(r, c.json, err.empty() ? 0 : 1);
    }
    if (au_omega->parsed()) {
      std::ifstream in(file);
      if (!in) throw InputError("cannot read " + file);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
      }
      const AmalgamAutomorphism a = automorphism_from_json(*b.G, j);
      const std::string err = check_automorphism(*b.G, a);
      if (!err.empty()) throw InputError("not an automorphism of the amalgam: " + err);
      const IsotypicalEquivalence e = omega(*b.G, a);
      const int idx = T.find(e);
      Report r;
      r["in_aut_typ"] = idx >= 0;
      if (idx >= 0) r["class"] = T.class_of[idx];
      Report psi = Report::array();
      for (int x : e.psi) psi.push_back(L.lat().S().label(x));
      r["psi"] = psi;
      return emit(r, c.json, idx >= 0 ? 0 : 1);
    }
    if (au_split->parsed()) {
      const SplitReport s = verify_split(*b.G, T);
      return emit(split_report(s), c.json, s.ok() ? 0 : 1);
    }
    if (au_exact->parsed()) {
      const ExactSequenceReport e = exact_sequence_report(*b.G, T);
      return emit(exact_report(L, e), c.json, e.ok() ? 0 : 1);
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
