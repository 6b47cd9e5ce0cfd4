#include "flab/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace flab {

namespace {

Report names(const SubgroupLattice& lat, const std::vector<int>& ids) {
  Report a = Report::array();
  for (int id : ids) a.push_back(lat.name(id));
  return a;
}

Report s_elements(const SubgroupLattice& lat, const std::vector<int>& xs) {
  Report a = Report::array();
  for (int x : xs) a.push_back(lat.S().label(x));
  return a;
}

Report perm_1based(const std::vector<int>& p) {
  Report a = Report::array();
  for (int x : p) a.push_back(x + 1);
  return a;
}

}  // namespace

Report fusion_report(const FusionSystem& F) {
  const SubgroupLattice& lat = F.lat();
  Report r;
  r["p"] = F.p();
  r["S_order"] = lat.S().order();
  r["provenance"] = F.provenance();
  r["classes"] = Report::array();
  int centric = 0, cr = 0;
  for (const ClassInfo& c : fusion_classes(F)) {
    Report row;
    row["rep"] = lat.name(c.rep);
    row["order"] = lat.order(c.rep);
    row["size"] = c.members.size();
    row["fully_normalized"] = c.fully_normalized;
    row["fully_centralized"] = c.fully_centralized;
    row["centric"] = c.centric;
    row["radical"] = c.radical;
    row["normal"] = c.normal;
    row["aut_order"] = c.aut_order;
    row["out_order"] = c.out_order;
    centric += c.centric;
    cr += c.centric && c.radical;
    r["classes"].push_back(std::move(row));
  }
  r["centric_classes"] = centric;
  r["centric_radical_classes"] = cr;
  r["controlling_family"] = names(lat, controlling_family(F, true));
  return r;
}

Report saturation_report(const SaturationReport& s) {
  Report r;
  r["saturated"] = s.saturated;
  r["axiom_I"] = s.axiom1;
  r["axiom_II"] = s.axiom2;
  r["axiom_III"] = s.axiom3;
  r["checked_I"] = s.checked_axiom1;
  r["checked_II"] = s.checked_axiom2;
  if (!s.witness.empty()) r["witness"] = s.witness;
  return r;
}

Report linking_report(const LinkingSystem& L) {
  Report r;
  r["objects"] = Report::array();
  for (int o = 0; o < L.object_count(); ++o) {
    Report row;
    row["subgroup"] = L.lat().name(L.subgroup_of(o));
    row["aut_order"] = L.auts(o).size();
    r["objects"].push_back(std::move(row));
  }
  r["morphisms"] = L.cat().morphism_count();
  r["group_realized"] = L.group_realized();
  r["axioms"] = Report::array();
  bool ok = true;
  for (const AxiomResult& a : L.validate()) {
    Report row;
    row["axiom"] = a.axiom;
    row["ok"] = a.ok;
    if (!a.witness.empty()) row["witness"] = a.witness;
    ok = ok && a.ok;
    r["axioms"].push_back(std::move(row));
  }
  r["valid"] = ok;
  return r;
}

Report setup_report(const AmalgamGroup& G) {
  const RobinsonSetup& st = G.setup();
  const SubgroupLattice& lat = st.L->lat();
  Report r;
  r["variant"] = variant_name(st.variant);
  r["family"] = family_string(lat, st.family);
  r["controlling"] = st.controlling;
  r["controlling_detail"] = st.controlling_detail;
  r["complete"] = st.complete;
  r["hub_order"] = G.hub().order();
  r["leaves"] = Report::array();
  for (int i = 0; i < G.k(); ++i) {
    const Leaf& leaf = st.leaves[i];
    Report row;
    row["leaf"] = i + 1;
    row["subgroup"] = lat.name(leaf.v.sub);
    row["order"] = leaf.v.group.order();
    row["edge_order"] = leaf.N.order();
    r["leaves"].push_back(std::move(row));
  }
  r["finite"] = G.is_finite();
  if (G.is_finite()) r["order"] = amalgam_table(G).order();
  return r;
}

Report fusion_check_report(const FusionCheck& c) {
  Report r;
  r["equal"] = c.equal;
  if (!c.witness.empty()) r["witness"] = c.witness;
  r["counts"] = Report::array();
  for (const auto& [name, pr] : c.counts) {
    Report row;
    row["subgroup"] = name;
    row["F"] = pr.first;
    row["generated"] = pr.second;
    r["counts"].push_back(std::move(row));
  }
  return r;
}

Report center_report(const AmalgamGroup& G) {
  const LinkingSystem& L = *G.setup().L;
  const SubgroupLattice& lat = L.lat();
  Report r;
  const std::vector<int> zg = amalgam_center(G);
  OrbitCategory O = orbit_category(L.fusion(), true);
  InverseLimit lim = inverse_limit(O.cat, center_functor(L.fusion(), O));
  int so = 0;
  for (std::size_t o = 0; o < O.objects.size(); ++o)
    if (O.objects[o] == lat.whole()) so = static_cast<int>(o);
  std::vector<int> zf;
  for (const auto& fam : lim.families) zf.push_back(lat[lat.center(lat.whole())].elems[fam[so]]);
  std::sort(zf.begin(), zf.end());
  r["center_G"] = s_elements(lat, zg);
  r["inverse_limit"] = s_elements(lat, zf);
  r["invariants"] = lim.invariants.str();
  r["equal"] = zg == zf;
  return r;
}

Report out_typ_report(const LinkingSystem& L, const OutTyp& T, const std::vector<int>& family) {
  Report r;
  r["aut_typ"] = T.auts.size();
  r["distinct_conjugations"] = T.conj.size();
  r["classes"] = Report::array();
  for (std::size_t c = 0; c < T.classes.size(); ++c) {
    Report row;
    row["class"] = c;
    row["size"] = T.classes[c].members.size();
    row["upsilon"] = perm_1based(upsilon(L, T.auts[T.classes[c].rep], family));
    row["psi"] = s_elements(L.lat(), T.auts[T.classes[c].rep].psi);
    r["classes"].push_back(std::move(row));
  }
  r["out_typ"] = T.classes.size();
  return r;
}

Report split_report(const SplitReport& s) {
  Report r;
  r["classes"] = Report::array();
  for (const auto& row : s.rows) {
    Report j;
    j["class"] = row.cls;
    j["upsilon"] = perm_1based(row.upsilon);
    j["gamma_mode"] = row.mode;
    j["edges_ok"] = row.edges_ok;
    j["family_match"] = row.family_match;
    j["full_match"] = row.full_match;
    j["order_independent"] = row.order_independent;
    if (!row.detail.empty()) j["detail"] = row.detail;
    r["classes"].push_back(std::move(j));
  }
  r["gamma_homomorphism"] = std::to_string(s.step4_ok) + "/" + std::to_string(s.step4_pairs);
  r["omega_multiplicative"] = std::to_string(s.omega_ok) + "/" + std::to_string(s.omega_pairs);
  r["upsilon_multiplicative"] = std::to_string(s.upsilon_ok) + "/" + std::to_string(s.upsilon_pairs);
  r["omega_inner"] = std::to_string(s.inner_ok) + "/" + std::to_string(s.inner_checked);
  r["failures"] = s.failures;
  r["ok"] = s.ok();
  return r;
}

Report exact_report(const LinkingSystem& L, const ExactSequenceReport& e) {
  const SubgroupLattice& lat = L.lat();
  Report r;
  r["center_G"] = s_elements(lat, e.center_amalgam);
  r["center_F"] = s_elements(lat, e.center_limit);
  r["centers_equal"] = e.centers_equal;
  r["aut_L_S"] = e.aut_L_S;
  r["conjugation_kernel"] = e.conj_kernel;
  r["kernel_is_center"] = e.kernel_is_center;
  r["distinct_conjugations"] = e.distinct_conjugations;
  r["aut_typ"] = e.aut_typ;
  r["out_typ"] = e.out_typ;
  r["counts_consistent"] = e.counts_consistent;
  r["conjugations_trivial_in_out_typ"] = e.conj_in_identity_class;
  r["lim1"] = e.lim1.str();
  r["twists_fixing_S"] = e.twists;
  r["twists_mod_C_S"] = e.twists_mod_center;
  r["twists_note"] = e.twists_note;
  r["lim1_order"] = e.lim1.order();
  r["twists_vs_lim1"] = e.twists_note.find("skipped") != std::string::npos
                                 ? "unknown"
                                 : (e.twists_mod_center == e.lim1.order() ? "satisfied on the enumerated subgroup"
                                                                          : "differs on the enumerated subgroup");
  Report hub;
  hub["center"] = e.hub_center;
  hub["normalizer_of_S"] = e.hub_normalizer;
  hub["aut_fixing_S"] = e.hub_aut_s;
  hub["out"] = e.hub_out;
  hub["exact"] = e.hub_sequence_exact;
  r["hub_sequence"] = hub;
  r["failures"] = e.failures;
  r["ok"] = e.ok();
  return r;
}

Report leaf_condition_report(const LeafConditionReport& it) {
  Report r;
  r["center_order_p"] = it.center_cyclic_p;
  r["conditions"] = Report::array();
  for (const LeafConditionRow& row : it.rows) {
    Report j;
    j["subgroup"] = row.subgroup;
    j["i"] = row.i;
    j["ii"] = row.ii;
    j["iii"] = row.iii;
    j["iv"] = row.iv;
    j["detail"] = row.detail;
    r["conditions"].push_back(std::move(j));
  }
  r["injectivity_criterion_holds"] = injectivity_criterion_holds(it);
  r["finite"] = it.finite;
  if (it.out_G >= 0) r["out_G"] = it.out_G;
  if (it.out_typ >= 0) r["out_typ"] = it.out_typ;
  if (it.injective_checked) r["omega_injective"] = it.injective;
  return r;
}

PipelineResult run_pipeline(Instance inst, const PipelineOptions& opt) {
  PipelineResult res;
  Report& rep = res.report;
  rep["entry"] = inst.name;
  rep["variant"] = variant_name(opt.variant);
  Report& stages = rep["stages"] = Report::array();
  auto stage = [&](const std::string& name, Report body, bool ok, const std::string& witness = "") {
    Report s;
    s["stage"] = name;
    s["status"] = ok ? "pass" : "fail";
    if (!witness.empty()) s["witness"] = witness;
    s["report"] = std::move(body);
    stages.push_back(std::move(s));
    if (!ok) {
      rep["failed_stage"] = name;
      rep["witness"] = witness;
      rep["pass"] = false;
      res.exit_code = 1;
    }
    return ok;
  };

  const FusionSystem& F = *inst.F;
  Report fr = fusion_report(F);
  const SaturationReport sat = check_saturation(F);
  fr["saturation"] = saturation_report(sat);
  if (!stage("fusion", std::move(fr), sat.saturated, sat.witness)) return res;

  ensure_linking(inst);
  const LinkingSystem& L = *inst.L;
  Report lr = linking_report(L);
  const bool lok = lr["valid"].get<bool>();
  if (!stage("linking", std::move(lr), lok, lok ? "" : "linking axioms fail")) return res;

  const std::vector<int> family = parse_family(F, opt.family);
  auto st = std::make_shared<RobinsonSetup>(build_setup(inst.L, family, opt.variant, false));
  AmalgamGroup G(st);
  stage("setup", setup_report(G), true);

  const FusionCheck fc = verify_fusion(G, F);
  if (!stage("verify_fusion", fusion_check_report(fc), fc.equal, fc.witness)) return res;

  Report cr = center_report(G);
  const bool cok = cr["equal"].get<bool>();
  if (!stage("center", std::move(cr), cok, cok ? "" : "center of G differs from lim Z_F")) return res;

  if (!st->complete) {
    Report skip;
    skip["reason"] = "family is not complete; Out_typ stages need one member per N_F(S)-class";
    stage("out_typ", std::move(skip), true);
    rep["pass"] = true;
    return res;
  }
  const OutTyp T = out_typ(L, family);
  stage("out_typ", out_typ_report(L, T, family), true);

  const SplitReport sr = verify_split(G, T);
  if (!stage("verify_split", split_report(sr), sr.ok(), sr.ok() ? "" : sr.failures.front())) return res;

  const ExactSequenceReport er = exact_sequence_report(G, T);
  if (!stage("exact_sequences", exact_report(L, er), er.ok(), er.ok() ? "" : er.failures.front())) return res;

  std::shared_ptr<const AmalgamGroup> Gls;
  if (opt.variant == Variant::LibmanSeeliger) {
    Gls = std::make_shared<AmalgamGroup>(st);
  } else {
    Gls = std::make_shared<AmalgamGroup>(
        std::make_shared<RobinsonSetup>(build_setup(inst.L, family, Variant::LibmanSeeliger, false)));
  }
  const LeafConditionReport it = leaf_conditions(*Gls, &T);
  const bool iok = !(injectivity_criterion_holds(it) && it.injective_checked && !it.injective);
  if (!stage("leaf_conditions", leaf_condition_report(it), iok, iok ? "" : "the injectivity criterion holds but |Out(G)| differs from |Out_typ|"))
    return res;
  rep["pass"] = true;
  return res;
}

namespace {

void render(const Report& r, int indent, std::ostringstream& out) {
  const std::string pad(indent, ' ');
  if (r.is_object()) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it->is_structured() && !it->empty()) {
        out << pad << it.key() << ":\n";
        render(*it, indent + 2, out);
      } else {
        out << pad << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else if (r.is_array()) {
    bool scalars = true;
    for (const auto& x : r) scalars = scalars && !x.is_structured();
    if (scalars) {
      out << pad << r.dump() << "\n";
      return;
    }
    for (const auto& x : r) {
      out << pad << "-\n";
      render(x, indent + 2, out);
    }
  } else {
    out << pad << (r.is_string() ? r.get<std::string>() : r.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  render(r, 0, out);
  return out.str();
}

}  // namespace flab
