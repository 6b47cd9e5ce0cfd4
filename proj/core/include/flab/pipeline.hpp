// Report trees for each stage and the end-to-end verification pipeline.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "flab/amalgam.hpp"
#include "flab/autos.hpp"
#include "flab/io.hpp"

namespace flab {

using Report = nlohmann::ordered_json;

Report fusion_report(const FusionSystem& F);
Report saturation_report(const SaturationReport& s);
Report linking_report(const LinkingSystem& L);
Report setup_report(const AmalgamGroup& G);
Report fusion_check_report(const FusionCheck& c);
Report center_report(const AmalgamGroup& G);
Report out_typ_report(const LinkingSystem& L, const OutTyp& T, const std::vector<int>& family);
Report split_report(const SplitReport& r);
Report exact_report(const LinkingSystem& L, const ExactSequenceReport& r);
Report leaf_condition_report(const LeafConditionReport& r);

struct PipelineOptions {
  Variant variant = Variant::Robinson;
  std::string family = "auto";
};

struct PipelineResult {
  Report report;
  int exit_code = 0;  // 0 pass, 1 a check failed
};

PipelineResult run_pipeline(Instance inst, const PipelineOptions& opt);

// Indented text rendering of a report tree.
std::string render_text(const Report& r);

}  // namespace flab
