#include "apergo/report.hpp"

namespace apergo::report {

json describe(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json describe(NormKind kind) { return kind.name(); }

json describe(const ConstantReport& r) {
  return {{"constant_c", r.constant_c},
          {"d", r.d},
          {"witness",
           {{"z", describe(r.witness.z)},
            {"x", describe(r.witness.x)},
            {"y", describe(r.witness.y)}}},
          {"method", r.method},
          {"tolerances", {{"rank", r.rank_tolerance}}}};
}

json describe(const ErgodicProfile& p) {
  return {{"radii", p.radii},
          {"means", p.means},
          {"verdict", to_string(p.verdict)},
          {"threshold", p.threshold},
          {"min_decay_ratio", p.min_decay_ratio}};
}

json describe(const APProbeResult& r) {
  return {{"epsilon", r.epsilon},
          {"window_steps", r.window_steps},
          {"window_length", r.window_length},
          {"translation_numbers", r.translation_numbers},
          {"defects", r.defects},
          {"verdict", to_string(r.verdict)},
          {"max_tested_shift", r.max_tested_shift},
          {"max_window_steps", r.max_window_steps}};
}

json describe(const AAProbeResult& r) {
  return {{"tol", r.tol},
          {"subsequence", r.subsequence},
          {"forward_residuals", r.forward_residuals},
          {"max_forward_residual", r.max_forward_residual},
          {"max_backward_residual", r.max_backward_residual},
          {"verdict", to_string(r.verdict)},
          {"window_begin", r.window_begin},
          {"window_end", r.window_end}};
}

json describe(const C0ProbeResult& r) {
  return {{"threshold", r.threshold},
          {"tail_fraction", r.tail_fraction},
          {"tail_sups", r.tail_sups},
          {"verdict", to_string(r.verdict)}};
}

json describe(const DecompositionBounds& b) {
  return {{"sup_f", b.sup_f},
          {"sup_g_star", b.sup_g_star},
          {"max_reconstruction_residual", b.max_reconstruction_residual},
          {"input_consistency_residual", b.input_consistency_residual},
          {"factor2_max_ratio", b.factor2_max_ratio},
          {"factor2_max_excess", b.factor2_max_excess}};
}

json describe(const DecompositionResult& r) {
  return {{"radius", r.radius},
          {"bounds", describe(r.bounds)},
          {"domain", to_string(r.g_star.domain().kind())},
          {"dim", r.g_star.dim()},
          {"size", r.g_star.size()},
          {"norm", describe(r.g_star.norm_kind())}};
}

json describe(const PapValidationReport& r) {
  json out{{"decomposition", describe(r.decomposition)},
           {"h_star_profile", describe(r.h_star_profile)},
           {"h_profile", describe(r.h_profile)},
           {"mean_transfer_max_excess", r.mean_transfer_max_excess},
           {"mean_transfer_ok", r.mean_transfer_ok},
           {"verdict", to_string(r.verdict)}};
  if (r.ap) out["ap"] = describe(*r.ap);
  if (r.aa) out["aa"] = describe(*r.aa);
  return out;
}

json describe(const EquivalenceReport& r) {
  return {{"radii", r.radii},
          {"squared_means", r.squared_means},
          {"root_means", r.root_means},
          {"sup_second_moment", r.sup_second_moment},
          {"cauchy_schwarz_max_excess", r.cauchy_schwarz_max_excess},
          {"bounded_max_excess", r.bounded_max_excess},
          {"cauchy_schwarz_ok", r.cauchy_schwarz_ok},
          {"bounded_ok", r.bounded_ok},
          {"squared_verdict", to_string(r.squared_verdict)},
          {"root_verdict", to_string(r.root_verdict)},
          {"threshold", r.threshold},
          {"min_decay_ratio", r.min_decay_ratio},
          {"mc_rel_tol", r.mc_rel_tol}};
}

json describe(const InvariantCheck& c) {
  return {{"name", c.name},
          {"pass", c.pass},
          {"value", c.value},
          {"bound", c.bound}};
}

json describe(const Ledger& ledger) {
  json out = json::array();
  for (const auto& check : ledger) out.push_back(describe(check));
  return out;
}

json make_report(const std::string& command, json params, json inputs,
                 json results, const Ledger& ledger, std::uint64_t seed) {
  return {{"schema", 1},
          {"command", command},
          {"seed", seed},
          {"inputs", std::move(inputs)},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"invariants", describe(ledger)}};
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace apergo::report
