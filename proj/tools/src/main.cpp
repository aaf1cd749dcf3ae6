// apergo: command line front end for the bounded-signal analysis library.
// Every subcommand reads CSV/JSON inputs, runs one analysis, and emits a
// single JSON report (or a CSV curve with --format csv).  Reports embed
// input digests, effective parameters, results, and the ledger of invariant
// checks re-verified at this level, so identical inputs, config, and seed
// render byte-identical bytes.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "apergo/decomposition.hpp"
#include "apergo/ergodic.hpp"
#include "apergo/generators.hpp"
#include "apergo/io.hpp"
#include "apergo/probes.hpp"
#include "apergo/report.hpp"
#include "apergo/stochastic.hpp"
#include "apergo/subspace_analysis.hpp"

namespace {

using apergo::Domain;
using apergo::DomainKind;
using apergo::ErgodicWeight;
using apergo::errc;
using apergo::Error;
using apergo::Matrix;
using apergo::MeasureDensity;
using apergo::MeasureSide;
using apergo::NormKind;
using apergo::ProbeVerdict;
using apergo::ProcessEnsemble;
using apergo::ProfileVerdict;
using apergo::SampledSignal;
using apergo::Subspace;
using apergo::Vector;
using apergo::WeightSeq;
using apergo::report::json;

// Mirrors the flag surface: shared output/seed/norm settings plus the union
// of per-subcommand inputs and parameters.  validate() enforces the config
// invariants (positive tolerances, increasing radii) before dispatch.
struct RunConfig {
  std::string subcommand;

  std::string out;
  std::string format = "json";
  std::string norm_token = "euclidean";
  std::uint64_t seed = 0;
  bool strict = false;

  std::string in, x1, x2, op, domain, action, m, n, x;
  std::string signal, f, g, h;
  std::string domain_hint;
  std::string weights, measure;
  std::string g_out, h_out;

  double radius = 0.0;
  double epsilon = 0.0;
  double tol = 0.0;
  double threshold = 1e-2;
  double min_decay_ratio = 0.5;
  double tail_fraction = 0.25;
  double block_fraction = 0.25;
  double min_overlap = 0.5;
  int min_shifts = 8;
  std::string radii_text, shifts_text;
  std::string method = "closed_form";
  int samples = 4096;
  std::string mode = "ap";

  std::string ensemble;
  double sigma_rate = 1.0;
  double sigma_const = 0.0;
  int draws = 0;
  int dim = 1;
  double rmax = 0.0;
  double step = 0.0;
  bool half = false;

  std::string kind_token;
  int terms = 4;
  double amplitude = 1.0;
  double max_omega = 5.0;
  int nmax = 0;
  std::string pattern = "uniform";
  bool zeros_on_even = false;

  std::vector<double> radii() const {
    auto r = apergo::io::parse_double_list(radii_text);
    apergo::validate_radii(r);
    return r;
  }
};

std::uint64_t env_seed() {
  const char* s = std::getenv("APERGO_SEED");
  if (s == nullptr || *s == '\0') return 0;
  return std::strtoull(s, nullptr, 10);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_curve(const std::string& header,
                      const std::vector<const std::vector<double>*>& cols) {
  std::string out = header + "\n";
  std::size_t rows = cols.empty() ? 0 : cols[0]->size();
  for (const auto* col : cols) rows = std::min(rows, col->size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c > 0) out += ",";
      out += fmt((*cols[c])[i]);
    }
    out += "\n";
  }
  return out;
}

std::string csv_kv(const std::vector<std::pair<std::string, double>>& kv) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : kv) out += k + "," + fmt(v) + "\n";
  return out;
}

// Inputs digest map plus the invariant ledger accumulated by a subcommand.
struct Context {
  json inputs = json::object();
  apergo::report::Ledger ledger;

  void note_file(const std::string& flag, const std::string& path) {
    inputs[flag] = {{"path", path}, {"digest", apergo::io::file_digest(path)}};
  }
  void note_inline(const std::string& flag, const std::string& text) {
    inputs[flag] = {{"inline", text}};
  }

  bool check_le(const std::string& name, double value, double bound) {
    ledger.push_back({name, value <= bound, value, bound});
    return value <= bound;
  }
  bool check_ge(const std::string& name, double value, double bound) {
    ledger.push_back({name, value >= bound, value, bound});
    return value >= bound;
  }
};

// A vector flag accepts either a file path or an inline comma list.
Vector load_vector(Context& ctx, const std::string& flag,
                   const std::string& arg) {
  apergo::require(!arg.empty(), errc::invalid_input,
                  "--" + flag + " is required");
  if (std::filesystem::exists(arg)) {
    ctx.note_file(flag, arg);
    return apergo::io::read_vector(arg);
  }
  ctx.note_inline(flag, arg);
  return apergo::io::parse_vector(arg);
}

std::vector<double> load_double_list(Context& ctx, const std::string& flag,
                                     const std::string& arg) {
  apergo::require(!arg.empty(), errc::invalid_input,
                  "--" + flag + " is required");
  if (std::filesystem::exists(arg)) {
    ctx.note_file(flag, arg);
    std::vector<double> out;
    const Vector v = apergo::io::read_vector(arg);
    out.assign(v.data(), v.data() + v.size());
    return out;
  }
  ctx.note_inline(flag, arg);
  return apergo::io::parse_double_list(arg);
}

Matrix load_matrix(Context& ctx, const std::string& flag,
                   const std::string& path) {
  apergo::require(!path.empty(), errc::invalid_input,
                  "--" + flag + " is required");
  ctx.note_file(flag, path);
  return apergo::io::read_matrix(path);
}

std::optional<DomainKind> parse_domain_hint(const std::string& token) {
  if (token.empty()) return {};
  if (token == "z") return DomainKind::ZWindow;
  if (token == "r") return DomainKind::RGrid;
  if (token == "r+") return DomainKind::RPlusGrid;
  apergo::fail(errc::invalid_input,
               "--domain-kind must be one of z, r, r+ (got '" + token + "')");
}

SampledSignal load_signal(Context& ctx, const std::string& flag,
                          const std::string& path, const RunConfig& cfg) {
  apergo::require(!path.empty(), errc::invalid_input,
                  "--" + flag + " is required");
  ctx.note_file(flag, path);
  return apergo::io::read_signal(path, NormKind::parse(cfg.norm_token),
                                 parse_domain_hint(cfg.domain_hint));
}

// "lebesgue", "lebesgue:<c>", or a measure JSON path.  The side follows the
// signal's domain: half-line grids average over [0, r], the rest over
// [-r, r].
MeasureDensity load_measure(Context& ctx, const std::string& token,
                            DomainKind domain_kind) {
  const MeasureSide side = domain_kind == DomainKind::RPlusGrid
                               ? MeasureSide::HalfLine
                               : MeasureSide::Line;
  if (token == "lebesgue") {
    ctx.note_inline("measure", token);
    return MeasureDensity::lebesgue(side);
  }
  if (token.rfind("lebesgue:", 0) == 0) {
    ctx.note_inline("measure", token);
    const double c = apergo::io::parse_double_list(token.substr(9)).at(0);
    return MeasureDensity::constant(c, side);
  }
  ctx.note_file("measure", token);
  return apergo::io::read_measure(token);
}

ErgodicWeight load_weight(Context& ctx, const RunConfig& cfg,
                          DomainKind domain_kind) {
  apergo::require(cfg.weights.empty() != cfg.measure.empty(),
                  errc::invalid_input,
                  "exactly one of --weights and --measure is required");
  if (!cfg.weights.empty()) {
    ctx.note_file("weights", cfg.weights);
    return apergo::io::read_weights(cfg.weights);
  }
  return load_measure(ctx, cfg.measure, domain_kind);
}

// Writes the report (JSON envelope, or the CSV curve under --format csv)
// and maps the outcome to the exit code: 3 when a ledger check failed,
// 4 when --strict met an inconclusive verdict, 0 otherwise.
int finish(const RunConfig& cfg, json params, const Context& ctx,
           json results, const std::string& csv, bool inconclusive = false) {
  const json rep = apergo::report::make_report(
      cfg.subcommand, std::move(params), ctx.inputs, std::move(results),
      ctx.ledger, cfg.seed);
  const std::string payload =
      cfg.format == "csv" ? csv : apergo::report::render(rep);
  if (cfg.out.empty()) {
    std::cout << payload;
  } else {
    apergo::io::write_text_atomic(cfg.out, payload);
  }
  for (const auto& check : ctx.ledger) {
    if (!check.pass) return 3;
  }
  if (cfg.strict && inconclusive) return 4;
  return 0;
}

int run_retract(const RunConfig& cfg) {
  Context ctx;
  const NormKind kind = NormKind::parse(cfg.norm_token);
  const Vector x = load_vector(ctx, "in", cfg.in);
  const Vector r = apergo::radial_retraction(x, cfg.radius, kind);
  const double in_norm = apergo::norm(x, kind);
  const double out_norm = apergo::norm(r, kind);
  // ||P_R x|| = min(||x||, R) exactly, by homogeneity of the norm.
  ctx.check_le("retracted_norm_matches_min",
               std::abs(out_norm - std::min(in_norm, cfg.radius)),
               1e-12 * std::max(1.0, in_norm));
  json results{{"retracted", apergo::report::describe(r)},
               {"input_norm", in_norm},
               {"output_norm", out_norm}};
  std::vector<double> idx(static_cast<std::size_t>(r.size()));
  std::vector<double> vals(static_cast<std::size_t>(r.size()));
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    idx[static_cast<std::size_t>(i)] = static_cast<double>(i);
    vals[static_cast<std::size_t>(i)] = r[i];
  }
  return finish(cfg,
                {{"radius", cfg.radius}, {"norm", kind.name()}},
                ctx, std::move(results),
                csv_curve("index,value", {&idx, &vals}));
}

int run_dunkl_williams(const RunConfig& cfg) {
  Context ctx;
  const NormKind kind = NormKind::parse(cfg.norm_token);
  const Vector x1 = load_vector(ctx, "x1", cfg.x1);
  const Vector x2 = load_vector(ctx, "x2", cfg.x2);
  const double slack = apergo::dunkl_williams_slack(x1, x2, kind);
  ctx.check_ge("slack_nonnegative", slack, -1e-12);
  return finish(cfg, {{"norm", kind.name()}}, ctx, {{"slack", slack}},
                csv_kv({{"slack", slack}}));
}

void verify_constant_witness(Context& ctx, const apergo::ConstantReport& rep,
                             const Matrix& l) {
  const Vector& z = rep.witness.z;
  const Vector& x = rep.witness.x;
  const double z_norm = z.norm();
  ctx.check_le("witness_preimage_residual", (l * x - z).norm(),
               1e-8 * std::max(1.0, z_norm));
  ctx.check_le("witness_attains_constant",
               std::abs(x.norm() - rep.constant_c * z_norm),
               1e-6 * std::max(1.0, rep.constant_c));
  ctx.check_le("d_is_c_plus_1", std::abs(rep.d - (rep.constant_c + 1.0)), 0.0);
}

int run_range_constant(const RunConfig& cfg) {
  Context ctx;
  const Matrix l = load_matrix(ctx, "op", cfg.op);
  const apergo::ConstantReport rep = apergo::range_constant(l);
  verify_constant_witness(ctx, rep, l);
  return finish(cfg, json::object(), ctx, apergo::report::describe(rep),
                csv_kv({{"constant_c", rep.constant_c}, {"d", rep.d}}));
}

int run_graph_constant(const RunConfig& cfg) {
  Context ctx;
  const Matrix d_rows = load_matrix(ctx, "domain", cfg.domain);
  const Matrix action = load_matrix(ctx, "action", cfg.action);
  const Subspace dom = Subspace::from_orthonormal(d_rows.transpose());
  const apergo::GraphOperator t(dom, action);
  const apergo::ConstantReport rep = apergo::graph_range_constant(t);
  // The witness x lives in the domain; T x should reproduce z and the graph
  // norm obeys the reported d = c + 1 bound.
  ctx.check_le("witness_image_residual",
               (t.apply(rep.witness.x) - rep.witness.z).norm(),
               1e-8 * std::max(1.0, rep.witness.z.norm()));
  ctx.check_le("graph_norm_bound",
               apergo::graph_norm(t, rep.witness.x) -
                   rep.d * rep.witness.z.norm(),
               1e-6 * std::max(1.0, rep.d));
  return finish(cfg, json::object(), ctx, apergo::report::describe(rep),
                csv_kv({{"constant_c", rep.constant_c}, {"d", rep.d}}));
}

int run_sum_constant(const RunConfig& cfg) {
  Context ctx;
  const Subspace m =
      Subspace::from_spanning(load_matrix(ctx, "m", cfg.m).transpose());
  const Subspace n =
      Subspace::from_spanning(load_matrix(ctx, "n", cfg.n).transpose());
  const apergo::ConstantReport rep =
      cfg.method == "sampled"
          ? apergo::sum_constant_sampled(m, n, cfg.seed, cfg.samples)
          : apergo::sum_constant(m, n);
  const Vector& z = rep.witness.z;
  const Vector& x = rep.witness.x;
  if (z.norm() > 0.0) {
    ctx.check_le("witness_x_in_m", m.distance(x), 1e-10 * std::max(1.0, x.norm()));
    ctx.check_le("witness_remainder_in_n", n.distance(z - x),
                 1e-10 * std::max(1.0, z.norm()));
    ctx.check_le("witness_attains_constant",
                 std::abs(x.norm() - rep.constant_c * z.norm()),
                 1e-6 * std::max(1.0, rep.constant_c));
  }
  ctx.check_le("d_is_c_plus_1", std::abs(rep.d - (rep.constant_c + 1.0)), 0.0);
  return finish(cfg, {{"method", rep.method}, {"samples", cfg.samples}}, ctx,
                apergo::report::describe(rep),
                csv_kv({{"constant_c", rep.constant_c}, {"d", rep.d}}));
}

int run_quotient_norm(const RunConfig& cfg) {
  Context ctx;
  const Matrix l = load_matrix(ctx, "op", cfg.op);
  const Vector x = load_vector(ctx, "x", cfg.x);
  const double q = apergo::quotient_norm(l, x);
  const double x_norm = x.norm();
  ctx.check_le("quotient_below_norm", q, x_norm + 1e-12);
  return finish(cfg, json::object(), ctx,
                {{"quotient_norm", q}, {"norm", x_norm}},
                csv_kv({{"quotient_norm", q}, {"norm", x_norm}}));
}

int run_ergodic(const RunConfig& cfg) {
  Context ctx;
  const SampledSignal u = load_signal(ctx, "signal", cfg.signal, cfg);
  const ErgodicWeight weight = load_weight(ctx, cfg, u.domain().kind());
  const apergo::ErgodicProfile profile = apergo::ergodicity_profile(
      u, weight, cfg.radii(), cfg.threshold, cfg.min_decay_ratio);
  double min_mean = 0.0;
  for (const double m : profile.means) min_mean = std::min(min_mean, m);
  ctx.check_ge("means_nonnegative", min_mean, 0.0);
  return finish(cfg,
                {{"radii", profile.radii},
                 {"threshold", cfg.threshold},
                 {"min_decay_ratio", cfg.min_decay_ratio},
                 {"norm", cfg.norm_token}},
                ctx, apergo::report::describe(profile),
                csv_curve("r,mean", {&profile.radii, &profile.means}),
                profile.verdict == ProfileVerdict::Inconclusive);
}

int run_ap_probe(const RunConfig& cfg) {
  Context ctx;
  apergo::require(cfg.epsilon > 0.0, errc::invalid_input,
                  "--epsilon must be positive");
  const SampledSignal u = load_signal(ctx, "signal", cfg.signal, cfg);
  apergo::APProbeOptions opts;
  opts.block_fraction = cfg.block_fraction;
  opts.min_overlap = cfg.min_overlap;
  opts.min_shift_count = cfg.min_shifts;
  const apergo::APProbeResult rep = apergo::ap_probe(u, cfg.epsilon, opts);
  double max_defect = 0.0;
  for (const double d : rep.defects) max_defect = std::max(max_defect, d);
  ctx.check_le("defects_below_epsilon", max_defect, cfg.epsilon);
  return finish(cfg,
                {{"epsilon", cfg.epsilon},
                 {"block_fraction", cfg.block_fraction},
                 {"min_overlap", cfg.min_overlap},
                 {"min_shift_count", cfg.min_shifts},
                 {"norm", cfg.norm_token}},
                ctx, apergo::report::describe(rep),
                csv_curve("tau,defect", {&rep.translation_numbers, &rep.defects}),
                rep.verdict == ProbeVerdict::Inconclusive);
}

int run_aa_probe(const RunConfig& cfg) {
  Context ctx;
  apergo::require(cfg.tol > 0.0, errc::invalid_input, "--tol must be positive");
  const SampledSignal u = load_signal(ctx, "signal", cfg.signal, cfg);
  const std::vector<double> shifts =
      load_double_list(ctx, "shifts", cfg.shifts_text);
  const apergo::AAProbeResult rep = apergo::aa_probe(u, shifts, cfg.tol);
  ctx.check_le("forward_residuals_within_tol", rep.max_forward_residual,
               cfg.tol);
  return finish(
      cfg, {{"tol", cfg.tol}, {"norm", cfg.norm_token}}, ctx,
      apergo::report::describe(rep),
      csv_curve("shift,forward_residual",
                {&rep.subsequence, &rep.forward_residuals}),
      rep.verdict == ProbeVerdict::Inconclusive);
}

int run_c0_probe(const RunConfig& cfg) {
  Context ctx;
  apergo::require(cfg.threshold > 0.0, errc::invalid_input,
                  "--threshold must be positive");
  const SampledSignal phi = load_signal(ctx, "signal", cfg.signal, cfg);
  const apergo::C0ProbeResult rep =
      apergo::c0_probe(phi, cfg.threshold, cfg.tail_fraction);
  double max_increase = 0.0;
  for (std::size_t i = 1; i < rep.tail_sups.size(); ++i) {
    max_increase =
        std::max(max_increase, rep.tail_sups[i] - rep.tail_sups[i - 1]);
  }
  ctx.check_le("tail_sups_nonincreasing", max_increase, 1e-12);
  std::vector<double> levels(rep.tail_sups.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    levels[i] = static_cast<double>(i);
  }
  return finish(cfg,
                {{"threshold", cfg.threshold},
                 {"tail_fraction", cfg.tail_fraction},
                 {"norm", cfg.norm_token}},
                ctx, apergo::report::describe(rep),
                csv_curve("level,tail_sup", {&levels, &rep.tail_sups}),
                rep.verdict == ProbeVerdict::Inconclusive);
}

void check_decomposition_bounds(Context& ctx,
                                const apergo::DecompositionResult& d) {
  ctx.check_le("reconstruction_residual",
               d.bounds.max_reconstruction_residual, 1e-12);
  ctx.check_le("sup_g_star_within_radius", d.bounds.sup_g_star,
               d.radius + 1e-12);
  ctx.check_le("pointwise_factor2_excess", d.bounds.factor2_max_excess,
               1e-12);
}

int run_decompose(const RunConfig& cfg) {
  Context ctx;
  const NormKind kind = NormKind::parse(cfg.norm_token);
  const SampledSignal f = load_signal(ctx, "f", cfg.f, cfg);
  const SampledSignal g = load_signal(ctx, "g", cfg.g, cfg);
  const SampledSignal h = load_signal(ctx, "h", cfg.h, cfg);
  const apergo::DecompositionResult res =
      apergo::normalize_decomposition(f, g, h, kind);
  check_decomposition_bounds(ctx, res);
  json results = apergo::report::describe(res);
  if (!cfg.g_out.empty()) {
    apergo::io::write_signal(cfg.g_out, res.g_star);
    results["g_star_digest"] = apergo::io::file_digest(cfg.g_out);
  }
  if (!cfg.h_out.empty()) {
    apergo::io::write_signal(cfg.h_out, res.h_star);
    results["h_star_digest"] = apergo::io::file_digest(cfg.h_out);
  }
  return finish(cfg, {{"norm", kind.name()}}, ctx, std::move(results),
                csv_kv({{"radius", res.radius},
                        {"sup_g_star", res.bounds.sup_g_star},
                        {"reconstruction_residual",
                         res.bounds.max_reconstruction_residual},
                        {"factor2_max_excess", res.bounds.factor2_max_excess}}));
}

int run_validate_pap(const RunConfig& cfg) {
  Context ctx;
  apergo::require(cfg.epsilon > 0.0, errc::invalid_input,
                  "--epsilon must be positive");
  const SampledSignal f = load_signal(ctx, "f", cfg.f, cfg);
  const SampledSignal g = load_signal(ctx, "g", cfg.g, cfg);
  const SampledSignal h = load_signal(ctx, "h", cfg.h, cfg);
  const ErgodicWeight weight = load_weight(ctx, cfg, f.domain().kind());

  apergo::PapValidationOptions opts;
  opts.radii = cfg.radii();
  opts.threshold = cfg.threshold;
  opts.min_decay_ratio = cfg.min_decay_ratio;
  opts.ap.block_fraction = cfg.block_fraction;
  opts.ap.min_overlap = cfg.min_overlap;
  opts.ap.min_shift_count = cfg.min_shifts;
  if (cfg.mode == "aa") {
    opts.mode = apergo::PapMode::AlmostAutomorphic;
    opts.aa_shifts = load_double_list(ctx, "aa-shifts", cfg.shifts_text);
  } else {
    apergo::require(cfg.mode == "ap", errc::invalid_input,
                    "--mode must be ap or aa");
  }

  const apergo::PapValidationReport rep =
      apergo::validate_pap_candidate(f, g, h, weight, cfg.epsilon, opts);
  check_decomposition_bounds(ctx, rep.decomposition);
  ctx.check_le("mean_transfer_excess", rep.mean_transfer_max_excess, 1e-12);
  return finish(cfg,
                {{"epsilon", cfg.epsilon},
                 {"mode", cfg.mode},
                 {"radii", opts.radii},
                 {"threshold", cfg.threshold},
                 {"min_decay_ratio", cfg.min_decay_ratio},
                 {"norm", cfg.norm_token}},
                ctx, apergo::report::describe(rep),
                csv_curve("r,h_star_mean,h_mean",
                          {&rep.h_star_profile.radii, &rep.h_star_profile.means,
                           &rep.h_profile.means}),
                rep.verdict == ProbeVerdict::Inconclusive);
}

int run_stochastic(const RunConfig& cfg) {
  Context ctx;
  json gen_params = json::object();
  std::optional<ProcessEnsemble> x;
  if (!cfg.ensemble.empty()) {
    ctx.note_file("ensemble", cfg.ensemble);
    x = apergo::io::read_ensemble(cfg.ensemble, cfg.seed);
  } else if (!cfg.f.empty()) {
    // Deterministic process: every draw equals the given signal.
    const SampledSignal f = load_signal(ctx, "f", cfg.f, cfg);
    apergo::require(cfg.draws >= 2, errc::invalid_input,
                    "--draws must be at least 2");
    x = ProcessEnsemble::deterministic(f, cfg.draws, cfg.seed);
    gen_params = {{"kind", "deterministic"}, {"draws", cfg.draws}};
  } else {
    // Inline gaussian ensemble x_k(t) = sigma(t) Z_k with
    // sigma(t) = sigma_const, or e^{-sigma_rate |t|} when no constant is set.
    apergo::require(cfg.draws >= 2, errc::invalid_input,
                    "--draws must be at least 2");
    apergo::require(cfg.rmax > 0.0 && cfg.step > 0.0, errc::invalid_input,
                    "inline generation needs --rmax and --step");
    const Domain domain = cfg.half ? Domain::r_plus_grid(cfg.rmax, cfg.step)
                                   : Domain::r_grid(cfg.rmax, cfg.step);
    const double rate = cfg.sigma_rate;
    const double konst = cfg.sigma_const;
    const auto sigma = [rate, konst](double t) {
      return konst > 0.0 ? konst : std::exp(-rate * std::abs(t));
    };
    x = ProcessEnsemble::gaussian_scaled(domain, sigma, cfg.draws, cfg.dim,
                                         cfg.seed);
    gen_params = {{"kind", "gaussian_scaled"},
                  {"sigma_rate", rate},
                  {"sigma_const", konst},
                  {"draws", cfg.draws},
                  {"dim", cfg.dim},
                  {"rmax", cfg.rmax},
                  {"step", cfg.step},
                  {"half", cfg.half}};
  }
  const MeasureDensity mu =
      load_measure(ctx, cfg.measure.empty() ? "lebesgue" : cfg.measure,
                   x->domain().kind());
  const apergo::EquivalenceReport rep = apergo::equivalence_check(
      *x, mu, cfg.radii(), cfg.threshold, cfg.min_decay_ratio);
  ctx.check_le("cauchy_schwarz_excess", rep.cauchy_schwarz_max_excess, 1e-10);
  ctx.check_le("bounded_direction_excess", rep.bounded_max_excess, 1e-10);
  const bool inconclusive =
      rep.squared_verdict == ProfileVerdict::Inconclusive ||
      rep.root_verdict == ProfileVerdict::Inconclusive;
  return finish(cfg,
                {{"radii", rep.radii},
                 {"threshold", cfg.threshold},
                 {"min_decay_ratio", cfg.min_decay_ratio},
                 {"generate", std::move(gen_params)}},
                ctx, apergo::report::describe(rep),
                csv_curve("r,squared_mean,root_mean",
                          {&rep.radii, &rep.squared_means, &rep.root_means}),
                inconclusive);
}

int run_generate(const RunConfig& cfg) {
  Context ctx;
  apergo::require(!cfg.out.empty(), errc::invalid_input,
                  "generate requires --out for the data file");
  const NormKind kind = NormKind::parse(cfg.norm_token);
  json results{{"path", cfg.out}};
  json params{{"kind", cfg.kind_token}};

  if (cfg.kind_token == "trig") {
    apergo::require(cfg.rmax > 0.0 && cfg.step > 0.0, errc::invalid_input,
                    "trig generation needs --rmax and --step");
    const Domain domain = cfg.half ? Domain::r_plus_grid(cfg.rmax, cfg.step)
                                   : Domain::r_grid(cfg.rmax, cfg.step);
    const SampledSignal s = apergo::gen_random_trig_polynomial(
        domain, cfg.dim, cfg.terms, cfg.amplitude, cfg.max_omega, cfg.seed,
        kind);
    apergo::io::write_signal(cfg.out, s);
    params.update({{"terms", cfg.terms},
                   {"amplitude", cfg.amplitude},
                   {"max_omega", cfg.max_omega},
                   {"dim", cfg.dim},
                   {"rmax", cfg.rmax},
                   {"step", cfg.step}});
    results.update({{"sup_norm", s.sup_norm()}, {"size", s.size()}});
  } else if (cfg.kind_token == "noise") {
    apergo::require(cfg.rmax > 0.0 && cfg.step > 0.0, errc::invalid_input,
                    "noise generation needs --rmax and --step");
    const Domain domain = cfg.half ? Domain::r_plus_grid(cfg.rmax, cfg.step)
                                   : Domain::r_grid(cfg.rmax, cfg.step);
    const double amp = cfg.amplitude;
    const SampledSignal s = apergo::gen_ergodic_noise(
        domain, [amp](double) { return amp; }, cfg.seed, cfg.dim, kind);
    apergo::io::write_signal(cfg.out, s);
    params.update({{"amplitude", cfg.amplitude},
                   {"dim", cfg.dim},
                   {"rmax", cfg.rmax},
                   {"step", cfg.step}});
    results.update({{"sup_norm", s.sup_norm()}, {"size", s.size()}});
  } else if (cfg.kind_token == "envelope") {
    apergo::require(cfg.rmax > 0.0 && cfg.step > 0.0, errc::invalid_input,
                    "envelope generation needs --rmax and --step");
    const Domain domain = cfg.half ? Domain::r_plus_grid(cfg.rmax, cfg.step)
                                   : Domain::r_grid(cfg.rmax, cfg.step);
    Matrix values(1, domain.size());
    for (int i = 0; i < domain.size(); ++i) {
      values(0, i) =
          cfg.amplitude * std::exp(-cfg.sigma_rate * std::abs(domain.point(i)));
    }
    const SampledSignal s(domain, std::move(values), kind);
    apergo::io::write_signal(cfg.out, s);
    params.update({{"amplitude", cfg.amplitude},
                   {"rate", cfg.sigma_rate},
                   {"rmax", cfg.rmax},
                   {"step", cfg.step}});
    results.update({{"sup_norm", s.sup_norm()}, {"size", s.size()}});
  } else if (cfg.kind_token == "alternating") {
    apergo::require(cfg.nmax >= 1, errc::invalid_input,
                    "alternating generation needs --nmax");
    const SampledSignal s =
        apergo::gen_alternating_sequence(cfg.nmax, !cfg.zeros_on_even);
    apergo::io::write_signal(cfg.out, s);
    params.update({{"nmax", cfg.nmax}, {"ones_on_even", !cfg.zeros_on_even}});
    results.update({{"sup_norm", s.sup_norm()}, {"size", s.size()}});
  } else if (cfg.kind_token == "weights") {
    apergo::require(cfg.nmax >= 1, errc::invalid_input,
                    "weight generation needs --nmax");
    const WeightSeq w = cfg.pattern == "alternating"
                            ? WeightSeq::alternating(cfg.nmax)
                            : WeightSeq::uniform(cfg.nmax);
    apergo::io::write_weights(cfg.out, w);
    params.update({{"nmax", cfg.nmax}, {"pattern", cfg.pattern}});
    results["window_sum"] = w.window_sum(cfg.nmax);
  } else {
    apergo::fail(errc::invalid_input,
                 "--kind must be one of trig, noise, envelope, alternating, "
                 "weights (got '" +
                     cfg.kind_token + "')");
  }
  results["digest"] = apergo::io::file_digest(cfg.out);
  Context out_ctx = ctx;
  // The data file is the product here; the report goes to stdout.
  RunConfig report_cfg = cfg;
  report_cfg.out.clear();
  return finish(report_cfg, std::move(params), out_ctx, std::move(results),
                csv_kv({}));
}

void print_error(errc code, const std::string& message) {
  const json err{{"error",
                  {{"code", apergo::errc_name(code)}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

int dispatch(const RunConfig& cfg) {
  if (cfg.subcommand == "retract") return run_retract(cfg);
  if (cfg.subcommand == "dunkl-williams") return run_dunkl_williams(cfg);
  if (cfg.subcommand == "range-constant") return run_range_constant(cfg);
  if (cfg.subcommand == "graph-constant") return run_graph_constant(cfg);
  if (cfg.subcommand == "sum-constant") return run_sum_constant(cfg);
  if (cfg.subcommand == "quotient-norm") return run_quotient_norm(cfg);
  if (cfg.subcommand == "ergodic") return run_ergodic(cfg);
  if (cfg.subcommand == "ap-probe") return run_ap_probe(cfg);
  if (cfg.subcommand == "aa-probe") return run_aa_probe(cfg);
  if (cfg.subcommand == "c0-probe") return run_c0_probe(cfg);
  if (cfg.subcommand == "decompose") return run_decompose(cfg);
  if (cfg.subcommand == "validate-pap") return run_validate_pap(cfg);
  if (cfg.subcommand == "stochastic") return run_stochastic(cfg);
  if (cfg.subcommand == "generate") return run_generate(cfg);
  apergo::fail(errc::invalid_input, "unknown subcommand " + cfg.subcommand);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Report file (default: stdout)");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--norm", cfg.norm_token,
                  "Value-space norm: euclidean, sup, or p<x> (e.g. p1)");
  sub->add_option("--seed", cfg.seed, "Random seed (default: APERGO_SEED)");
  sub->add_flag("--strict", cfg.strict,
                "Exit 4 when the verdict is inconclusive");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  cfg.seed = env_seed();

  CLI::App app{"Numerical probes for bounded signals: retraction and "
               "decomposition, subspace constants, ergodic averages, almost "
               "periodicity, and square-mean statistics"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");
  const auto make_sub = [&app](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "Print help");
    return sub;
  };

  auto* retract = make_sub("retract", "Radial retraction onto a ball");
  retract->add_option("--in", cfg.in, "Vector: file or comma list")->required();
  retract->add_option("--radius", cfg.radius, "Ball radius")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(retract, cfg);

  auto* dw = make_sub("dunkl-williams",
                                "Slack in the normalized-difference bound");
  dw->add_option("--x1", cfg.x1, "First vector: file or comma list")->required();
  dw->add_option("--x2", cfg.x2, "Second vector: file or comma list")->required();
  add_common(dw, cfg);

  auto* rc = make_sub("range-constant",
                                "Least preimage-norm constant of a matrix");
  rc->add_option("--op", cfg.op, "Operator matrix file")->required();
  add_common(rc, cfg);

  auto* gc = make_sub("graph-constant",
                                "Range constant of an operator on a subspace");
  gc->add_option("--domain", cfg.domain,
                 "Matrix file; rows form an orthonormal basis of the domain")
      ->required();
  gc->add_option("--action", cfg.action,
                 "Matrix file; columns are images of the domain basis")
      ->required();
  add_common(gc, cfg);

  auto* sc = make_sub("sum-constant",
                                "Splitting constant of a subspace sum");
  sc->add_option("--m", cfg.m, "Matrix file; rows span M")->required();
  sc->add_option("--n", cfg.n, "Matrix file; rows span N")->required();
  sc->add_option("--method", cfg.method, "closed_form or sampled")
      ->check(CLI::IsMember({"closed_form", "sampled"}));
  sc->add_option("--samples", cfg.samples, "Sample count for --method sampled")
      ->check(CLI::PositiveNumber);
  add_common(sc, cfg);

  auto* qn = make_sub("quotient-norm",
                                "Norm of the coset modulo the kernel");
  qn->add_option("--op", cfg.op, "Operator matrix file")->required();
  qn->add_option("--x", cfg.x, "Vector: file or comma list")->required();
  add_common(qn, cfg);

  auto* erg = make_sub("ergodic",
                                 "Weighted averages over growing radii");
  erg->add_option("--signal", cfg.signal, "Signal CSV")->required();
  erg->add_option("--weights", cfg.weights, "Weight CSV (integer signals)");
  erg->add_option("--measure", cfg.measure,
                  "lebesgue, lebesgue:<c>, or measure JSON");
  erg->add_option("--radii", cfg.radii_text, "Increasing radii, comma list")
      ->required();
  erg->add_option("--threshold", cfg.threshold, "Smallness threshold")
      ->check(CLI::PositiveNumber);
  erg->add_option("--ratio", cfg.min_decay_ratio, "Required decay ratio")
      ->check(CLI::PositiveNumber);
  erg->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(erg, cfg);

  auto* ap = make_sub("ap-probe",
                                "Translation-number scan for almost periodicity");
  ap->add_option("--signal", cfg.signal, "Signal CSV")->required();
  ap->add_option("--epsilon", cfg.epsilon, "Translation tolerance")->required();
  ap->add_option("--block-fraction", cfg.block_fraction,
                 "Largest certified block, as a grid fraction");
  ap->add_option("--min-overlap", cfg.min_overlap,
                 "Smallest tested overlap fraction");
  ap->add_option("--min-shifts", cfg.min_shifts,
                 "Fewest testable shifts before inconclusive");
  ap->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(ap, cfg);

  auto* aa = make_sub("aa-probe",
                                "Subsequence extraction for almost automorphy");
  aa->add_option("--signal", cfg.signal, "Signal CSV")->required();
  aa->add_option("--shifts", cfg.shifts_text, "Candidate shifts: file or list")
      ->required();
  aa->add_option("--tol", cfg.tol, "Convergence tolerance")->required();
  aa->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(aa, cfg);

  auto* c0 = make_sub("c0-probe", "Vanishing-tail check");
  c0->add_option("--signal", cfg.signal, "Signal CSV")->required();
  c0->add_option("--threshold", cfg.threshold, "Tail smallness threshold")
      ->required();
  c0->add_option("--tail-fraction", cfg.tail_fraction,
                 "Trailing grid fraction to certify")
      ->check(CLI::PositiveNumber);
  c0->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(c0, cfg);

  auto* dec = make_sub("decompose",
                                 "Normalize f = g + h to a bounded g*");
  dec->add_option("--f", cfg.f, "Signal CSV for f")->required();
  dec->add_option("--g", cfg.g, "Signal CSV for g")->required();
  dec->add_option("--h", cfg.h, "Signal CSV for h")->required();
  dec->add_option("--g-out", cfg.g_out, "Write g* CSV here");
  dec->add_option("--h-out", cfg.h_out, "Write h* CSV here");
  dec->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(dec, cfg);

  auto* vp = make_sub(
      "validate-pap", "Joint probe of a periodic-plus-ergodic candidate");
  vp->add_option("--f", cfg.f, "Signal CSV for f")->required();
  vp->add_option("--g", cfg.g, "Signal CSV for g")->required();
  vp->add_option("--h", cfg.h, "Signal CSV for h")->required();
  vp->add_option("--weights", cfg.weights, "Weight CSV (integer signals)");
  vp->add_option("--measure", cfg.measure,
                 "lebesgue, lebesgue:<c>, or measure JSON");
  vp->add_option("--epsilon", cfg.epsilon, "Translation tolerance")->required();
  vp->add_option("--radii", cfg.radii_text, "Increasing radii, comma list")
      ->required();
  vp->add_option("--mode", cfg.mode, "ap or aa")
      ->check(CLI::IsMember({"ap", "aa"}));
  vp->add_option("--aa-shifts", cfg.shifts_text,
                 "Candidate shifts for --mode aa: file or list");
  vp->add_option("--threshold", cfg.threshold, "Smallness threshold");
  vp->add_option("--ratio", cfg.min_decay_ratio, "Required decay ratio");
  vp->add_option("--block-fraction", cfg.block_fraction,
                 "Largest certified block, as a grid fraction");
  vp->add_option("--domain-kind", cfg.domain_hint, "Grid kind: z, r, r+");
  add_common(vp, cfg);

  auto* st = make_sub(
      "stochastic", "Square-mean profiles and their equivalence checks");
  st->add_option("--ensemble", cfg.ensemble, "Ensemble CSV");
  st->add_option("--f", cfg.f, "Deterministic signal CSV (every draw equal)");
  st->add_option("--sigma-rate", cfg.sigma_rate,
                 "Inline gaussian: sigma(t) = e^{-rate |t|}");
  st->add_option("--sigma-const", cfg.sigma_const,
                 "Inline gaussian: constant sigma");
  st->add_option("--draws", cfg.draws, "Draw count for inline generation");
  st->add_option("--dim", cfg.dim, "Value dimension for inline generation")
      ->check(CLI::PositiveNumber);
  st->add_option("--rmax", cfg.rmax, "Grid extent for inline generation");
  st->add_option("--step", cfg.step, "Grid step for inline generation");
  st->add_flag("--half", cfg.half, "Half-line grid [0, rmax]");
  st->add_option("--measure", cfg.measure,
                 "lebesgue, lebesgue:<c>, or measure JSON");
  st->add_option("--radii", cfg.radii_text, "Increasing radii, comma list")
      ->required();
  st->add_option("--threshold", cfg.threshold, "Smallness threshold");
  st->add_option("--ratio", cfg.min_decay_ratio, "Required decay ratio");
  add_common(st, cfg);

  auto* gen = make_sub("generate", "Emit reproducible test data");
  gen->add_option("--kind", cfg.kind_token,
                  "trig, noise, envelope, alternating, or weights")
      ->required();
  gen->add_option("--rmax", cfg.rmax, "Grid extent");
  gen->add_option("--step", cfg.step, "Grid step");
  gen->add_flag("--half", cfg.half, "Half-line grid [0, rmax]");
  gen->add_option("--dim", cfg.dim, "Value dimension")
      ->check(CLI::PositiveNumber);
  gen->add_option("--terms", cfg.terms, "Trig term count")
      ->check(CLI::PositiveNumber);
  gen->add_option("--amplitude", cfg.amplitude, "Sup-norm scale");
  gen->add_option("--max-omega", cfg.max_omega, "Largest trig frequency");
  gen->add_option("--rate", cfg.sigma_rate, "Envelope decay rate");
  gen->add_option("--nmax", cfg.nmax, "Integer window half-width");
  gen->add_option("--pattern", cfg.pattern, "Weight pattern")
      ->check(CLI::IsMember({"uniform", "alternating"}));
  gen->add_flag("--zeros-on-even", cfg.zeros_on_even,
                "Alternating sequence starts with 0 at even indices");
  add_common(gen, cfg);

  try {
    app.parse(argc, argv);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return dispatch(cfg);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error(errc::invalid_input, e.what());
    return 2;
  } catch (const Error& e) {
    print_error(e.code(), e.what());
    return e.code() == errc::numerical ? 3 : 2;
  } catch (const std::exception& e) {
    print_error(errc::numerical, std::string("unexpected failure: ") + e.what());
    return 3;
  }
}
