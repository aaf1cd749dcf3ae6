#include "apergo/stochastic.hpp"

#include <cmath>

#include "apergo/rng.hpp"

namespace apergo {

namespace {

double kahan_add(double& sum, double& comp, double term) {
  const double y = term - comp;
  const double t = sum + y;
  comp = (t - sum) - y;
  sum = t;
  return sum;
}

}  // namespace

ProcessEnsemble::ProcessEnsemble(Domain domain, Matrix stacked, int draws,
                                 std::uint64_t seed)
    : domain_(domain),
      stacked_(std::move(stacked)),
      draws_(draws),
      dim_(0),
      seed_(seed) {
  require(draws_ >= 2, errc::invalid_input, "an ensemble needs >= 2 draws");
  require(stacked_.rows() % draws_ == 0, errc::invalid_input,
          "stacked rows must be a multiple of the draw count");
  dim_ = static_cast<int>(stacked_.rows()) / draws_;
  require(dim_ >= 1, errc::invalid_input, "draws must be at least 1-dimensional");
  require(static_cast<int>(stacked_.cols()) == domain_.size(),
          errc::grid_mismatch, "draw columns must match the grid");
  require(stacked_.allFinite(), errc::invalid_input,
          "draw values must be finite");
}

ProcessEnsemble ProcessEnsemble::gaussian_scaled(
    const Domain& domain, const std::function<double(double)>& sigma,
    int draws, int dim, std::uint64_t seed) {
  require(static_cast<bool>(sigma), errc::invalid_input,
          "sigma callable is empty");
  require(draws >= 2, errc::invalid_input, "an ensemble needs >= 2 draws");
  require(dim >= 1, errc::invalid_input, "dimension must be >= 1");

  Vector scales(domain.size());
  for (int i = 0; i < domain.size(); ++i) {
    const double s = sigma(domain.point(i));
    require(std::isfinite(s) && s >= 0.0, errc::invalid_input,
            "sigma must be finite and nonnegative on the grid");
    scales[i] = s;
  }

  Rng rng(seed);
  Matrix stacked(draws * dim, domain.size());
  Vector z(dim);
  for (int k = 0; k < draws; ++k) {
    for (int j = 0; j < dim; ++j) z[j] = rng.normal();
    for (int i = 0; i < domain.size(); ++i) {
      stacked.block(k * dim, i, dim, 1) = scales[i] * z;
    }
  }
  return ProcessEnsemble(domain, std::move(stacked), draws, seed);
}

ProcessEnsemble ProcessEnsemble::deterministic(const SampledSignal& f,
                                               int draws, std::uint64_t seed) {
  require(draws >= 2, errc::invalid_input, "an ensemble needs >= 2 draws");
  Matrix stacked(draws * f.dim(), f.size());
  for (int k = 0; k < draws; ++k) {
    stacked.middleRows(k * f.dim(), f.dim()) = f.values();
  }
  return ProcessEnsemble(f.domain(), std::move(stacked), draws, seed);
}

double ProcessEnsemble::second_moment_at(int i) const {
  require(i >= 0 && i < domain_.size(), errc::range_error,
          "grid index out of range");
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 0; k < draws_; ++k) {
    kahan_add(sum, comp, stacked_.block(k * dim_, i, dim_, 1).squaredNorm());
  }
  return sum / draws_;
}

Vector ProcessEnsemble::second_moments() const {
  Vector out(domain_.size());
  for (int i = 0; i < domain_.size(); ++i) out[i] = second_moment_at(i);
  return out;
}

double ProcessEnsemble::sup_second_moment() const {
  return second_moments().maxCoeff();
}

double ProcessEnsemble::mc_rel_tol() const {
  return 3.0 / std::sqrt(2.0 * draws_);
}

double l2_norm_at(const ProcessEnsemble& x, double t) {
  return std::sqrt(x.second_moment_at(x.domain().index_of(t)));
}

const char* to_string(SmForm form) noexcept {
  return form == SmForm::Squared ? "squared" : "root";
}

double sm_ergodic_mean(const ProcessEnsemble& x, const MeasureDensity& mu,
                       double r, SmForm form) {
  Vector samples = x.second_moments();
  if (form == SmForm::Root) {
    samples = samples.cwiseSqrt();
  }
  return measure_average(x.domain(), samples, mu, r);
}

EquivalenceReport equivalence_check(const ProcessEnsemble& x,
                                    const MeasureDensity& mu,
                                    std::vector<double> radii,
                                    double threshold, double min_decay_ratio) {
  validate_radii(radii);

  const Vector moments = x.second_moments();
  const Vector roots = moments.cwiseSqrt();

  EquivalenceReport report;
  report.radii = std::move(radii);
  report.threshold = threshold;
  report.min_decay_ratio = min_decay_ratio;
  report.sup_second_moment = moments.maxCoeff();
  report.mc_rel_tol = x.mc_rel_tol();

  const double m_root = std::sqrt(report.sup_second_moment);
  double cs_excess = 0.0;
  double bd_excess = 0.0;
  for (const double r : report.radii) {
    const double squared = measure_average(x.domain(), moments, mu, r);
    const double root = measure_average(x.domain(), roots, mu, r);
    report.squared_means.push_back(squared);
    report.root_means.push_back(root);
    cs_excess = std::max(cs_excess, root * root - squared);
    bd_excess = std::max(bd_excess, squared - m_root * root);
  }
  report.cauchy_schwarz_max_excess = cs_excess;
  report.bounded_max_excess = bd_excess;
  report.cauchy_schwarz_ok = cs_excess <= 1e-10;
  report.bounded_ok = bd_excess <= 1e-10;
  report.squared_verdict =
      profile_verdict(report.squared_means, threshold, min_decay_ratio);
  report.root_verdict =
      profile_verdict(report.root_means, threshold, min_decay_ratio);
  return report;
}

SampledSignal reduce_to_signal(const ProcessEnsemble& x) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(x.draws()));
  return SampledSignal(x.domain(), scale * x.stacked(),
                       NormKind::euclidean());
}

}  // namespace apergo
