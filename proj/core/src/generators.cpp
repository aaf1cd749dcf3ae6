#include "apergo/generators.hpp"

#include <cmath>

#include "apergo/rng.hpp"

namespace apergo {

SampledSignal gen_trig_polynomial(const std::vector<TrigTerm>& terms,
                                  const Domain& domain, int dim,
                                  NormKind kind) {
  require(dim >= 1, errc::invalid_input, "dimension must be >= 1");
  for (const TrigTerm& term : terms) {
    require(std::isfinite(term.omega), errc::invalid_input,
            "frequencies must be finite");
    require(term.cos_coeff.size() == dim && term.sin_coeff.size() == dim,
            errc::invalid_input, "coefficient dimension mismatch");
    require(term.cos_coeff.allFinite() && term.sin_coeff.allFinite(),
            errc::invalid_input, "coefficients must be finite");
  }
  Matrix values = Matrix::Zero(dim, domain.size());
  for (int i = 0; i < domain.size(); ++i) {
    const double t = domain.point(i);
    for (const TrigTerm& term : terms) {
      values.col(i) += std::cos(term.omega * t) * term.cos_coeff +
                       std::sin(term.omega * t) * term.sin_coeff;
    }
  }
  return SampledSignal(domain, std::move(values), kind);
}

SampledSignal gen_random_trig_polynomial(const Domain& domain, int dim,
                                         int terms, double amplitude,
                                         double max_omega, std::uint64_t seed,
                                         NormKind kind) {
  require(terms >= 1, errc::invalid_input, "need at least one term");
  require(std::isfinite(amplitude) && amplitude > 0.0, errc::invalid_input,
          "amplitude must be positive");
  require(std::isfinite(max_omega) && max_omega > 0.1, errc::invalid_input,
          "max_omega must exceed 0.1");
  Rng rng(seed);
  std::vector<TrigTerm> list;
  list.reserve(terms);
  for (int k = 0; k < terms; ++k) {
    TrigTerm term;
    term.omega = rng.uniform(0.1, max_omega);
    term.cos_coeff = Vector(dim);
    term.sin_coeff = Vector(dim);
    for (int j = 0; j < dim; ++j) {
      term.cos_coeff[j] = rng.uniform(-1.0, 1.0);
      term.sin_coeff[j] = rng.uniform(-1.0, 1.0);
    }
    const double len =
        std::sqrt(term.cos_coeff.squaredNorm() + term.sin_coeff.squaredNorm());
    const double target = amplitude / terms;
    if (len > 0.0) {
      term.cos_coeff *= target / len;
      term.sin_coeff *= target / len;
    }
    list.push_back(std::move(term));
  }
  return gen_trig_polynomial(list, domain, dim, kind);
}

SampledSignal gen_ergodic_noise(const Domain& domain,
                                const std::function<double(double)>& envelope,
                                std::uint64_t seed, int dim, NormKind kind) {
  require(dim >= 1, errc::invalid_input, "dimension must be >= 1");
  require(static_cast<bool>(envelope), errc::invalid_input,
          "envelope callable is empty");
  Rng rng(seed);
  Matrix values(dim, domain.size());
  for (int i = 0; i < domain.size(); ++i) {
    const double t = domain.point(i);
    const double scale = envelope(t);
    require(std::isfinite(scale) && scale >= 0.0, errc::invalid_input,
            "envelope must be finite and nonnegative on the grid");
    for (int j = 0; j < dim; ++j) {
      values(j, i) = scale * rng.uniform(-1.0, 1.0);
    }
  }
  return SampledSignal(domain, std::move(values), kind);
}

SampledSignal gen_ergodic_noise(const WeightSeq& weights,
                                const std::function<double(double)>& envelope,
                                std::uint64_t seed, int dim, NormKind kind) {
  return gen_ergodic_noise(Domain::z_window(weights.n_max()), envelope, seed,
                           dim, kind);
}

SampledSignal gen_alternating_sequence(int n_max, bool ones_on_even) {
  require(n_max >= 0, errc::invalid_input, "n_max must be nonnegative");
  Matrix values = Matrix::Zero(1, 2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    const bool even = (n % 2) == 0;
    if (even == ones_on_even) values(0, n + n_max) = 1.0;
  }
  return SampledSignal(Domain::z_window(n_max), std::move(values),
                       NormKind::euclidean());
}

}  // namespace apergo
