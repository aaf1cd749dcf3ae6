#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apergo/measures.hpp"
#include "apergo/signal.hpp"

namespace apergo {

// One frequency of a trigonometric polynomial: cos_coeff * cos(omega t) +
// sin_coeff * sin(omega t), coefficients in R^d.
struct TrigTerm {
  double omega = 0.0;
  Vector cos_coeff;
  Vector sin_coeff;
};

// Samples the sum of the terms on the grid.  An empty term list yields the
// zero signal of the given dimension.
SampledSignal gen_trig_polynomial(const std::vector<TrigTerm>& terms,
                                  const Domain& domain, int dim,
                                  NormKind kind = NormKind::euclidean());

// Seeded random trig polynomial with `terms` frequencies drawn from
// [0.1, max_omega] and coefficients of euclidean norm <= amplitude.
SampledSignal gen_random_trig_polynomial(const Domain& domain, int dim,
                                         int terms, double amplitude,
                                         double max_omega, std::uint64_t seed,
                                         NormKind kind = NormKind::euclidean());

// Seeded noise with coordinates uniform in [-1, 1] scaled by envelope(t).
// The envelope must be nonnegative on the grid.
SampledSignal gen_ergodic_noise(const Domain& domain,
                                const std::function<double(double)>& envelope,
                                std::uint64_t seed, int dim = 1,
                                NormKind kind = NormKind::euclidean());

// Convenience overload placing the noise on the weight window.
SampledSignal gen_ergodic_noise(const WeightSeq& weights,
                                const std::function<double(double)>& envelope,
                                std::uint64_t seed, int dim = 1,
                                NormKind kind = NormKind::euclidean());

// The scalar sequence that is 1 on even indices and 0 on odd indices (or
// mirrored), on the window [-n_max, n_max].  Pairs with
// WeightSeq::alternating to weights that vanish exactly on its support.
SampledSignal gen_alternating_sequence(int n_max, bool ones_on_even = true);

}  // namespace apergo
