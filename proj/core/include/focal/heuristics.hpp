#pragma once

#include <cstdint>

namespace focal {

struct GammaEstimate {
  double gamma = 0.0;
  /// Binomial standard error sqrt(gamma (1 - gamma) / N).
  double standard_error = 0.0;
};

/// Fraction of points found on a variety and its binomial error.
/// Requires 0 <= count <= n and n > 0.
GammaEstimate gamma_estimate(std::uint64_t count, std::uint64_t n);

/// 1 - (1 - p^-k)^n: chance that n random points hit a codimension-k
/// component with a single geometric component, computed via log1p/expm1.
double mk_probability(double p, int k, double n);

/// (1 - p^-k)^n, the complement of mk_probability without cancellation.
double mk_miss_probability(double p, int k, double n);

/// Smallest real n with mk_probability(p, k, n) >= confidence, 0 <= confidence < 1.
double samples_for_confidence(double p, int k, double confidence);

}  // namespace focal
