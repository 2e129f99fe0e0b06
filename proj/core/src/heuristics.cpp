#include "focal/heuristics.hpp"

#include <cmath>
#include <stdexcept>

namespace focal {

GammaEstimate gamma_estimate(std::uint64_t count, std::uint64_t n) {
  if (n == 0 || count > n) throw std::invalid_argument("gamma_estimate needs 0 <= count <= n, n > 0");
  const double gamma = static_cast<double>(count) / static_cast<double>(n);
  return {gamma, std::sqrt(gamma * (1.0 - gamma) / static_cast<double>(n))};
}

namespace {

double log_miss_per_sample(double p, int k) {
  if (p < 2.0 || k < 1) throw std::invalid_argument("need p >= 2 and k >= 1");
  return std::log1p(-std::pow(p, -k));
}

}  // namespace

double mk_probability(double p, int k, double n) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  return -std::expm1(n * log_miss_per_sample(p, k));
}

double mk_miss_probability(double p, int k, double n) {
  if (n < 0) throw std::invalid_argument("sample count must be non-negative");
  return std::exp(n * log_miss_per_sample(p, k));
}

double samples_for_confidence(double p, int k, double confidence) {
  if (!(confidence >= 0.0 && confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in [0, 1)");
  }
  return std::log1p(-confidence) / log_miss_per_sample(p, k);
}

}  // namespace focal
