#include "motifcover/rng.hpp"

#include <cmath>

#include "motifcover/errors.hpp"

namespace motifcover {

std::uint64_t Rng::poisson(double lambda) {
  if (lambda <= 0.0) return 0;
  if (lambda < 30.0) {
    // Knuth: multiply uniforms until the product drops below e^-lambda
    const double l = std::exp(-lambda);
    std::uint64_t k = 0;
    double prod = uniform01();
    while (prod > l) {
      ++k;
      prod *= uniform01();
    }
    return k;
  }
  // Hoermann's PTRS transformed rejection
  const double b = 0.931 + 2.53 * std::sqrt(lambda);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_lambda = std::log(lambda);
  for (;;) {
    double u = uniform01() - 0.5;
    double v = uniform01();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_lambda - lambda - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

std::uint64_t Rng::binomial(long double trials, long double p) {
  if (trials <= 0.0L || p <= 0.0L) return 0;
  if (p >= 1.0L) {
    if (trials > 0x1p62L) throw InfeasibleSpecError("binomial: certain-success draw with huge trial count");
    return static_cast<std::uint64_t>(trials + 0.5L);
  }
  if (trials <= static_cast<long double>(1u << 25)) {
    const std::uint64_t t = static_cast<std::uint64_t>(trials + 0.5L);
    const double pd = static_cast<double>(p);
    std::uint64_t k = 0;
    for (std::uint64_t i = 0; i < t; ++i) k += bernoulli(pd) ? 1 : 0;
    return k;
  }
  // trials is huge and p small; by Barbour-Hall the Poisson limit is within
  // total variation <= p of the binomial
  if (p > 0.01L)
    throw InfeasibleSpecError("binomial: density too high for the sparse sampling regime; lower the density or the motif size");
  return poisson(static_cast<double>(trials * p));
}

}  // namespace motifcover
