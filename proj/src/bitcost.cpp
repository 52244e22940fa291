#include "motifcover/bitcost.hpp"

#include <gmp.h>

#include <cmath>
#include <stdexcept>

namespace motifcover {

double log_star(std::uint64_t n, LogStarVariant variant) {
  if (n == 0) throw std::domain_error("log_star: argument must be positive");
  double total = variant == LogStarVariant::rissanen ? std::log2(kLogStarC0) : 0.0;
  double t = std::log2(static_cast<double>(n));
  while (t > 0.0) {
    total += t;
    t = std::log2(t);
  }
  return total;
}

double log2_binomial_exact(std::uint64_t p, std::uint64_t n) {
  if (n > p) throw std::domain_error("log2_binomial_exact: n > p");
  if (p > 16 * kExactBinomialCap)
    throw std::domain_error("log2_binomial_exact: p too large for the exact path");
  if (n == 0 || n == p) return 0.0;
  mpz_t b;
  mpz_init(b);
  mpz_bin_uiui(b, static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, b);
  mpz_clear(b);
  return std::log2(mant) + static_cast<double>(exp2);
}

double log2_binomial_float(long double p, std::uint64_t n) {
  if (n == 0) return 0.0;
  if (static_cast<long double>(n) > p + 0.5L)
    throw std::domain_error("log2_binomial_float: n > p");

  // binomial symmetry keeps the summation short when p is integer-exact
  std::uint64_t k = n;
  if (p < 0x1p62L) {
    std::uint64_t pi = static_cast<std::uint64_t>(p + 0.5L);
    if (n > pi - n) k = pi - n;
  }
  if (k == 0) return 0.0;

  static const long double kLn2 = std::log(2.0L);
  if (k <= (1u << 21)) {
    // sum of log2((p - i) / (i + 1)); all terms nonnegative for k <= p/2
    long double acc = 0.0L, comp = 0.0L;
    for (std::uint64_t i = 0; i < k; ++i) {
      long double term = std::log((p - static_cast<long double>(i)) /
                                  static_cast<long double>(i + 1)) / kLn2;
      long double y = term - comp;
      long double t = acc + y;
      comp = (t - acc) - y;
      acc = t;
    }
    return static_cast<double>(acc);
  }
  long double kl = static_cast<long double>(k);
  long double v = std::lgamma(p + 1.0L) - std::lgamma(kl + 1.0L) - std::lgamma(p - kl + 1.0L);
  return static_cast<double>(v / kLn2);
}

double log2_binomial(long double p, std::uint64_t n) {
  if (p < static_cast<long double>(kExactBinomialCap) + 0.5L) {
    std::uint64_t pi = static_cast<std::uint64_t>(p + 0.5L);
    return log2_binomial_exact(pi, n);
  }
  return log2_binomial_float(p, n);
}

double edge_list_code_bits(int vertices, int edges, bool directed, LogStarVariant variant) {
  if (vertices < 2 || edges < 1)
    throw std::domain_error("edge_list_code_bits: need >= 2 vertices and >= 1 edge");
  const int slots = directed ? vertices * (vertices - 1) : vertices * (vertices - 1) / 2;
  if (edges > slots) throw std::domain_error("edge_list_code_bits: too many edges");
  return log_star(static_cast<std::uint64_t>(vertices), variant) +
         log_star(static_cast<std::uint64_t>(edges), variant) +
         log2_binomial_exact(static_cast<std::uint64_t>(slots),
                             static_cast<std::uint64_t>(edges));
}

}  // namespace motifcover
