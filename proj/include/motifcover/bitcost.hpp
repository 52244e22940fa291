#pragma once

#include <cstdint>

namespace motifcover {

enum class LogStarVariant {
  rissanen,  // log2(c0) + positive iterated-log terms, c0 = 2.865064
  plain      // positive iterated-log terms only
};

inline constexpr double kLogStarC0 = 2.865064;

// Placement counts up to this bound use the exact big-integer binomial.
inline constexpr std::uint64_t kExactBinomialCap = 1'000'000;

// Universal code length for a positive integer, in bits.
double log_star(std::uint64_t n, LogStarVariant variant = LogStarVariant::rissanen);

// log2 of binomial(p, n) via exact big-integer arithmetic. Requires p <= a
// small multiple of kExactBinomialCap; intended for the p <= 10^6 regime.
double log2_binomial_exact(std::uint64_t p, std::uint64_t n);

// log2 of binomial(p, n) in floating point: compensated log-sums for small
// n, log-gamma otherwise. p may exceed integer range.
double log2_binomial_float(long double p, std::uint64_t n);

// Dispatching evaluator: exact path when p fits under kExactBinomialCap,
// floating path otherwise.
double log2_binomial(long double p, std::uint64_t n);

// Edge-list code length of a motif with `vertices` labeled vertices and
// `edges` edges: log*(v) + log*(e) + log2 C(slots, e).
double edge_list_code_bits(int vertices, int edges, bool directed,
                           LogStarVariant variant = LogStarVariant::rissanen);

}  // namespace motifcover
