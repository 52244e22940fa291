#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "motifcover/cover.hpp"
#include "motifcover/information.hpp"

namespace motifcover {

struct SolverConfig {
  std::uint64_t seed = 1;
  int restarts_per_step = 5;
  std::uint64_t instance_cap = 10'000'000;  // per-motif materialization cap
  CostModel cost;
  int workers = 0;  // 0 = hardware concurrency
};

// Bits per newly covered edge of a candidate instance set of one motif:
//   sigma = (S(m,|S|) + eps(m) + log*|S|) / |E(S) - E(C)|.
// Throws std::domain_error when the set covers no new edge.
double efficiency(const Graph& g, const MotifCatalog& catalog, std::size_t motif_pos,
                  std::span<const Instance> step_set, const Cover& cover,
                  const CostModel& cost = {});

// One motif's step set: instances pairwise disjoint on currently uncovered
// edges, each containing at least one uncovered edge, chosen by a seeded
// randomized-greedy maximal packing with the sigma-optimal prefix kept.
// Empty result means the motif has no eligible instance.
std::vector<Instance> optimal_instance_set(const Graph& g, const MotifCatalog& catalog,
                                           std::size_t motif_pos, const Cover& cover,
                                           const SolverConfig& config);

struct StepRecord {
  std::size_t motif_pos = 0;
  std::uint64_t instances_added = 0;
  std::uint64_t new_edges = 0;
  double sigma_per_edge = 0.0;     // efficiency of the accepted set
  double partial_sigma_bits = 0.0; // partial-cover total information after the step
};

struct SolveResult {
  Cover cover;
  InformationReport report;
  std::vector<StepRecord> steps;
  double initial_sigma_bits = 0.0;  // ERI: all edges uncovered
};

// Greedy total-information cover construction. The catalog must contain
// the single-edge motif and the graph at least one edge.
SolveResult greedy_cover(const Graph& g, const MotifCatalog& catalog,
                         const SolverConfig& config = {});

// Per-vertex motif/orbit attachments induced by a complete cover.
struct RoleSequence {
  // vertex -> sorted list of ((motif position, orbit index), count)
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint8_t, std::uint32_t>>> attachments;
};
RoleSequence role_sequence(const Cover& cover, const Graph& g, const MotifCatalog& catalog);

}  // namespace motifcover
