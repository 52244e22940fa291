#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "motifcover/cover.hpp"

namespace motifcover {

// Plan entry: a motif together with either an exact instance count
// (uniform-cover realization) or a density constant (clustered
// random-graph sampling).
struct UniformCoverSpec {
  VertexId n_vertices = 0;
  bool directed = false;
  std::vector<std::pair<Pattern, std::uint64_t>> plan;  // motif -> exact count
  std::uint64_t seed = 1;
};

struct BjrSpec {
  VertexId n_vertices = 0;
  bool directed = false;
  std::vector<std::pair<Pattern, double>> plan;  // motif -> density k_m
  std::uint64_t seed = 1;
};

struct PlantedResult {
  Graph graph;
  MotifCatalog catalog;  // classes of the planted motifs (positions used by `planted`)
  Cover planted;         // complete cover of `graph` by construction
  std::uint64_t collisions = 0;  // parallel-edge merges across placements
};

// Samples, for each motif, the requested number of distinct placements
// uniformly at random (uniform vertex tuple modulo automorphisms, rejection
// on duplicates) and returns the union graph plus the planted cover.
PlantedResult realize_uniform_cover(const UniformCoverSpec& spec);

// Homogeneous clustered random graph: every distinct placement of motif m
// appears independently with probability k_m |Aut(m)| / N^(|m|-1). Sampled
// as a binomial placement count followed by distinct-placement sampling.
PlantedResult generate_bjr(const BjrSpec& spec);

}  // namespace motifcover
