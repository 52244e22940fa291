#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "motifcover/catalog.hpp"
#include "motifcover/graph.hpp"

namespace motifcover {

// One concrete subgraph of a host graph: its edge set, the vertices it
// spans, and the motif class it realizes. Instances are non-induced edge
// subsets; two instances are equal iff their motifs and edge sets agree.
struct Instance {
  std::uint32_t motif = 0;  // catalog position
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edge_ids;    // sorted
  bool operator==(const Instance& o) const {
    return motif == o.motif && edge_ids == o.edge_ids;
  }
};

// covered-edge flags, one byte per EdgeId
using CoveredFlags = std::vector<std::uint8_t>;

using VertexSetVisitor = std::function<void(std::span<const VertexId>)>;
using InstanceVisitor = std::function<void(std::size_t motif_pos, std::span<const VertexId> vertices,
                                           std::span<const EdgeId> edges)>;

// Every vertex set of size exactly k whose induced underlying-undirected
// subgraph is connected, each exactly once (ESU extension from anchored
// roots). Visited sets are sorted ascending.
void enumerate_connected_vertex_sets(const Graph& g, int k, const VertexSetVisitor& visit);

// Prebuilt per-size class tables for a catalog.
struct EnumContext {
  const MotifCatalog* catalog = nullptr;
  int max_size = 0;
  std::vector<ClassTable> tables;  // indexed by size, [0..max_size]
};
EnumContext make_enum_context(const MotifCatalog& catalog, std::int64_t only = -1);

// Streams every instance of every catalog motif, each exactly once. When
// `covered` is given, instances whose edges are all covered are suppressed.
// Enumeration order is deterministic. `root_begin/root_end` restrict ESU
// roots for parallel partitioning.
void for_each_instance(const Graph& g, const EnumContext& ctx, const CoveredFlags* covered,
                       const InstanceVisitor& visit);
void for_each_instance(const Graph& g, const EnumContext& ctx, const CoveredFlags* covered,
                       VertexId root_begin, VertexId root_end, const InstanceVisitor& visit);

// Materialized instance stream for one motif.
std::vector<Instance> find_instances(const Graph& g, const MotifCatalog& catalog,
                                     std::size_t motif_pos, const CoveredFlags* covered = nullptr);

std::uint64_t count_instances(const Graph& g, const MotifCatalog& catalog, std::size_t motif_pos);

}  // namespace motifcover
