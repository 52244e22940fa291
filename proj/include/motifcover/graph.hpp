#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "motifcover/errors.hpp"

namespace motifcover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Normalized endpoint pair: ordered (a -> b) for directed graphs, sorted
// (a < b) otherwise. Two EdgeKeys are equal iff they denote the same edge.
struct EdgeKey {
  VertexId a = 0;
  VertexId b = 0;

  static EdgeKey make(VertexId u, VertexId v, bool directed) {
    if (!directed && u > v) std::swap(u, v);
    return {u, v};
  }
  auto operator<=>(const EdgeKey&) const = default;
};

// Simple graph with contiguous vertex ids. Immutable after construction;
// safe to share read-only across threads.
class Graph {
 public:
  // Underlying-undirected neighborhood entry. `fwd` is the edge id of
  // this->nbr (or the undirected edge), `bwd` of nbr->this when directed.
  struct Arc {
    VertexId nbr = 0;
    EdgeId fwd = kNoEdge;
    EdgeId bwd = kNoEdge;
  };

  Graph() = default;

  // Validates endpoints, rejects self-loops, silently collapses duplicates
  // (the collapse count is reported through `duplicates` when given).
  static Graph from_edges(bool directed, VertexId vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::size_t* duplicates = nullptr);

  bool directed() const { return directed_; }
  VertexId vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<EdgeKey>& edges() const { return edges_; }
  const EdgeKey& edge(EdgeId e) const { return edges_[e]; }

  // Edge id of arc u->v (directed) or edge {u,v} (undirected); kNoEdge if absent.
  EdgeId find_edge(VertexId u, VertexId v) const;

  const std::vector<Arc>& adjacency(VertexId v) const { return adj_[v]; }
  std::size_t degree(VertexId v) const { return adj_[v].size(); }

  // Original vertex labels when loading compacted sparse ids; empty when
  // internal ids already match the input.
  const std::vector<std::int64_t>& original_ids() const { return original_ids_; }
  void set_original_ids(std::vector<std::int64_t> ids) { original_ids_ = std::move(ids); }

  bool operator==(const Graph& o) const {
    return directed_ == o.directed_ && n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  bool directed_ = false;
  VertexId n_ = 0;
  std::vector<EdgeKey> edges_;  // sorted
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::int64_t> original_ids_;
};

struct LoadStats {
  std::size_t duplicate_edges = 0;
  std::size_t comment_lines = 0;
  bool had_header = false;
};

// Text edge lists: one "u v" pair per line, '#' starts a comment, optional
// "# vertices <N>" header for graphs with isolated vertices. Without a
// header, ids are compacted to [0,N) in ascending order.
Graph load_edge_list(std::istream& in, bool directed, LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, bool directed, LoadStats* stats = nullptr);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Forgets orientation; mutual arc pairs collapse to one edge. Undirected
// input is returned unchanged.
Graph underlying_undirected(const Graph& g);

}  // namespace motifcover
