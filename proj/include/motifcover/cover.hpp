#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "motifcover/enumeration.hpp"

namespace motifcover {

// Motif multiset of a cover: per-class instance counts on a host with
// n_vertices vertices.
struct CoverSummary {
  std::uint64_t n_vertices = 0;
  bool directed = false;
  std::map<std::string, std::uint64_t> counts;  // canonical_id -> n_m
};

// A set of instances together with the edges they cover. Complete when
// every host edge is covered.
class Cover {
 public:
  Cover() = default;
  Cover(std::size_t n_edges, std::size_t n_motifs)
      : covered_(n_edges, 0), counts_(n_motifs, 0) {}

  // set semantics; returns false when an equal instance is already present
  bool add(Instance inst);

  const std::vector<Instance>& instances() const { return instances_; }
  const CoveredFlags& covered() const { return covered_; }
  std::size_t covered_count() const { return covered_count_; }
  bool complete() const { return covered_count_ == covered_.size(); }
  std::vector<EdgeId> uncovered_edges() const;

  const std::vector<std::uint64_t>& counts_by_position() const { return counts_; }
  std::uint64_t count(std::size_t motif_pos) const { return counts_[motif_pos]; }

  CoverSummary summary(const Graph& g, const MotifCatalog& catalog) const;

 private:
  std::vector<Instance> instances_;
  CoveredFlags covered_;
  std::size_t covered_count_ = 0;
  std::vector<std::uint64_t> counts_;
  std::multimap<std::uint64_t, std::size_t> by_hash_;  // instance hash -> index
};

}  // namespace motifcover
