#include "motifcover/cover.hpp"

#include <algorithm>

#include "motifcover/rng.hpp"

namespace motifcover {

namespace {
std::uint64_t instance_hash(const Instance& inst) {
  std::uint64_t h = hash64(inst.motif + 0x51ed27f1ull);
  for (EdgeId e : inst.edge_ids) h = hash64(h ^ (e + 0x9e3779b97f4a7c15ull));
  return h;
}
}  // namespace

bool Cover::add(Instance inst) {
  const std::uint64_t h = instance_hash(inst);
  auto [lo, hi] = by_hash_.equal_range(h);
  for (auto it = lo; it != hi; ++it)
    if (instances_[it->second] == inst) return false;
  for (EdgeId e : inst.edge_ids) {
    if (!covered_[e]) {
      covered_[e] = 1;
      ++covered_count_;
    }
  }
  counts_[inst.motif] += 1;
  by_hash_.emplace(h, instances_.size());
  instances_.push_back(std::move(inst));
  return true;
}

std::vector<EdgeId> Cover::uncovered_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < covered_.size(); ++e)
    if (!covered_[e]) out.push_back(e);
  return out;
}

CoverSummary Cover::summary(const Graph& g, const MotifCatalog& catalog) const {
  CoverSummary s;
  s.n_vertices = g.vertex_count();
  s.directed = g.directed();
  for (std::size_t pos = 0; pos < counts_.size(); ++pos)
    if (counts_[pos] > 0) s.counts[catalog.at(pos).canonical_id] = counts_[pos];
  return s;
}

}  // namespace motifcover
