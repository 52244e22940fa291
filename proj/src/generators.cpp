#include "motifcover/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "motifcover/information.hpp"
#include "motifcover/rng.hpp"

namespace motifcover {

namespace {

struct Placement {
  std::size_t motif_pos;
  std::vector<EdgeKey> edges;  // sorted host edge keys
};

// Uniform placement of `m` on the host: a uniform injective vertex tuple
// maps canonical labels onto hosts; each distinct placement corresponds to
// exactly |Aut(m)| tuples.
std::vector<EdgeKey> sample_placement(const MotifClass& m, VertexId n, bool directed, Rng& rng) {
  const int k = m.size();
  std::array<VertexId, Pattern::kMaxSize> tuple{};
  for (int i = 0; i < k; ++i) {
    VertexId v;
    bool fresh;
    do {
      v = static_cast<VertexId>(rng.below(n));
      fresh = true;
      for (int j = 0; j < i; ++j) fresh &= tuple[j] != v;
    } while (!fresh);
    tuple[i] = v;
  }
  std::vector<EdgeKey> edges;
  edges.reserve(static_cast<std::size_t>(m.edge_count()));
  for (auto [a, b] : m.canonical.edge_list())
    edges.push_back(EdgeKey::make(tuple[a], tuple[b], directed));
  std::sort(edges.begin(), edges.end());
  return edges;
}

void sample_distinct_placements(const MotifClass& m, std::size_t motif_pos, VertexId n,
                                bool directed, std::uint64_t count, Rng& rng,
                                std::vector<Placement>& out) {
  if (count == 0) return;
  if (n < static_cast<VertexId>(m.size()))
    throw InfeasibleSpecError("motif " + m.canonical_id + " does not fit on " +
                              std::to_string(n) + " vertices");
  if (auto p = exact_placements(m, n); p && count > *p)
    throw InfeasibleSpecError("requested " + std::to_string(count) + " instances of " +
                              m.canonical_id + " but only " + std::to_string(*p) +
                              " distinct placements exist");
  std::set<std::vector<EdgeKey>> seen;
  std::uint64_t budget = 1000 + 100 * count;
  std::uint64_t drawn = 0;
  while (drawn < count) {
    if (budget-- == 0)
      throw InfeasibleSpecError("rejection budget exceeded while sampling distinct placements of " +
                                m.canonical_id + "; use a larger vertex count");
    auto edges = sample_placement(m, n, directed, rng);
    if (!seen.insert(edges).second) continue;
    out.push_back(Placement{motif_pos, edges});
    ++drawn;
  }
}

PlantedResult assemble(VertexId n, bool directed, const MotifCatalog& catalog,
                       std::vector<Placement> placements) {
  PlantedResult result;
  result.catalog = catalog;

  std::vector<std::pair<VertexId, VertexId>> union_edges;
  std::size_t total_mentions = 0;
  for (const auto& pl : placements) {
    total_mentions += pl.edges.size();
    for (const auto& e : pl.edges) union_edges.emplace_back(e.a, e.b);
  }
  std::size_t dup = 0;
  result.graph = Graph::from_edges(directed, n, union_edges, &dup);
  result.collisions = dup;
  (void)total_mentions;

  result.planted = Cover(result.graph.edge_count(), catalog.size());
  for (const auto& pl : placements) {
    Instance inst;
    inst.motif = static_cast<std::uint32_t>(pl.motif_pos);
    inst.edge_ids.reserve(pl.edges.size());
    std::vector<VertexId> verts;
    for (const auto& e : pl.edges) {
      EdgeId id = result.graph.find_edge(e.a, e.b);
      inst.edge_ids.push_back(id);
      verts.push_back(e.a);
      verts.push_back(e.b);
    }
    std::sort(inst.edge_ids.begin(), inst.edge_ids.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    inst.vertices = std::move(verts);
    result.planted.add(std::move(inst));
  }
  return result;
}

MotifCatalog catalog_of(bool directed, const std::vector<Pattern>& patterns) {
  return MotifCatalog::from_patterns(directed, patterns);
}

}  // namespace

PlantedResult realize_uniform_cover(const UniformCoverSpec& spec) {
  if (spec.n_vertices == 0) throw InfeasibleSpecError("vertex count must be positive");
  std::vector<Pattern> patterns;
  for (const auto& [p, cnt] : spec.plan) patterns.push_back(p);
  MotifCatalog catalog = catalog_of(spec.directed, patterns);

  // merge duplicate plan entries per class
  std::vector<std::uint64_t> counts(catalog.size(), 0);
  for (const auto& [p, cnt] : spec.plan) {
    auto pos = catalog.position(canonical_form(p));
    counts[*pos] += cnt;
  }

  Rng rng(mix_seed(spec.seed, 0xC0FFEEull));
  std::vector<Placement> sampled;
  for (std::size_t pos = 0; pos < catalog.size(); ++pos)
    sample_distinct_placements(catalog.at(pos), pos, spec.n_vertices, spec.directed, counts[pos],
                               rng, sampled);
  return assemble(spec.n_vertices, spec.directed, catalog, std::move(sampled));
}

PlantedResult generate_bjr(const BjrSpec& spec) {
  if (spec.n_vertices == 0) throw InfeasibleSpecError("vertex count must be positive");
  std::vector<Pattern> patterns;
  for (const auto& [p, k] : spec.plan) patterns.push_back(p);
  MotifCatalog catalog = catalog_of(spec.directed, patterns);

  std::vector<double> density(catalog.size(), 0.0);
  for (const auto& [p, k] : spec.plan) {
    if (k < 0.0) throw InfeasibleSpecError("motif density must be nonnegative");
    auto pos = catalog.position(canonical_form(p));
    density[*pos] += k;
  }

  Rng rng(mix_seed(spec.seed, 0xB14ull));
  std::vector<Placement> sampled;
  for (std::size_t pos = 0; pos < catalog.size(); ++pos) {
    if (density[pos] == 0.0) continue;
    const MotifClass& m = catalog.at(pos);
    if (spec.n_vertices < static_cast<VertexId>(m.size()))
      throw InfeasibleSpecError("motif " + m.canonical_id + " does not fit on " +
                                std::to_string(spec.n_vertices) + " vertices");
    const long double p_add =
        static_cast<long double>(density[pos]) * static_cast<long double>(m.aut_size) /
        std::pow(static_cast<long double>(spec.n_vertices), static_cast<long double>(m.size() - 1));
    if (p_add > 1.0L)
      throw InfeasibleSpecError("density of " + m.canonical_id +
                                " exceeds one placement probability; lower the density");
    const long double trials = placements(m, spec.n_vertices);
    const std::uint64_t cnt = rng.binomial(trials, p_add);
    sample_distinct_placements(m, pos, spec.n_vertices, spec.directed, cnt, rng, sampled);
  }
  return assemble(spec.n_vertices, spec.directed, catalog, std::move(sampled));
}

}  // namespace motifcover
