#include "motifcover/information.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace motifcover {

double CostModel::epsilon(const MotifClass& m) const {
  switch (epsilon_mode) {
    case EpsilonMode::zero:
      return 0.0;
    case EpsilonMode::constant:
      return epsilon_constant;
    case EpsilonMode::edge_list:
      break;
  }
  if (log_star_variant == LogStarVariant::rissanen) return m.epsilon_bits;
  return edge_list_code_bits(m.size(), m.edge_count(), m.directed(), log_star_variant);
}

long double placements(const MotifClass& m, std::uint64_t n_vertices) {
  const int k = m.size();
  if (n_vertices < static_cast<std::uint64_t>(k))
    throw std::domain_error("placements: host has fewer vertices than the motif");
  long double p = 1.0L;
  for (int i = 0; i < k; ++i) p *= static_cast<long double>(n_vertices - static_cast<std::uint64_t>(i));
  return p / static_cast<long double>(m.aut_size);
}

std::optional<std::uint64_t> exact_placements(const MotifClass& m, std::uint64_t n_vertices) {
  const int k = m.size();
  if (n_vertices < static_cast<std::uint64_t>(k))
    throw std::domain_error("placements: host has fewer vertices than the motif");
  unsigned __int128 p = 1;
  for (int i = 0; i < k; ++i) {
    if (p > (static_cast<unsigned __int128>(1) << 90)) return std::nullopt;
    p *= n_vertices - static_cast<std::uint64_t>(i);
  }
  p /= m.aut_size;
  if (p > static_cast<unsigned __int128>(~std::uint64_t{0})) return std::nullopt;
  return static_cast<std::uint64_t>(p);
}

double log2_placements(const MotifClass& m, std::uint64_t n_vertices) {
  if (auto p = exact_placements(m, n_vertices))
    return std::log2(static_cast<double>(*p));
  double bits = -std::log2(static_cast<double>(m.aut_size));
  for (int i = 0; i < m.size(); ++i)
    bits += std::log2(static_cast<double>(n_vertices - static_cast<std::uint64_t>(i)));
  return bits;
}

double entropy_bits(const MotifClass& m, std::uint64_t count, std::uint64_t n_vertices) {
  if (count == 0) return 0.0;
  if (auto p = exact_placements(m, n_vertices)) {
    if (count > *p) throw std::domain_error("entropy_bits: count exceeds placements");
    if (*p <= kExactBinomialCap) return log2_binomial_exact(*p, count);
    return log2_binomial_float(static_cast<long double>(*p), count);
  }
  return log2_binomial_float(placements(m, n_vertices), count);
}

double entropy_stirling(const MotifClass& m, std::uint64_t count, std::uint64_t n_vertices) {
  if (count < 1) throw std::domain_error("entropy_stirling: count must be >= 1");
  if (m.size() <= 2) throw std::domain_error("entropy_stirling: motif must have > 2 vertices");
  const double n = static_cast<double>(count);
  return n * (static_cast<double>(m.size()) * std::log2(static_cast<double>(n_vertices)) -
              std::log2(static_cast<double>(m.aut_size)) - std::log2(n) + std::log2(std::exp(1.0)));
}

double total_information(const CoverSummary& summary, const MotifCatalog& catalog,
                         const CostModel& cost) {
  double sigma = log_star(summary.n_vertices, cost.log_star_variant);
  for (const auto& [id, n] : summary.counts) {
    if (n == 0) continue;
    auto pos = catalog.position(id);
    if (!pos) throw ValidationError("motif not in catalog: " + id);
    const MotifClass& m = catalog.at(*pos);
    sigma += entropy_bits(m, n, summary.n_vertices) + cost.epsilon(m) +
             log_star(n, cost.log_star_variant);
  }
  return sigma;
}

namespace {

MotifClass single_edge_class(bool directed) {
  Pattern p;
  p.size = 2;
  p.directed = directed;
  p.add_edge(0, 1);
  return make_motif_class(p);
}

}  // namespace

double edge_cover_information(const Graph& g, const CostModel& cost) {
  if (g.edge_count() == 0)
    throw std::domain_error("edge_cover_information: graph has no edges");
  MotifClass edge = single_edge_class(g.directed());
  double sigma = log_star(g.vertex_count(), cost.log_star_variant);
  sigma += entropy_bits(edge, g.edge_count(), g.vertex_count()) + cost.epsilon(edge) +
           log_star(g.edge_count(), cost.log_star_variant);
  return sigma;
}

double delta_sigma(const Graph& g, const CoverSummary& summary, const MotifCatalog& catalog,
                   const CostModel& cost) {
  return edge_cover_information(g, cost) - total_information(summary, catalog, cost);
}

double c_score(const Graph& g, const Cover& cover, const MotifCatalog& catalog,
               std::size_t motif_pos, const CostModel& cost) {
  if (cover.count(motif_pos) == 0) return 0.0;
  const std::size_t edge_pos = catalog.single_edge_position();
  if (motif_pos == edge_pos) return 0.0;

  // dissolve this motif's instances into single-edge subgraphs, merged with
  // the single-edge subgraphs already present (set semantics)
  std::set<EdgeId> edge_pool;
  for (const auto& inst : cover.instances()) {
    if (inst.motif == edge_pos || inst.motif == motif_pos)
      edge_pool.insert(inst.edge_ids.begin(), inst.edge_ids.end());
  }
  CoverSummary replaced = cover.summary(g, catalog);
  replaced.counts.erase(catalog.at(motif_pos).canonical_id);
  const std::string edge_id = catalog.at(edge_pos).canonical_id;
  if (edge_pool.empty())
    replaced.counts.erase(edge_id);
  else
    replaced.counts[edge_id] = edge_pool.size();

  const double sigma = total_information(cover.summary(g, catalog), catalog, cost);
  const double sigma_replaced = total_information(replaced, catalog, cost);
  return sigma_replaced / sigma - 1.0;
}

std::map<std::string, double> significance_profile(const Graph& g, const Cover& cover,
                                                   const MotifCatalog& catalog,
                                                   const CostModel& cost) {
  std::map<std::string, double> scores;
  double sumsq = 0.0;
  for (std::size_t pos = 0; pos < catalog.size(); ++pos) {
    if (cover.count(pos) == 0) continue;
    double c = c_score(g, cover, catalog, pos, cost);
    scores[catalog.at(pos).canonical_id] = c;
    sumsq += c * c;
  }
  if (sumsq <= 0.0)
    throw std::domain_error("significance profile undefined: every c-score is zero");
  const double norm = std::sqrt(sumsq);
  for (auto& [id, c] : scores) c /= norm;
  return scores;
}

InformationReport build_information_report(const Graph& g, const Cover& cover,
                                           const MotifCatalog& catalog, const CostModel& cost) {
  InformationReport rep;
  CoverSummary summary = cover.summary(g, catalog);
  rep.log_star_n_bits = log_star(g.vertex_count(), cost.log_star_variant);
  rep.sigma_bits = total_information(summary, catalog, cost);
  rep.eri_bits = edge_cover_information(g, cost);
  rep.delta_bits = rep.eri_bits - rep.sigma_bits;

  double sumsq = 0.0;
  for (std::size_t pos = 0; pos < catalog.size(); ++pos) {
    const std::uint64_t n = cover.count(pos);
    if (n == 0) continue;
    const MotifClass& m = catalog.at(pos);
    MotifReportRow row;
    row.motif = m.canonical_id;
    row.size = m.size();
    row.edges = m.edge_count();
    row.aut = m.aut_size;
    row.count = n;
    row.entropy_bits = entropy_bits(m, n, g.vertex_count());
    row.epsilon_bits = cost.epsilon(m);
    row.log_star_count_bits = log_star(n, cost.log_star_variant);
    row.c_score = c_score(g, cover, catalog, pos, cost);
    sumsq += row.c_score * row.c_score;
    rep.rows.push_back(std::move(row));
  }
  rep.profile_defined = sumsq > 0.0;
  if (rep.profile_defined) {
    const double norm = std::sqrt(sumsq);
    for (auto& row : rep.rows) row.c_score_normalized = row.c_score / norm;
  }
  return rep;
}

}  // namespace motifcover
