#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motifcover/bitcost.hpp"
#include "motifcover/catalog.hpp"
#include "motifcover/cover.hpp"
#include "motifcover/graph.hpp"

namespace motifcover {

// How motif description costs are charged.
struct CostModel {
  enum class EpsilonMode { edge_list, zero, constant };
  EpsilonMode epsilon_mode = EpsilonMode::edge_list;
  double epsilon_constant = 0.0;
  LogStarVariant log_star_variant = LogStarVariant::rissanen;

  double epsilon(const MotifClass& m) const;
};

// Number of distinct placements of motif m on n labeled vertices:
// n! / ((n-|m|)! |Aut(m)|).
long double placements(const MotifClass& m, std::uint64_t n_vertices);
std::optional<std::uint64_t> exact_placements(const MotifClass& m, std::uint64_t n_vertices);
double log2_placements(const MotifClass& m, std::uint64_t n_vertices);

// Entropy of a set of `count` distinct instances: log2 C(P(m,N), count).
double entropy_bits(const MotifClass& m, std::uint64_t count, std::uint64_t n_vertices);

// Stirling approximation of the entropy; diagnostic only, requires
// count >= 1 and |m| > 2.
double entropy_stirling(const MotifClass& m, std::uint64_t count, std::uint64_t n_vertices);

// Total information of a cover summary:
//   log* N + sum_m [ S(m, n_m) + eps(m) + log* n_m ].
double total_information(const CoverSummary& summary, const MotifCatalog& catalog,
                         const CostModel& cost = {});

// Total information of the all-single-edge cover (the ERI benchmark).
double edge_cover_information(const Graph& g, const CostModel& cost = {});

// ERI minus the summary's total information.
double delta_sigma(const Graph& g, const CoverSummary& summary, const MotifCatalog& catalog,
                   const CostModel& cost = {});

// Relative cost of dissolving one motif's instances into single edges:
// Sigma(C - m) / Sigma(C) - 1. Zero for the single-edge motif and for
// motifs absent from the cover.
double c_score(const Graph& g, const Cover& cover, const MotifCatalog& catalog,
               std::size_t motif_pos, const CostModel& cost = {});

// Unit-normalized c-score vector over the cover's motifs, keyed by
// canonical id. Throws std::domain_error when every score is zero.
std::map<std::string, double> significance_profile(const Graph& g, const Cover& cover,
                                                   const MotifCatalog& catalog,
                                                   const CostModel& cost = {});

struct MotifReportRow {
  std::string motif;
  int size = 0;
  int edges = 0;
  std::uint64_t aut = 1;
  std::uint64_t count = 0;
  double entropy_bits = 0.0;
  double epsilon_bits = 0.0;
  double log_star_count_bits = 0.0;
  double c_score = 0.0;
  double c_score_normalized = 0.0;
};

struct InformationReport {
  double sigma_bits = 0.0;
  double eri_bits = 0.0;
  double delta_bits = 0.0;
  double log_star_n_bits = 0.0;
  bool profile_defined = false;
  std::vector<MotifReportRow> rows;  // catalog order, motifs present in the cover
};

InformationReport build_information_report(const Graph& g, const Cover& cover,
                                           const MotifCatalog& catalog,
                                           const CostModel& cost = {});

}  // namespace motifcover
