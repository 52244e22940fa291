#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "motifcover/solver.hpp"

namespace motifcover {

struct AnalyzeOptions {
  SolverConfig solver;
  int runs = 1;
};

// Multi-run driver: runs the greedy solver with seeds derived per run and
// keeps the best-Sigma run (ties to the lowest run index).
struct AnalyzeResult {
  SolveResult best;
  std::size_t best_run = 0;
  std::vector<std::map<std::string, std::uint64_t>> run_counts;  // one map per run
};
AnalyzeResult analyze_graph(const Graph& g, const MotifCatalog& catalog,
                            const AnalyzeOptions& options);

struct ReportMeta {
  std::string input_path;
  std::string catalog_source;  // "generated" or a file path
  int catalog_max_size = 0;
  std::string catalog_filter;
  std::size_t catalog_classes = 0;
  std::uint64_t seed = 1;
  int restarts = 5;
  int runs = 1;
  std::string epsilon_mode = "edge-list";
  double epsilon_constant = 0.0;
  int workers = 0;
  bool include_cover = false;
  bool include_timestamp = true;
};

nlohmann::json analysis_report_json(const Graph& g, const MotifCatalog& catalog,
                                    const AnalyzeResult& result, const ReportMeta& meta);
std::string analysis_report_csv(const Graph& g, const MotifCatalog& catalog,
                                const AnalyzeResult& result, const ReportMeta& meta);

// Cover serialization: a JSON array of {motif, vertices, edges}, written in
// the graph's original vertex ids.
nlohmann::json cover_to_json(const Graph& g, const MotifCatalog& catalog, const Cover& cover);

// Parses and validates a cover against the host graph: every instance edge
// must exist, span the listed vertices, and realize the declared motif.
// Returns the catalog spanned by the cover's motifs plus the single edge.
std::pair<MotifCatalog, Cover> cover_from_json(const Graph& g, const nlohmann::json& doc);

// Totals, rows and profile for an externally supplied cover.
nlohmann::json score_report_json(const Graph& g, const MotifCatalog& catalog, const Cover& cover,
                                 const CostModel& cost);

}  // namespace motifcover
