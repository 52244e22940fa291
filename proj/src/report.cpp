#include "motifcover/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "motifcover/rng.hpp"

namespace motifcover {

using nlohmann::json;

AnalyzeResult analyze_graph(const Graph& g, const MotifCatalog& catalog,
                            const AnalyzeOptions& options) {
  if (options.runs < 1) throw ValidationError("runs must be >= 1");
  AnalyzeResult result;
  bool have = false;
  for (int run = 0; run < options.runs; ++run) {
    SolverConfig cfg = options.solver;
    cfg.seed = options.runs == 1 ? options.solver.seed
                                 : mix_seed(options.solver.seed, 0x52554e53ull, run);
    SolveResult sr = greedy_cover(g, catalog, cfg);
    result.run_counts.push_back(sr.cover.summary(g, catalog).counts);
    if (!have || sr.report.sigma_bits < result.best.report.sigma_bits) {
      have = true;
      result.best = std::move(sr);
      result.best_run = static_cast<std::size_t>(run);
    }
  }
  return result;
}

namespace {

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::int64_t to_original(const Graph& g, VertexId v) {
  if (g.original_ids().empty()) return static_cast<std::int64_t>(v);
  return g.original_ids()[v];
}

json rows_json(const InformationReport& rep,
               const std::vector<std::map<std::string, std::uint64_t>>& run_counts) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json r{{"motif", row.motif},
           {"size", row.size},
           {"edges", row.edges},
           {"aut", row.aut},
           {"count", row.count},
           {"entropy_bits", row.entropy_bits},
           {"epsilon_bits", row.epsilon_bits},
           {"log_star_count_bits", row.log_star_count_bits},
           {"c_score", row.c_score},
           {"c_score_normalized", row.c_score_normalized}};
    if (!run_counts.empty()) {
      std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
      for (const auto& counts : run_counts) {
        auto it = counts.find(row.motif);
        std::uint64_t c = it == counts.end() ? 0 : it->second;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      r["count_min"] = lo;
      r["count_max"] = hi;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

json totals_json(const InformationReport& rep) {
  return json{{"sigma_bits", rep.sigma_bits},
              {"eri_bits", rep.eri_bits},
              {"delta_bits", rep.delta_bits},
              {"log_star_n_bits", rep.log_star_n_bits},
              {"compression", rep.eri_bits > 0.0 ? rep.delta_bits / rep.eri_bits : 0.0}};
}

}  // namespace

json analysis_report_json(const Graph& g, const MotifCatalog& catalog,
                          const AnalyzeResult& result, const ReportMeta& meta) {
  const InformationReport& rep = result.best.report;
  json doc;
  doc["tool"] = "motifcover";
  doc["kind"] = "analysis";
  if (meta.include_timestamp) doc["generated_at"] = iso_timestamp();
  doc["input"] = {{"path", meta.input_path},
                  {"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"directed", g.directed()}};
  json cat{{"source", meta.catalog_source}, {"classes", meta.catalog_classes}};
  if (meta.catalog_max_size > 0) cat["max_size"] = meta.catalog_max_size;
  if (!meta.catalog_filter.empty()) cat["filter"] = meta.catalog_filter;
  doc["config"] = {{"catalog", cat},
                   {"seed", meta.seed},
                   {"restarts", meta.restarts},
                   {"runs", meta.runs},
                   {"epsilon_mode", meta.epsilon_mode},
                   {"workers", meta.workers}};
  if (meta.epsilon_mode == "constant") doc["config"]["epsilon_constant"] = meta.epsilon_constant;
  doc["best_run"] = result.best_run;
  doc["totals"] = totals_json(rep);
  doc["motifs"] = rows_json(rep, result.run_counts);
  doc["profile_defined"] = rep.profile_defined;
  json steps = json::array();
  for (const auto& s : result.best.steps)
    steps.push_back(json{{"motif", catalog.at(s.motif_pos).canonical_id},
                         {"instances", s.instances_added},
                         {"new_edges", s.new_edges},
                         {"sigma_per_edge", s.sigma_per_edge},
                         {"partial_sigma_bits", s.partial_sigma_bits}});
  doc["steps"] = std::move(steps);
  if (meta.include_cover) doc["cover"] = cover_to_json(g, catalog, result.best.cover);
  return doc;
}

std::string analysis_report_csv(const Graph& g, const MotifCatalog& catalog,
                                const AnalyzeResult& result, const ReportMeta& meta) {
  (void)catalog;
  const InformationReport& rep = result.best.report;
  std::ostringstream out;
  out << "motif,size,edges,aut,count,count_min,count_max,entropy_bits,epsilon_bits,"
         "c_score,c_score_normalized\n";
  for (const auto& row : rep.rows) {
    std::uint64_t lo = row.count, hi = row.count;
    if (!result.run_counts.empty()) {
      lo = ~std::uint64_t{0};
      hi = 0;
      for (const auto& counts : result.run_counts) {
        auto it = counts.find(row.motif);
        std::uint64_t c = it == counts.end() ? 0 : it->second;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
    }
    // bit totals are displayed rounded to the nearest integer
    out << row.motif << ',' << row.size << ',' << row.edges << ',' << row.aut << ','
        << row.count << ',' << lo << ',' << hi << ','
        << std::llround(row.entropy_bits) << ',' << std::llround(row.epsilon_bits) << ','
        << row.c_score << ',' << row.c_score_normalized << '\n';
  }
  out << "# sigma_bits " << std::llround(rep.sigma_bits) << '\n';
  out << "# eri_bits " << std::llround(rep.eri_bits) << '\n';
  out << "# delta_bits " << std::llround(rep.delta_bits) << '\n';
  out << "# input " << meta.input_path << " vertices " << g.vertex_count() << " edges "
      << g.edge_count() << '\n';
  out << "# seed " << meta.seed << " runs " << meta.runs << " best_run " << result.best_run
      << '\n';
  return out.str();
}

json cover_to_json(const Graph& g, const MotifCatalog& catalog, const Cover& cover) {
  json arr = json::array();
  for (const auto& inst : cover.instances()) {
    json verts = json::array();
    for (VertexId v : inst.vertices) verts.push_back(to_original(g, v));
    json edges = json::array();
    for (EdgeId e : inst.edge_ids)
      edges.push_back(json::array({to_original(g, g.edge(e).a), to_original(g, g.edge(e).b)}));
    arr.push_back(json{{"motif", catalog.at(inst.motif).canonical_id},
                       {"vertices", verts},
                       {"edges", edges}});
  }
  return arr;
}

std::pair<MotifCatalog, Cover> cover_from_json(const Graph& g, const json& doc) {
  if (!doc.is_array()) throw ValidationError("cover file must be a JSON array of instances");

  // map original ids back to internal ids
  std::map<std::int64_t, VertexId> to_internal;
  if (!g.original_ids().empty())
    for (VertexId v = 0; v < g.vertex_count(); ++v) to_internal[g.original_ids()[v]] = v;
  auto internal_of = [&](std::int64_t orig) -> VertexId {
    if (g.original_ids().empty()) {
      if (orig < 0 || orig >= static_cast<std::int64_t>(g.vertex_count()))
        throw ValidationError("cover references vertex " + std::to_string(orig) +
                              " outside the graph");
      return static_cast<VertexId>(orig);
    }
    auto it = to_internal.find(orig);
    if (it == to_internal.end())
      throw ValidationError("cover references vertex " + std::to_string(orig) +
                            " not present in the graph");
    return it->second;
  };

  // catalog spanned by the cover's motifs, plus the single edge
  std::vector<Pattern> patterns;
  for (const auto& item : doc) {
    if (!item.contains("motif")) throw ValidationError("cover instance lacks a motif field");
    patterns.push_back(Pattern::parse(item.at("motif").get<std::string>()));
  }
  {
    Pattern e;
    e.size = 2;
    e.directed = g.directed();
    e.add_edge(0, 1);
    patterns.push_back(e);
  }
  for (const auto& p : patterns)
    if (p.directed != g.directed() )
      throw ValidationError("cover motif directedness does not match the graph: " + p.to_string());
  MotifCatalog catalog = MotifCatalog::from_patterns(g.directed(), patterns);

  Cover cover(g.edge_count(), catalog.size());
  std::size_t item_no = 0;
  for (const auto& item : doc) {
    ++item_no;
    const std::string tag = "cover instance #" + std::to_string(item_no);
    Pattern declared = canonical_form(Pattern::parse(item.at("motif").get<std::string>()));
    auto pos = catalog.position(declared);

    Instance inst;
    inst.motif = static_cast<std::uint32_t>(*pos);
    if (!item.contains("vertices") || !item.contains("edges"))
      throw ValidationError(tag + " needs vertices and edges fields");
    for (const auto& v : item.at("vertices")) inst.vertices.push_back(internal_of(v.get<std::int64_t>()));
    std::sort(inst.vertices.begin(), inst.vertices.end());
    inst.vertices.erase(std::unique(inst.vertices.begin(), inst.vertices.end()),
                        inst.vertices.end());

    for (const auto& e : item.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError(tag + " has a malformed edge");
      VertexId u = internal_of(e.at(0).get<std::int64_t>());
      VertexId v = internal_of(e.at(1).get<std::int64_t>());
      EdgeId id = g.find_edge(u, v);
      if (id == kNoEdge)
        throw ValidationError(tag + " uses edge " + std::to_string(e.at(0).get<std::int64_t>()) +
                              "-" + std::to_string(e.at(1).get<std::int64_t>()) +
                              " which is not in the graph");
      inst.edge_ids.push_back(id);
    }
    std::sort(inst.edge_ids.begin(), inst.edge_ids.end());
    inst.edge_ids.erase(std::unique(inst.edge_ids.begin(), inst.edge_ids.end()),
                        inst.edge_ids.end());

    // the edge set must span the listed vertices and realize the motif
    const int k = static_cast<int>(inst.vertices.size());
    if (k != declared.size)
      throw ValidationError(tag + " lists " + std::to_string(k) + " vertices but its motif has " +
                            std::to_string(static_cast<int>(declared.size)));
    std::vector<std::pair<int, int>> local;
    auto local_of = [&](VertexId v) {
      auto it = std::lower_bound(inst.vertices.begin(), inst.vertices.end(), v);
      if (it == inst.vertices.end() || *it != v)
        throw ValidationError(tag + " has an edge endpoint outside its vertex list");
      return static_cast<int>(it - inst.vertices.begin());
    };
    for (EdgeId e : inst.edge_ids)
      local.emplace_back(local_of(g.edge(e).a), local_of(g.edge(e).b));
    Pattern realized = Pattern::from_edges(k, g.directed(), local);
    if (canonical_form(realized) != declared)
      throw ValidationError(tag + " edge set is not isomorphic to its declared motif " +
                            declared.to_string());
    if (!cover.add(std::move(inst))) throw ValidationError(tag + " duplicates an earlier instance");
  }
  return {std::move(catalog), std::move(cover)};
}

json score_report_json(const Graph& g, const MotifCatalog& catalog, const Cover& cover,
                       const CostModel& cost) {
  InformationReport rep = build_information_report(g, cover, catalog, cost);
  json doc;
  doc["tool"] = "motifcover";
  doc["kind"] = "score";
  doc["input"] = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"directed", g.directed()}};
  doc["totals"] = totals_json(rep);
  doc["motifs"] = rows_json(rep, {});
  doc["profile_defined"] = rep.profile_defined;
  return doc;
}

}  // namespace motifcover
