#include "motifcover/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "motifcover/generators.hpp"
#include "motifcover/report.hpp"

namespace motifcover {

namespace {

int env_workers() {
  const char* env = std::getenv("MOTIFCOVER_WORKERS");
  if (!env || !*env) return 0;
  int w = 0;
  auto r = std::from_chars(env, env + std::string_view(env).size(), w);
  if (r.ec != std::errc{} || w < 0) return 0;
  return w;
}

CostModel parse_epsilon(const std::string& text, std::string& mode_name, double& constant) {
  CostModel cost;
  if (text == "edge-list") {
    cost.epsilon_mode = CostModel::EpsilonMode::edge_list;
    mode_name = "edge-list";
  } else if (text == "zero") {
    cost.epsilon_mode = CostModel::EpsilonMode::zero;
    mode_name = "zero";
  } else if (text.rfind("const:", 0) == 0) {
    cost.epsilon_mode = CostModel::EpsilonMode::constant;
    cost.epsilon_constant = std::stod(text.substr(6));
    if (cost.epsilon_constant < 0.0) throw ValidationError("epsilon constant must be nonnegative");
    mode_name = "constant";
    constant = cost.epsilon_constant;
  } else {
    throw CLI::ValidationError("--epsilon", "expected edge-list, zero or const:<bits>");
  }
  return cost;
}

Pattern parse_motif_name(const std::string& name, bool directed) {
  if (name.find('-') != std::string::npos || name.find('>') != std::string::npos) {
    Pattern p = Pattern::parse(name);
    if (p.directed != directed)
      throw ValidationError("motif " + name + " does not match the requested directedness");
    return canonical_form(p);
  }
  return pattern_from_alias(name, directed);
}

// "triangle=50,star5=100,edge=200"; canonical edge-list names may contain
// commas, so entries are terminated by the token carrying '='.
std::vector<std::pair<std::string, std::string>> parse_plant(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      current += current.empty() ? tok : "," + tok;
      continue;
    }
    std::string name = tok.substr(0, eq);
    if (!current.empty()) name = current + "," + name;
    current.clear();
    entries.emplace_back(name, tok.substr(eq + 1));
  }
  if (!current.empty()) throw ValidationError("trailing motif name without a value: " + current);
  if (entries.empty()) throw ValidationError("empty plant spec");
  return entries;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

void emit_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

struct CatalogArgs {
  bool directed = false;
  int max_size = 0;
  std::string filter = "connected";
  std::string out;
};

int run_catalog(const CatalogArgs& a) {
  CatalogFilter filter =
      a.filter == "biconnected" ? CatalogFilter::biconnected : CatalogFilter::connected;
  MotifCatalog cat = MotifCatalog::generate(a.max_size, a.directed, filter);
  cat.save_file(a.out);
  std::cout << cat.size() << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string graph_path;
  bool directed = false;
  std::string candidates;
  int max_size = 0;
  bool biconnected_only = false;
  std::uint64_t seed = 1;
  int restarts = 5;
  int runs = 1;
  std::string epsilon = "edge-list";
  std::string emit_cover;
  std::string format = "json";
  std::string out;
  int workers = -1;  // -1: use env or auto
};

int run_analyze(const AnalyzeArgs& a) {
  Graph g = load_edge_list_file(a.graph_path, a.directed);
  if (g.edge_count() == 0) throw ValidationError("graph has no edges; nothing to analyze");

  ReportMeta meta;
  meta.input_path = a.graph_path;
  MotifCatalog catalog;
  if (!a.candidates.empty()) {
    catalog = MotifCatalog::load_file(a.candidates);
    if (catalog.directed() != a.directed)
      throw ValidationError("candidates file directedness does not match --directed");
    meta.catalog_source = a.candidates;
  } else {
    catalog = MotifCatalog::generate(
        a.max_size, a.directed,
        a.biconnected_only ? CatalogFilter::biconnected : CatalogFilter::connected);
    meta.catalog_source = "generated";
    meta.catalog_max_size = a.max_size;
    meta.catalog_filter = a.biconnected_only ? "biconnected" : "connected";
  }
  if (!catalog.has_single_edge()) {
    std::cerr << "warning: candidate set lacks the single-edge motif; injecting it\n";
    catalog = catalog.with_single_edge();
  }
  meta.catalog_classes = catalog.size();

  AnalyzeOptions opts;
  opts.runs = a.runs;
  opts.solver.seed = a.seed;
  opts.solver.restarts_per_step = a.restarts;
  opts.solver.cost = parse_epsilon(a.epsilon, meta.epsilon_mode, meta.epsilon_constant);
  opts.solver.workers = a.workers >= 0 ? a.workers : env_workers();
  meta.seed = a.seed;
  meta.restarts = a.restarts;
  meta.runs = a.runs;
  meta.workers = opts.solver.workers;
  meta.include_cover = !a.emit_cover.empty();

  AnalyzeResult result = analyze_graph(g, catalog, opts);

  if (!a.emit_cover.empty())
    write_text_file(a.emit_cover, cover_to_json(g, catalog, result.best.cover).dump(2) + "\n");

  if (a.format == "csv") {
    emit_output(a.out, analysis_report_csv(g, catalog, result, meta));
  } else {
    emit_output(a.out, analysis_report_json(g, catalog, result, meta).dump(2) + "\n");
  }
  return 0;
}

struct GenerateArgs {
  std::string model = "uniform";
  std::uint64_t n = 0;
  bool directed = false;
  std::string plant;
  std::uint64_t seed = 1;
  std::string out_graph;
  std::string out_cover;
};

int run_generate(const GenerateArgs& a) {
  auto entries = parse_plant(a.plant);
  PlantedResult result;
  if (a.model == "uniform") {
    UniformCoverSpec spec;
    spec.n_vertices = static_cast<VertexId>(a.n);
    spec.directed = a.directed;
    spec.seed = a.seed;
    for (const auto& [name, value] : entries) {
      std::uint64_t count = 0;
      auto r = std::from_chars(value.data(), value.data() + value.size(), count);
      if (r.ec != std::errc{} || r.ptr != value.data() + value.size())
        throw ValidationError("uniform counts must be nonnegative integers: " + name + "=" + value);
      if (count == 0) throw ValidationError("void spec: " + name + "=0");
      spec.plan.emplace_back(parse_motif_name(name, a.directed), count);
    }
    result = realize_uniform_cover(spec);
  } else {
    BjrSpec spec;
    spec.n_vertices = static_cast<VertexId>(a.n);
    spec.directed = a.directed;
    spec.seed = a.seed;
    for (const auto& [name, value] : entries) {
      double k = 0.0;
      try {
        k = std::stod(value);
      } catch (const std::exception&) {
        throw ValidationError("bad density value: " + name + "=" + value);
      }
      if (k <= 0.0) throw ValidationError("void spec: " + name + "=" + value);
      spec.plan.emplace_back(parse_motif_name(name, a.directed), k);
    }
    result = generate_bjr(spec);
  }

  write_edge_list_file(result.graph, a.out_graph);
  if (!a.out_cover.empty())
    write_text_file(a.out_cover,
                    cover_to_json(result.graph, result.catalog, result.planted).dump(2) + "\n");
  std::cout << "vertices=" << result.graph.vertex_count() << " edges=" << result.graph.edge_count()
            << " instances=" << result.planted.instances().size()
            << " collisions=" << result.collisions << "\n";
  return 0;
}

struct ScoreArgs {
  std::string graph_path;
  std::string cover_path;
  bool directed = false;
  std::string epsilon = "edge-list";
  std::string out;
};

int run_score(const ScoreArgs& a) {
  Graph g = load_edge_list_file(a.graph_path, a.directed);
  std::ifstream in(a.cover_path);
  if (!in) throw ValidationError("cannot open cover file: " + a.cover_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad cover JSON: ") + e.what());
  }
  auto [catalog, cover] = cover_from_json(g, doc);
  if (!cover.complete()) {
    auto uncovered = cover.uncovered_edges();
    std::string msg = "cover is incomplete; " + std::to_string(uncovered.size()) +
                      " uncovered edge(s):";
    std::size_t shown = 0;
    for (EdgeId e : uncovered) {
      if (shown++ == 20) {
        msg += " ...";
        break;
      }
      const auto& k = g.edge(e);
      msg += " (" + std::to_string(k.a) + "," + std::to_string(k.b) + ")";
    }
    throw ValidationError(msg);
  }
  std::string mode;
  double c = 0.0;
  CostModel cost = parse_epsilon(a.epsilon, mode, c);
  emit_output(a.out, score_report_json(g, catalog, cover, cost).dump(2) + "\n");
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"network motif analysis via minimum-total-information subgraph covers"};
  app.require_subcommand(1);

  CatalogArgs cat;
  auto* cat_cmd = app.add_subcommand("catalog", "enumerate motif isomorphism classes");
  cat_cmd->add_flag("--directed", cat.directed, "directed motifs");
  cat_cmd->add_option("--max-size", cat.max_size, "largest motif vertex count")->required();
  cat_cmd->add_option("--filter", cat.filter, "connected|biconnected")
      ->check(CLI::IsMember({"connected", "biconnected"}));
  cat_cmd->add_option("--out", cat.out, "catalog file to write")->required();

  AnalyzeArgs an;
  auto* an_cmd = app.add_subcommand("analyze", "greedy minimum-information cover of a graph");
  an_cmd->add_option("graph", an.graph_path, "edge list file")->required();
  an_cmd->add_flag("--directed", an.directed, "treat the graph as directed");
  auto* cand_opt = an_cmd->add_option("--candidates", an.candidates, "catalog file of candidate motifs");
  auto* size_opt = an_cmd->add_option("--max-size", an.max_size, "generate candidates up to this size");
  cand_opt->excludes(size_opt);
  an_cmd->add_flag("--biconnected-only", an.biconnected_only, "restrict generated candidates to biconnected motifs")
      ->needs(size_opt);
  an_cmd->add_option("--seed", an.seed, "solver seed");
  an_cmd->add_option("--restarts", an.restarts, "instance-set restarts per step")
      ->check(CLI::PositiveNumber);
  an_cmd->add_option("--runs", an.runs, "independent solver runs")->check(CLI::PositiveNumber);
  an_cmd->add_option("--epsilon", an.epsilon, "edge-list|zero|const:<bits>");
  an_cmd->add_option("--emit-cover", an.emit_cover, "write the best cover as JSON");
  an_cmd->add_option("--format", an.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  an_cmd->add_option("--out", an.out, "report file (default stdout)");
  an_cmd->add_option("--workers", an.workers, "worker threads (0 = auto)");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "sample synthetic graphs with planted covers");
  gen_cmd->add_option("--model", gen.model, "uniform|bjr")
      ->check(CLI::IsMember({"uniform", "bjr"}));
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_flag("--directed", gen.directed, "directed motifs");
  gen_cmd->add_option("--plant", gen.plant, "motif=count (uniform) or motif=density (bjr) list")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--out-graph", gen.out_graph, "edge list to write")->required();
  gen_cmd->add_option("--out-cover", gen.out_cover, "planted cover JSON to write");

  ScoreArgs sc;
  auto* sc_cmd = app.add_subcommand("score", "recompute information totals for a given cover");
  sc_cmd->add_option("graph", sc.graph_path, "edge list file")->required();
  sc_cmd->add_option("cover", sc.cover_path, "cover JSON file")->required();
  sc_cmd->add_flag("--directed", sc.directed, "treat the graph as directed");
  sc_cmd->add_option("--epsilon", sc.epsilon, "edge-list|zero|const:<bits>");
  sc_cmd->add_option("--out", sc.out, "report file (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("motifcover");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (cat_cmd->parsed()) return run_catalog(cat);
    if (an_cmd->parsed()) {
      if (an.candidates.empty() && an.max_size == 0)
        throw CLI::RequiredError("--candidates or --max-size");
      return run_analyze(an);
    }
    if (gen_cmd->parsed()) return run_generate(gen);
    if (sc_cmd->parsed()) return run_score(sc);
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const InfeasibleSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace motifcover
