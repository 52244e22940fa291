#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "motifcover/generators.hpp"
#include "motifcover/report.hpp"

namespace py = pybind11;
using namespace motifcover;

namespace {

Graph graph_from_edges(std::uint64_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                       bool directed) {
  return Graph::from_edges(directed, static_cast<VertexId>(n), edges);
}

Graph graph_from_text(const std::string& text, bool directed) {
  std::istringstream in(text);
  return load_edge_list(in, directed);
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

std::vector<std::pair<VertexId, VertexId>> graph_edges(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

CostModel cost_from_name(const std::string& epsilon) {
  CostModel cost;
  if (epsilon == "edge-list") {
    cost.epsilon_mode = CostModel::EpsilonMode::edge_list;
  } else if (epsilon == "zero") {
    cost.epsilon_mode = CostModel::EpsilonMode::zero;
  } else if (epsilon.rfind("const:", 0) == 0) {
    cost.epsilon_mode = CostModel::EpsilonMode::constant;
    cost.epsilon_constant = std::stod(epsilon.substr(6));
  } else {
    throw ValidationError("epsilon must be edge-list, zero or const:<bits>");
  }
  return cost;
}

py::dict class_dict(const MotifClass& m) {
  py::dict d;
  d["motif"] = m.canonical_id;
  d["size"] = m.size();
  d["edges"] = m.edge_count();
  d["directed"] = m.directed();
  d["aut"] = m.aut_size;
  d["orbits"] = std::vector<int>(m.orbit_of.begin(), m.orbit_of.end());
  d["orbit_count"] = m.orbit_count;
  d["connected"] = m.connected;
  d["biconnected"] = m.biconnected;
  d["epsilon_bits"] = m.epsilon_bits;
  return d;
}

std::string analyze_json_str(const Graph& g, const MotifCatalog& catalog, std::uint64_t seed,
                             int restarts, int runs, const std::string& epsilon, int workers,
                             bool include_cover) {
  MotifCatalog cat = catalog.has_single_edge() ? catalog : catalog.with_single_edge();
  AnalyzeOptions opts;
  opts.runs = runs;
  opts.solver.seed = seed;
  opts.solver.restarts_per_step = restarts;
  opts.solver.cost = cost_from_name(epsilon);
  opts.solver.workers = workers;
  AnalyzeResult result = analyze_graph(g, cat, opts);
  ReportMeta meta;
  meta.input_path = "<memory>";
  meta.catalog_source = "caller";
  meta.catalog_classes = cat.size();
  meta.seed = seed;
  meta.restarts = restarts;
  meta.runs = runs;
  meta.epsilon_mode = epsilon;
  meta.workers = workers;
  meta.include_cover = include_cover;
  meta.include_timestamp = false;
  return analysis_report_json(g, cat, result, meta).dump();
}

std::string score_json_str(const Graph& g, const std::string& cover_json,
                           const std::string& epsilon) {
  nlohmann::json doc = nlohmann::json::parse(cover_json);
  auto [catalog, cover] = cover_from_json(g, doc);
  if (!cover.complete())
    throw ValidationError("cover is incomplete: " + std::to_string(cover.uncovered_edges().size()) +
                          " uncovered edge(s)");
  return score_report_json(g, catalog, cover, cost_from_name(epsilon)).dump();
}

py::tuple generate_uniform_py(std::uint64_t n, bool directed,
                              const std::vector<std::pair<std::string, std::uint64_t>>& plan,
                              std::uint64_t seed) {
  UniformCoverSpec spec;
  spec.n_vertices = static_cast<VertexId>(n);
  spec.directed = directed;
  spec.seed = seed;
  for (const auto& [name, count] : plan) {
    Pattern p = name.find_first_of("->") != std::string::npos ? canonical_form(Pattern::parse(name))
                                                              : pattern_from_alias(name, directed);
    spec.plan.emplace_back(p, count);
  }
  PlantedResult r = realize_uniform_cover(spec);
  std::string cover = cover_to_json(r.graph, r.catalog, r.planted).dump();
  return py::make_tuple(r.graph, cover, r.collisions);
}

py::tuple generate_bjr_py(std::uint64_t n, bool directed,
                          const std::vector<std::pair<std::string, double>>& plan,
                          std::uint64_t seed) {
  BjrSpec spec;
  spec.n_vertices = static_cast<VertexId>(n);
  spec.directed = directed;
  spec.seed = seed;
  for (const auto& [name, k] : plan) {
    Pattern p = name.find_first_of("->") != std::string::npos ? canonical_form(Pattern::parse(name))
                                                              : pattern_from_alias(name, directed);
    spec.plan.emplace_back(p, k);
  }
  PlantedResult r = generate_bjr(spec);
  std::string cover = cover_to_json(r.graph, r.catalog, r.planted).dump();
  return py::make_tuple(r.graph, cover, r.collisions);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimum-total-information subgraph covers for network motif analysis";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InfeasibleSpecError>(m, "InfeasibleSpecError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&graph_from_edges), py::arg("n"), py::arg("edges"), py::arg("directed") = false)
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &graph_edges)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("to_edge_list", &graph_to_text)
      .def("underlying_undirected", [](const Graph& g) { return underlying_undirected(g); })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.vertex_count() << ", edges=" << g.edge_count()
          << (g.directed() ? ", directed)" : ")");
        return s.str();
      });

  m.def(
      "load_edge_list",
      [](const std::string& path, bool directed) { return load_edge_list_file(path, directed); },
      py::arg("path"), py::arg("directed") = false, "Load a graph from an edge-list file.");
  m.def("loads_edge_list", &graph_from_text, py::arg("text"), py::arg("directed") = false,
        "Load a graph from edge-list text.");
  m.def("write_edge_list", &write_edge_list_file, py::arg("graph"), py::arg("path"));

  py::class_<MotifCatalog>(m, "MotifCatalog")
      .def_static(
          "generate",
          [](int max_size, bool directed, const std::string& filter) {
            return MotifCatalog::generate(max_size, directed,
                                          filter == "biconnected" ? CatalogFilter::biconnected
                                                                  : CatalogFilter::connected);
          },
          py::arg("max_size"), py::arg("directed") = false, py::arg("filter") = "connected")
      .def_static("load", &MotifCatalog::load_file, py::arg("path"))
      .def("save", &MotifCatalog::save_file, py::arg("path"))
      .def("__len__", &MotifCatalog::size)
      .def_property_readonly("directed", &MotifCatalog::directed)
      .def("classes",
           [](const MotifCatalog& cat) {
             py::list out;
             for (const auto& c : cat.classes()) out.append(class_dict(c));
             return out;
           })
      .def("position", [](const MotifCatalog& cat, const std::string& id) -> py::object {
        auto pos = cat.position(id);
        if (!pos) return py::none();
        return py::int_(*pos);
      });

  m.def(
      "motif_class",
      [](const std::string& pattern) { return class_dict(make_motif_class(Pattern::parse(pattern))); },
      py::arg("pattern"), "Canonical form, automorphisms, orbits and flags of a small graph.");
  m.def(
      "canonical_form",
      [](const std::string& pattern) { return canonical_form(Pattern::parse(pattern)).to_string(); },
      py::arg("pattern"));
  m.def(
      "motif_alias",
      [](const std::string& name, bool directed) {
        return pattern_from_alias(name, directed).to_string();
      },
      py::arg("name"), py::arg("directed") = false);
  m.def(
      "is_biconnected",
      [](const std::string& pattern) { return is_biconnected(Pattern::parse(pattern)); },
      py::arg("pattern"));

  m.def(
      "count_instances",
      [](const Graph& g, const MotifCatalog& cat, const std::string& id) {
        auto pos = cat.position(id);
        if (!pos) throw ValidationError("motif not in catalog: " + id);
        return count_instances(g, cat, *pos);
      },
      py::arg("graph"), py::arg("catalog"), py::arg("motif"));
  m.def(
      "find_instances",
      [](const Graph& g, const MotifCatalog& cat, const std::string& id) {
        auto pos = cat.position(id);
        if (!pos) throw ValidationError("motif not in catalog: " + id);
        py::list out;
        for (const auto& inst : find_instances(g, cat, *pos)) {
          py::dict d;
          d["motif"] = id;
          d["vertices"] = inst.vertices;
          py::list edges;
          for (EdgeId e : inst.edge_ids)
            edges.append(py::make_tuple(g.edge(e).a, g.edge(e).b));
          d["edges"] = edges;
          out.append(d);
        }
        return out;
      },
      py::arg("graph"), py::arg("catalog"), py::arg("motif"));

  m.def("log_star", [](std::uint64_t n, const std::string& variant) {
        return log_star(n, variant == "plain" ? LogStarVariant::plain : LogStarVariant::rissanen);
      },
      py::arg("n"), py::arg("variant") = "rissanen");
  m.def("log2_binomial", [](double p, std::uint64_t n) {
        return log2_binomial(static_cast<long double>(p), n);
      },
      py::arg("p"), py::arg("n"));
  m.def("edge_list_code_bits", [](int v, int e, bool directed) {
        return edge_list_code_bits(v, e, directed);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("directed") = false);

  m.def("analyze_json", &analyze_json_str, py::arg("graph"), py::arg("catalog"),
        py::arg("seed") = 1, py::arg("restarts") = 5, py::arg("runs") = 1,
        py::arg("epsilon") = "edge-list", py::arg("workers") = 0,
        py::arg("include_cover") = false,
        "Greedy cover analysis; returns the report as a JSON string.");
  m.def("score_json", &score_json_str, py::arg("graph"), py::arg("cover_json"),
        py::arg("epsilon") = "edge-list",
        "Recompute totals and c-scores for a cover; returns a JSON string.");
  m.def("generate_uniform", &generate_uniform_py, py::arg("n"), py::arg("directed"),
        py::arg("plan"), py::arg("seed") = 1,
        "Realize a uniform cover; returns (graph, cover_json, collisions).");
  m.def("generate_bjr", &generate_bjr_py, py::arg("n"), py::arg("directed"), py::arg("plan"),
        py::arg("seed") = 1,
        "Sample the clustered random-graph model; returns (graph, cover_json, collisions).");

  m.attr("__version__") = "0.1.0";
}
