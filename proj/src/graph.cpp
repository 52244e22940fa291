#include "motifcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace motifcover {

Graph Graph::from_edges(bool directed, VertexId vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::size_t* duplicates) {
  Graph g;
  g.directed_ = directed;
  g.n_ = vertex_count;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v)
      throw ValidationError("self-loop on vertex " + std::to_string(u) + " is not allowed");
    if (u >= vertex_count || v >= vertex_count)
      throw ValidationError("edge endpoint " + std::to_string(std::max(u, v)) +
                            " outside vertex range [0," + std::to_string(vertex_count) + ")");
    g.edges_.push_back(EdgeKey::make(u, v, directed));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  if (duplicates) *duplicates = static_cast<std::size_t>(g.edges_.end() - last);
  g.edges_.erase(last, g.edges_.end());

  g.adj_.assign(vertex_count, {});
  std::vector<std::map<VertexId, std::pair<EdgeId, EdgeId>>> tmp(vertex_count);
  for (EdgeId e = 0; e < g.edges_.size(); ++e) {
    auto [a, b] = g.edges_[e];
    if (directed) {
      tmp[a][b].first = e + 1;   // a->b stored as fwd at a
      tmp[b][a].second = e + 1;  // and as bwd at b
    } else {
      tmp[a][b].first = e + 1;
      tmp[b][a].first = e + 1;
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    g.adj_[v].reserve(tmp[v].size());
    for (auto& [nbr, ids] : tmp[v])
      g.adj_[v].push_back(Arc{nbr, ids.first ? ids.first - 1 : kNoEdge,
                              ids.second ? ids.second - 1 : kNoEdge});
  }
  return g;
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_ || u == v) return kNoEdge;
  const auto& lst = adj_[u];
  auto it = std::lower_bound(lst.begin(), lst.end(), v,
                             [](const Arc& a, VertexId x) { return a.nbr < x; });
  if (it == lst.end() || it->nbr != v) return kNoEdge;
  return it->fwd;
}

namespace {

bool parse_i64(std::string_view tok, std::int64_t& out) {
  auto r = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return r.ec == std::errc{} && r.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph load_edge_list(std::istream& in, bool directed, LoadStats* stats) {
  LoadStats local;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::int64_t header_n = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view lv(line);
    if (auto hash = lv.find('#'); hash != std::string_view::npos) {
      std::string_view comment = lv.substr(hash + 1);
      lv = lv.substr(0, hash);
      auto ctoks = split_ws(comment);
      if (ctoks.size() == 2 && ctoks[0] == "vertices") {
        std::int64_t n;
        if (!parse_i64(ctoks[1], n) || n < 0)
          throw ParseError("bad vertex count in header", lineno);
        header_n = n;
        local.had_header = true;
      } else {
        ++local.comment_lines;
      }
    }
    auto toks = split_ws(lv);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError("expected two integer tokens, got " + std::to_string(toks.size()), lineno);
    std::int64_t u, v;
    if (!parse_i64(toks[0], u) || !parse_i64(toks[1], v))
      throw ParseError("non-integer edge token", lineno);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", lineno);
    if (u == v)
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop " +
                            std::to_string(u) + " " + std::to_string(v) + " is not allowed");
    raw.emplace_back(u, v);
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  std::vector<std::int64_t> id_map;
  VertexId n = 0;
  if (header_n >= 0) {
    n = static_cast<VertexId>(header_n);
    for (auto [u, v] : raw) {
      if (u >= header_n || v >= header_n)
        throw ValidationError("edge id exceeds declared vertex count " + std::to_string(header_n));
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  } else {
    // compact distinct ids to [0, N) in ascending order
    std::vector<std::int64_t> ids;
    ids.reserve(raw.size() * 2);
    for (auto [u, v] : raw) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    n = static_cast<VertexId>(ids.size());
    bool identity = !ids.empty() && ids.back() == static_cast<std::int64_t>(ids.size()) - 1;
    auto index_of = [&](std::int64_t x) {
      return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
    };
    for (auto [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
    if (!identity && !ids.empty()) id_map = std::move(ids);
  }

  Graph g = Graph::from_edges(directed, n, edges, &local.duplicate_edges);
  if (!id_map.empty()) g.set_original_ids(std::move(id_map));
  if (stats) *stats = local;
  return g;
}

Graph load_edge_list_file(const std::string& path, bool directed, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  return load_edge_list(in, directed, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  // header only when the edge list alone cannot reconstruct N, i.e. when
  // the mentioned ids are not exactly {0..N-1}
  std::vector<bool> mentioned(g.vertex_count(), false);
  std::size_t distinct = 0;
  for (const auto& e : g.edges())
    for (VertexId v : {e.a, e.b})
      if (!mentioned[v]) {
        mentioned[v] = true;
        ++distinct;
      }
  const bool need_header = distinct != g.vertex_count();
  if (need_header) out << "# vertices " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << e.a << " " << e.b << "\n";
  if (!out) throw std::runtime_error("failed writing edge list");
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_edge_list(g, out);
}

Graph underlying_undirected(const Graph& g) {
  if (!g.directed()) return g;
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.emplace_back(e.a, e.b);
  Graph u = Graph::from_edges(false, g.vertex_count(), edges);
  u.set_original_ids(std::vector<std::int64_t>(g.original_ids()));
  return u;
}

}  // namespace motifcover
