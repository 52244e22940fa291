#include "motifcover/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace motifcover {

namespace {

// Wernicke's ESU over the underlying-undirected adjacency. Each connected
// vertex set of size in [2, max_k] is reached exactly once; `emit_all`
// selects whether intermediate sizes are emitted or only exact max_k sets.
class EsuScan {
 public:
  EsuScan(const Graph& g, int max_k, bool emit_all, const VertexSetVisitor& emit)
      : g_(g), max_k_(max_k), emit_all_(emit_all), emit_(emit), blocked_(g.vertex_count(), 0) {
    vsub_.reserve(static_cast<std::size_t>(max_k));
    ext_.resize(static_cast<std::size_t>(max_k) + 1);
    undo_.resize(static_cast<std::size_t>(max_k) + 1);
    sorted_.reserve(static_cast<std::size_t>(max_k));
  }

  void run(VertexId root_begin, VertexId root_end) {
    for (VertexId v = root_begin; v < root_end; ++v) {
      root_ = v;
      vsub_.assign(1, v);
      blocked_[v] = 1;
      auto& undo0 = undo_[0];
      undo0.assign(1, v);
      auto& ext = ext_[1];
      ext.clear();
      for (const auto& arc : g_.adjacency(v)) {
        if (!blocked_[arc.nbr]) {
          blocked_[arc.nbr] = 1;
          undo0.push_back(arc.nbr);
          if (arc.nbr > v) ext.push_back(arc.nbr);
        }
      }
      if (max_k_ >= 2) extend(1);
      for (VertexId u : undo0) blocked_[u] = 0;
    }
  }

 private:
  void extend(int depth) {
    auto& cand = ext_[static_cast<std::size_t>(depth)];
    const std::size_t cand_size = cand.size();
    for (std::size_t i = 0; i < cand_size; ++i) {
      VertexId w = cand[i];
      vsub_.push_back(w);
      const int sz = static_cast<int>(vsub_.size());
      if (sz >= 2 && (emit_all_ || sz == max_k_)) {
        sorted_.assign(vsub_.begin(), vsub_.end());
        std::sort(sorted_.begin(), sorted_.end());
        emit_(std::span<const VertexId>(sorted_.data(), sorted_.size()));
      }
      if (sz < max_k_) {
        auto& next = ext_[static_cast<std::size_t>(depth) + 1];
        next.assign(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end());
        auto& und = undo_[static_cast<std::size_t>(depth)];
        und.clear();
        for (const auto& arc : g_.adjacency(w)) {
          if (!blocked_[arc.nbr]) {
            blocked_[arc.nbr] = 1;
            und.push_back(arc.nbr);
            if (arc.nbr > root_) next.push_back(arc.nbr);
          }
        }
        extend(depth + 1);
        for (VertexId u : und) blocked_[u] = 0;
      }
      vsub_.pop_back();
    }
  }

  const Graph& g_;
  int max_k_;
  bool emit_all_;
  const VertexSetVisitor& emit_;
  std::vector<std::uint8_t> blocked_;
  std::vector<VertexId> vsub_;
  std::vector<VertexId> sorted_;
  std::vector<std::vector<VertexId>> ext_;
  std::vector<std::vector<VertexId>> undo_;
  VertexId root_ = 0;
};

}  // namespace

void enumerate_connected_vertex_sets(const Graph& g, int k, const VertexSetVisitor& visit) {
  if (k < 2 || k > 6) throw ValidationError("connected vertex set size must be in [2,6]");
  EsuScan scan(g, k, /*emit_all=*/false, visit);
  scan.run(0, g.vertex_count());
}

EnumContext make_enum_context(const MotifCatalog& catalog, std::int64_t only) {
  EnumContext ctx;
  ctx.catalog = &catalog;
  if (only >= 0) {
    ctx.max_size = catalog.at(static_cast<std::size_t>(only)).size();
  } else {
    for (const auto& m : catalog.classes()) ctx.max_size = std::max(ctx.max_size, m.size());
  }
  if (ctx.max_size > 6 || (catalog.directed() && ctx.max_size > 5))
    throw ValidationError("instance enumeration supports motifs up to size 6 (5 directed)");
  ctx.tables.resize(static_cast<std::size_t>(ctx.max_size) + 1);
  for (int k = 2; k <= ctx.max_size; ++k) {
    bool any = false;
    if (only >= 0) {
      any = k == ctx.max_size;
    } else {
      for (const auto& m : catalog.classes()) any |= m.size() == k;
    }
    if (any) ctx.tables[static_cast<std::size_t>(k)] = build_class_table(catalog, k, only);
  }
  return ctx;
}

void for_each_instance(const Graph& g, const EnumContext& ctx, const CoveredFlags* covered,
                       VertexId root_begin, VertexId root_end, const InstanceVisitor& visit) {
  if (ctx.max_size < 2) return;
  const bool directed = g.directed();
  std::array<EdgeId, 32> slot_edge{};
  std::array<EdgeId, 32> inst_edges{};

  VertexSetVisitor per_set = [&](std::span<const VertexId> s) {
    const int k = static_cast<int>(s.size());
    const auto& table = ctx.tables[static_cast<std::size_t>(k)];
    if (table.value.empty()) return;

    // induced edge bitmask over the local slot order
    std::uint32_t full = 0;
    std::uint32_t uncovered_mask = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (directed) {
          const auto& lst = g.adjacency(s[static_cast<std::size_t>(i)]);
          auto it = std::lower_bound(lst.begin(), lst.end(), s[static_cast<std::size_t>(j)],
                                     [](const Graph::Arc& a, VertexId x) { return a.nbr < x; });
          if (it == lst.end() || it->nbr != s[static_cast<std::size_t>(j)]) continue;
          if (it->fwd != kNoEdge) {
            int sl = Pattern::slot(k, true, i, j);
            slot_edge[static_cast<std::size_t>(sl)] = it->fwd;
            full |= 1u << sl;
            if (covered && !(*covered)[it->fwd]) uncovered_mask |= 1u << sl;
          }
          if (it->bwd != kNoEdge) {
            int sl = Pattern::slot(k, true, j, i);
            slot_edge[static_cast<std::size_t>(sl)] = it->bwd;
            full |= 1u << sl;
            if (covered && !(*covered)[it->bwd]) uncovered_mask |= 1u << sl;
          }
        } else {
          EdgeId e = g.find_edge(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
          if (e == kNoEdge) continue;
          int sl = Pattern::slot(k, false, i, j);
          slot_edge[static_cast<std::size_t>(sl)] = e;
          full |= 1u << sl;
          if (covered && !(*covered)[e]) uncovered_mask |= 1u << sl;
        }
      }
    if (full == 0) return;

    // every spanning connected edge subset, via submask enumeration
    for (std::uint32_t sub = full;; sub = (sub - 1) & full) {
      if (sub == 0) break;
      std::int32_t cls = table.value[sub];
      if (cls >= 0 && (!covered || (sub & uncovered_mask) != 0)) {
        int ne = 0;
        std::uint32_t m = sub;
        while (m) {
          int sl = std::countr_zero(m);
          m &= m - 1;
          inst_edges[static_cast<std::size_t>(ne++)] = slot_edge[static_cast<std::size_t>(sl)];
        }
        std::sort(inst_edges.begin(), inst_edges.begin() + ne);
        visit(static_cast<std::size_t>(cls), s,
              std::span<const EdgeId>(inst_edges.data(), static_cast<std::size_t>(ne)));
      }
    }
  };

  EsuScan scan(g, ctx.max_size, /*emit_all=*/true, per_set);
  scan.run(root_begin, root_end);
}

void for_each_instance(const Graph& g, const EnumContext& ctx, const CoveredFlags* covered,
                       const InstanceVisitor& visit) {
  for_each_instance(g, ctx, covered, 0, g.vertex_count(), visit);
}

std::vector<Instance> find_instances(const Graph& g, const MotifCatalog& catalog,
                                     std::size_t motif_pos, const CoveredFlags* covered) {
  if (catalog.at(motif_pos).size() > 6)
    throw ValidationError("instance enumeration supports motifs up to size 6");
  if (!catalog.at(motif_pos).connected)
    throw ValidationError("instance enumeration requires connected motifs");
  EnumContext ctx = make_enum_context(catalog, static_cast<std::int64_t>(motif_pos));
  std::vector<Instance> out;
  for_each_instance(g, ctx, covered,
                    [&](std::size_t pos, std::span<const VertexId> vs, std::span<const EdgeId> es) {
                      if (pos != motif_pos) return;
                      Instance inst;
                      inst.motif = static_cast<std::uint32_t>(pos);
                      inst.vertices.assign(vs.begin(), vs.end());
                      inst.edge_ids.assign(es.begin(), es.end());
                      out.push_back(std::move(inst));
                    });
  return out;
}

std::uint64_t count_instances(const Graph& g, const MotifCatalog& catalog, std::size_t motif_pos) {
  EnumContext ctx = make_enum_context(catalog, static_cast<std::int64_t>(motif_pos));
  std::uint64_t n = 0;
  for_each_instance(g, ctx, nullptr,
                    [&](std::size_t pos, std::span<const VertexId>, std::span<const EdgeId>) {
                      if (pos == motif_pos) ++n;
                    });
  return n;
}

}  // namespace motifcover
