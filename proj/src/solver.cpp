#include "motifcover/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "motifcover/parallel.hpp"
#include "motifcover/rng.hpp"

namespace motifcover {

namespace {

constexpr double kSigmaSlack = 1e-9;  // float-noise slack on the acceptance test

// Flat fixed-arity storage for one motif's instances.
struct Bucket {
  std::uint8_t arity = 0;
  std::vector<EdgeId> flat;
  bool active = false;
  bool lazy = false;
  std::size_t count() const { return arity ? flat.size() / arity : 0; }
};

struct StepCandidate {
  bool valid = false;
  std::vector<std::uint32_t> picked;
  std::uint64_t new_edges = 0;
  double sigma = 0.0;
  double sigma_after = 0.0;
};

class GreedySolver {
 public:
  GreedySolver(const Graph& g, const MotifCatalog& catalog, const SolverConfig& config)
      : g_(g), catalog_(catalog), config_(config),
        cover_(g.edge_count(), catalog.size()),
        edge_pos_(catalog.single_edge_position()),
        n_(g.vertex_count()) {
    if (g.edge_count() == 0) throw ValidationError("greedy cover needs a graph with edges");
    if (catalog.directed() != g.directed())
      throw ValidationError("catalog directedness does not match the graph");
    log_star_n_ = log_star(n_, config.cost.log_star_variant);
    eps_.reserve(catalog.size());
    placements_.reserve(catalog.size());
    for (const auto& m : catalog.classes()) {
      eps_.push_back(config.cost.epsilon(m));
      placements_.push_back(n_ >= static_cast<std::uint64_t>(m.size())
                               ? placements(m, n_)
                               : 0.0L);
    }
    ent_.resize(catalog.size());
  }

  SolveResult solve() {
    materialize();
    SolveResult result{std::move(cover_), {}, {}, 0.0};
    cover_ptr_ = &result.cover;
    double sigma_now = partial_sigma(result.cover.counts_by_position(), uncovered());
    result.initial_sigma_bits = sigma_now;

    std::size_t step = 0;
    while (uncovered() > 0) {
      prune_buckets();
      std::vector<std::size_t> motifs;
      std::size_t max_count = 0;
      for (std::size_t pos = 0; pos < buckets_.size(); ++pos)
        if (buckets_[pos].active) {
          motifs.push_back(pos);
          max_count = std::max(max_count, buckets_[pos].count());
        }
      // shared memo tables are extended before the parallel evaluations
      log_star_memo(max_count + 1);
      for (std::size_t pos : motifs) entropy_table(pos, buckets_[pos].count());

      std::vector<StepCandidate> cands(motifs.size());
      std::function<StepCandidate(std::size_t)> produce = [&](std::size_t i) {
        return compute_candidate(motifs[i], mix_seed(config_.seed, step, motifs[i]));
      };
      std::function<void(std::size_t, StepCandidate&)> consume = [&](std::size_t i,
                                                                     StepCandidate& c) {
        cands[i] = std::move(c);
      };
      parallel_for_ordered<StepCandidate>(motifs.size(), config_.workers, produce, consume);

      // the acceptance test: adding the step set must not raise the
      // partial-cover total information
      std::size_t best = motifs.size();
      for (std::size_t i = 0; i < motifs.size(); ++i) {
        auto& c = cands[i];
        if (!c.valid) {
          buckets_[motifs[i]].active = false;  // exhausted
          continue;
        }
        c.sigma_after = partial_sigma_with(result.cover.counts_by_position(), uncovered(),
                                           motifs[i], c.picked.size(), c.new_edges);
        if (c.sigma_after > sigma_now + kSigmaSlack) continue;
        if (best == motifs.size() || better_candidate(cands[i], motifs[i], cands[best], motifs[best]))
          best = i;
      }
      if (best == motifs.size())
        throw std::logic_error("no admissible motif step; single-edge step should always pass");

      const std::size_t pos = motifs[best];
      apply_step(result.cover, pos, cands[best]);
      sigma_now = cands[best].sigma_after;
      result.steps.push_back(StepRecord{pos, cands[best].picked.size(), cands[best].new_edges,
                                        cands[best].sigma, sigma_now});
      ++step;
    }

    result.report = build_information_report(g_, result.cover, catalog_, config_.cost);
    return result;
  }

 private:
  std::uint64_t uncovered() const {
    return g_.edge_count() - cover_ptr_->covered_count();
  }

  bool better_candidate(const StepCandidate& a, std::size_t pa, const StepCandidate& b,
                        std::size_t pb) const {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    const auto& ma = catalog_.at(pa);
    const auto& mb = catalog_.at(pb);
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma.canonical_id < mb.canonical_id;
  }

  void materialize() {
    buckets_.assign(catalog_.size(), {});
    for (std::size_t pos = 0; pos < catalog_.size(); ++pos)
      buckets_[pos].arity = static_cast<std::uint8_t>(catalog_.at(pos).edge_count());
    EnumContext ctx = make_enum_context(catalog_);
    for_each_instance(g_, ctx, nullptr,
                      [&](std::size_t pos, std::span<const VertexId>, std::span<const EdgeId> es) {
                        Bucket& b = buckets_[pos];
                        if (b.lazy) return;
                        if (b.count() >= config_.instance_cap) {
                          b.lazy = true;
                          b.flat.clear();
                          b.flat.shrink_to_fit();
                          return;
                        }
                        b.flat.insert(b.flat.end(), es.begin(), es.end());
                      });
    for (auto& b : buckets_) b.active = b.lazy || b.count() > 0;
  }

  void prune_buckets() {
    const CoveredFlags& cov = cover_ptr_->covered();
    for (std::size_t pos = 0; pos < buckets_.size(); ++pos) {
      Bucket& b = buckets_[pos];
      if (!b.active) continue;
      if (b.lazy) {
        // re-enumerate eligible instances for over-cap motifs
        if (!lazy_ctx_.count(pos))
          lazy_ctx_.emplace(pos, make_enum_context(catalog_, static_cast<std::int64_t>(pos)));
        b.flat.clear();
        for_each_instance(g_, lazy_ctx_.at(pos), &cov,
                          [&](std::size_t p, std::span<const VertexId>, std::span<const EdgeId> es) {
                            if (p == pos) b.flat.insert(b.flat.end(), es.begin(), es.end());
                          });
        if (b.count() == 0) b.active = false;
        continue;
      }
      const int arity = b.arity;
      std::size_t out = 0;
      for (std::size_t in = 0; in < b.flat.size(); in += arity) {
        bool eligible = false;
        for (int e = 0; e < arity; ++e) eligible |= !cov[b.flat[in + e]];
        if (eligible) {
          if (out != in)
            std::copy(b.flat.begin() + in, b.flat.begin() + in + arity, b.flat.begin() + out);
          out += arity;
        }
      }
      b.flat.resize(out);
      if (b.count() == 0) b.active = false;
    }
  }

  // cumulative log2 C(P, j) for j = 1..want, extended incrementally
  const std::vector<double>& entropy_table(std::size_t pos, std::size_t want) {
    auto& tab = ent_[pos];
    if (tab.empty()) tab.push_back(0.0);  // j = 0
    const long double p = placements_[pos];
    while (tab.size() <= want) {
      const long double j = static_cast<long double>(tab.size());
      tab.push_back(tab.back() +
                    static_cast<double>(std::log2((p - (j - 1.0L)) / j)));
    }
    return tab;
  }

  double log_star_memo(std::size_t n) {
    while (star_.size() <= n)
      star_.push_back(log_star(star_.size() == 0 ? 1 : star_.size(), config_.cost.log_star_variant));
    return star_[n];
  }

  StepCandidate compute_candidate(std::size_t pos, std::uint64_t seed) {
    Bucket& b = buckets_[pos];
    const std::size_t count = b.count();
    StepCandidate best;
    if (count == 0) return best;
    const int arity = b.arity;
    const CoveredFlags& cov = cover_ptr_->covered();
    const double eps = eps_[pos];

    std::vector<std::uint32_t> order(count);
    std::vector<std::uint32_t> claim(g_.edge_count(), 0);
    std::uint32_t stamp = 0;
    std::vector<std::uint32_t> picks;
    std::vector<std::uint32_t> gains;
    picks.reserve(count);
    gains.reserve(count);

    Rng rng(seed);
    for (int r = 0; r < std::max(1, config_.restarts_per_step); ++r) {
      for (std::uint32_t i = 0; i < count; ++i) order[i] = i;
      rng.shuffle(order);
      ++stamp;
      picks.clear();
      gains.clear();
      for (std::uint32_t idx : order) {
        const EdgeId* row = b.flat.data() + static_cast<std::size_t>(idx) * arity;
        std::uint32_t gain = 0;
        bool conflict = false;
        for (int e = 0; e < arity; ++e) {
          if (cov[row[e]]) continue;
          if (claim[row[e]] == stamp) {
            conflict = true;
            break;
          }
          ++gain;
        }
        if (conflict || gain == 0) continue;
        for (int e = 0; e < arity; ++e)
          if (!cov[row[e]]) claim[row[e]] = stamp;
        picks.push_back(idx);
        gains.push_back(gain);
      }
      if (picks.empty()) continue;

      // sigma-optimal prefix of this restart's pick order
      const auto& ent = ent_[pos];
      std::uint64_t cum = 0;
      double best_sigma = 0.0;
      std::size_t best_len = 0;
      std::uint64_t best_new = 0;
      for (std::size_t j = 0; j < picks.size(); ++j) {
        cum += gains[j];
        const double sigma = (ent[j + 1] + eps + star_[j + 1]) / static_cast<double>(cum);
        if (best_len == 0 || sigma < best_sigma) {
          best_sigma = sigma;
          best_len = j + 1;
          best_new = cum;
        }
      }
      if (!best.valid || best_sigma < best.sigma) {
        best.valid = true;
        best.sigma = best_sigma;
        best.new_edges = best_new;
        best.picked.assign(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(best_len));
      }
    }
    return best;
  }

  double partial_sigma(const std::vector<std::uint64_t>& counts, std::uint64_t uncov) const {
    return partial_sigma_with(counts, uncov, 0, 0, 0);
  }

  // partial-cover total information with `extra` instances of `extra_pos`
  // added and `newly` edges removed from the uncovered pool; uncovered
  // edges are costed as single-edge subgraphs merged into the edge motif
  double partial_sigma_with(const std::vector<std::uint64_t>& counts, std::uint64_t uncov,
                            std::size_t extra_pos, std::uint64_t extra,
                            std::uint64_t newly) const {
    double s = log_star_n_;
    const std::uint64_t u_after = uncov - newly;
    for (std::size_t pos = 0; pos < counts.size(); ++pos) {
      std::uint64_t n = counts[pos];
      if (extra > 0 && pos == extra_pos) n += extra;
      if (pos == edge_pos_) n += u_after;
      if (n == 0) continue;
      const MotifClass& m = catalog_.at(pos);
      s += entropy_bits(m, n, n_) + eps_[pos] + log_star(n, config_.cost.log_star_variant);
    }
    return s;
  }

  void apply_step(Cover& cover, std::size_t pos, const StepCandidate& cand) {
    Bucket& b = buckets_[pos];
    const int arity = b.arity;
    for (std::uint32_t idx : cand.picked) {
      Instance inst;
      inst.motif = static_cast<std::uint32_t>(pos);
      const EdgeId* row = b.flat.data() + static_cast<std::size_t>(idx) * arity;
      inst.edge_ids.assign(row, row + arity);
      inst.vertices.reserve(static_cast<std::size_t>(catalog_.at(pos).size()));
      for (int e = 0; e < arity; ++e) {
        inst.vertices.push_back(g_.edge(row[e]).a);
        inst.vertices.push_back(g_.edge(row[e]).b);
      }
      std::sort(inst.vertices.begin(), inst.vertices.end());
      inst.vertices.erase(std::unique(inst.vertices.begin(), inst.vertices.end()),
                          inst.vertices.end());
      if (!cover.add(std::move(inst)))
        throw std::logic_error("duplicate instance emitted by the greedy step");
    }
  }

  const Graph& g_;
  const MotifCatalog& catalog_;
  SolverConfig config_;
  Cover cover_;
  Cover* cover_ptr_ = nullptr;
  std::size_t edge_pos_;
  std::uint64_t n_;
  double log_star_n_ = 0.0;
  std::vector<double> eps_;
  std::vector<long double> placements_;
  std::vector<std::vector<double>> ent_;
  std::vector<double> star_;
  std::vector<Bucket> buckets_;
  std::map<std::size_t, EnumContext> lazy_ctx_;
};

}  // namespace

double efficiency(const Graph& g, const MotifCatalog& catalog, std::size_t motif_pos,
                  std::span<const Instance> step_set, const Cover& cover, const CostModel& cost) {
  if (step_set.empty()) throw std::domain_error("efficiency: empty step set");
  std::vector<EdgeId> fresh;
  for (const auto& inst : step_set)
    for (EdgeId e : inst.edge_ids)
      if (!cover.covered()[e]) fresh.push_back(e);
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  if (fresh.empty()) throw std::domain_error("efficiency: step set covers no new edge");
  const MotifClass& m = catalog.at(motif_pos);
  const double sigma_set = entropy_bits(m, step_set.size(), g.vertex_count()) + cost.epsilon(m) +
                           log_star(step_set.size(), cost.log_star_variant);
  return sigma_set / static_cast<double>(fresh.size());
}

std::vector<Instance> optimal_instance_set(const Graph& g, const MotifCatalog& catalog,
                                           std::size_t motif_pos, const Cover& cover,
                                           const SolverConfig& config) {
  std::vector<Instance> eligible = find_instances(g, catalog, motif_pos, &cover.covered());
  if (eligible.empty()) return {};

  Rng rng(mix_seed(config.seed, 0, motif_pos));
  std::vector<std::uint32_t> order(eligible.size());
  std::vector<std::uint8_t> claim(g.edge_count(), 0);

  const MotifClass& m = catalog.at(motif_pos);
  const double eps = config.cost.epsilon(m);
  std::vector<std::uint32_t> best_picks;
  double best_sigma = 0.0;
  bool have = false;

  for (int r = 0; r < std::max(1, config.restarts_per_step); ++r) {
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    std::fill(claim.begin(), claim.end(), 0);
    std::vector<std::uint32_t> picks;
    std::vector<std::uint32_t> gains;
    for (std::uint32_t idx : order) {
      const auto& inst = eligible[idx];
      std::uint32_t gain = 0;
      bool conflict = false;
      for (EdgeId e : inst.edge_ids) {
        if (cover.covered()[e]) continue;
        if (claim[e]) {
          conflict = true;
          break;
        }
        ++gain;
      }
      if (conflict || gain == 0) continue;
      for (EdgeId e : inst.edge_ids)
        if (!cover.covered()[e]) claim[e] = 1;
      picks.push_back(idx);
      gains.push_back(gain);
    }
    std::uint64_t cum = 0;
    double rs = 0.0;
    std::size_t rlen = 0;
    for (std::size_t j = 0; j < picks.size(); ++j) {
      cum += gains[j];
      double sigma = (entropy_bits(m, j + 1, g.vertex_count()) + eps +
                      log_star(j + 1, config.cost.log_star_variant)) /
                     static_cast<double>(cum);
      if (rlen == 0 || sigma < rs) {
        rs = sigma;
        rlen = j + 1;
      }
    }
    if (rlen > 0 && (!have || rs < best_sigma)) {
      have = true;
      best_sigma = rs;
      best_picks.assign(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(rlen));
    }
  }
  std::vector<Instance> out;
  out.reserve(best_picks.size());
  for (std::uint32_t idx : best_picks) out.push_back(eligible[idx]);
  return out;
}

SolveResult greedy_cover(const Graph& g, const MotifCatalog& catalog, const SolverConfig& config) {
  GreedySolver solver(g, catalog, config);
  return solver.solve();
}

RoleSequence role_sequence(const Cover& cover, const Graph& g, const MotifCatalog& catalog) {
  if (!cover.complete()) throw std::domain_error("role sequence requires a complete cover");
  std::vector<std::map<std::pair<std::uint32_t, std::uint8_t>, std::uint32_t>> acc(
      g.vertex_count());
  for (const auto& inst : cover.instances()) {
    const int k = static_cast<int>(inst.vertices.size());
    std::vector<std::pair<int, int>> local_edges;
    local_edges.reserve(inst.edge_ids.size());
    auto local_of = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(inst.vertices.begin(), inst.vertices.end(), v) -
                              inst.vertices.begin());
    };
    for (EdgeId e : inst.edge_ids)
      local_edges.emplace_back(local_of(g.edge(e).a), local_of(g.edge(e).b));
    Pattern local = Pattern::from_edges(k, g.directed(), local_edges);
    PatternSymmetry sym = analyze_pattern(local);
    if (sym.canonical != catalog.at(inst.motif).canonical)
      throw ValidationError("instance is not isomorphic to its declared motif");
    for (int v = 0; v < k; ++v) {
      std::uint8_t orbit = sym.orbit_of[sym.canonical_perm[v]];
      acc[inst.vertices[static_cast<std::size_t>(v)]][{inst.motif, orbit}] += 1;
    }
  }
  RoleSequence rs;
  rs.attachments.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& [key, cnt] : acc[v])
      rs.attachments[v].emplace_back(key.first, key.second, cnt);
  return rs;
}

}  // namespace motifcover
