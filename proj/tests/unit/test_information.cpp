#include <doctest.h>

#include <gmp.h>

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "motifcover/information.hpp"
#include "motifcover/rng.hpp"
#include "motifcover/solver.hpp"

using namespace motifcover;

namespace {

MotifClass motif(const std::string& pattern) { return make_motif_class(Pattern::parse(pattern)); }

// independent oracle: big-integer binomial straight through GMP, log2 via
// the mantissa/exponent decomposition
double oracle_log2_binomial(std::uint64_t p, std::uint64_t n) {
  mpz_t b;
  mpz_init(b);
  mpz_bin_uiui(b, p, n);
  long e = 0;
  double mant = mpz_get_d_2exp(&e, b);
  mpz_clear(b);
  return std::log2(mant) + static_cast<double>(e);
}

// brute-force placement count on small hosts: distinct edge sets over all
// injective embeddings
std::uint64_t oracle_placements(const std::string& pattern, int n) {
  Pattern p = Pattern::parse(pattern);
  std::vector<int> sel(p.size);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<int> perm(p.size);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == p.size) {
      std::vector<std::pair<int, int>> edges;
      for (auto [a, b] : p.edge_list()) {
        int u = perm[a], v = perm[b];
        if (!p.directed && u > v) std::swap(u, v);
        edges.emplace_back(u, v);
      }
      std::sort(edges.begin(), edges.end());
      seen.insert(edges);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool used = false;
      for (int i = 0; i < depth; ++i) used |= perm[i] == v;
      if (used) continue;
      perm[depth] = v;
      rec(depth + 1);
    }
  };
  rec(0);
  return seen.size();
}

}  // namespace

TEST_SUITE("bitcost") {
  TEST_CASE("log_star of small integers") {
    CHECK(log_star(1) == doctest::Approx(1.5186).epsilon(1e-4));
    CHECK(log_star(2) == doctest::Approx(2.5186).epsilon(1e-4));
    CHECK(log_star(16) == doctest::Approx(8.5186).epsilon(1e-4));
    CHECK(log_star(1) == doctest::Approx(std::log2(2.865064)));
    CHECK_THROWS_AS(log_star(0), std::domain_error);
  }

  TEST_CASE("plain variant drops the constant") {
    CHECK(log_star(1, LogStarVariant::plain) == doctest::Approx(0.0));
    CHECK(log_star(16, LogStarVariant::plain) == doctest::Approx(7.0));
  }

  TEST_CASE("exact and float binomial paths agree to 1e-9 relative") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
      std::uint64_t p = 2 + rng.below(1'000'000 - 2);
      std::uint64_t n = rng.below(p + 1);
      double exact = log2_binomial_exact(p, n);
      double fl = log2_binomial_float(static_cast<long double>(p), n);
      if (exact == 0.0)
        CHECK(fl == doctest::Approx(0.0).epsilon(1e-12));
      else
        CHECK(std::fabs(fl - exact) / exact <= 1e-9);
    }
  }

  TEST_CASE("binomial symmetry on the exact path") {
    Rng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
      std::uint64_t p = 2 + rng.below(100'000);
      std::uint64_t n = rng.below(p + 1);
      CHECK(log2_binomial_exact(p, n) == doctest::Approx(log2_binomial_exact(p, p - n)));
    }
  }

  TEST_CASE("binomial is strictly positive strictly inside the range") {
    CHECK(log2_binomial_exact(10, 0) == 0.0);
    CHECK(log2_binomial_exact(10, 10) == 0.0);
    for (std::uint64_t n = 1; n < 10; ++n) CHECK(log2_binomial_exact(10, n) > 0.0);
    CHECK_THROWS_AS(log2_binomial_exact(10, 11), std::domain_error);
  }
}

TEST_SUITE("placements") {
  TEST_CASE("triangle on 5 vertices: log2 10 by brute-force count") {
    CHECK(oracle_placements("0-1,0-2,1-2", 5) == 10);
    CHECK(log2_placements(motif("0-1,0-2,1-2"), 5) == doctest::Approx(std::log2(10.0)));
  }

  TEST_CASE("undirected edge on 4 vertices: log2 6") {
    CHECK(log2_placements(motif("0-1"), 4) == doctest::Approx(std::log2(6.0)));
  }

  TEST_CASE("directed edge on 3 vertices: log2 6") {
    CHECK(log2_placements(motif("0>1"), 3) == doctest::Approx(std::log2(6.0)));
  }

  TEST_CASE("exact placement counts match the embedding oracle on small hosts") {
    for (const char* id : {"0-1", "0-1,0-2", "0-1,0-2,1-2", "0-1,0-2,0-3", "0>1", "0>1,1>2"}) {
      for (int n = 4; n <= 6; ++n) {
        auto p = exact_placements(motif(id), n);
        REQUIRE(p.has_value());
        CHECK_MESSAGE(*p == oracle_placements(id, n), id << " on " << n);
      }
    }
  }

  TEST_CASE("host smaller than the motif is a domain error") {
    CHECK_THROWS_AS(log2_placements(motif("0-1,0-2,1-2"), 2), std::domain_error);
  }
}

TEST_SUITE("entropy") {
  TEST_CASE("triangle, one instance on 4 vertices costs 2 bits") {
    // oracle: 4 distinct triangle placements on 4 vertices
    CHECK(oracle_placements("0-1,0-2,1-2", 4) == 4);
    CHECK(entropy_bits(motif("0-1,0-2,1-2"), 1, 4) == doctest::Approx(2.0));
  }

  TEST_CASE("zero instances and full occupancy cost nothing") {
    CHECK(entropy_bits(motif("0-1,0-2,1-2"), 0, 4) == 0.0);
    CHECK(entropy_bits(motif("0-1,0-2,1-2"), 4, 4) == doctest::Approx(0.0));
  }

  TEST_CASE("count above the placement bound is a domain error") {
    CHECK_THROWS_AS(entropy_bits(motif("0-1,0-2,1-2"), 5, 4), std::domain_error);
  }

  TEST_CASE("stirling approximation tracks the exact entropy") {
    MotifClass tri = motif("0-1,0-2,1-2");
    double exact = entropy_bits(tri, 100, 1000);
    double stirling = entropy_stirling(tri, 100, 1000);
    CHECK(std::fabs(stirling - exact) / exact < 0.01);

    // n=1: S ~= |m| log2 N - log2|Aut| + log2 e, within O(log N) of exact
    double exact1 = entropy_bits(tri, 1, 10000);
    double stirling1 = entropy_stirling(tri, 1, 10000);
    CHECK(std::fabs(stirling1 - exact1) <= std::log2(10000.0));

    CHECK_THROWS_AS(entropy_stirling(tri, 0, 100), std::domain_error);
    CHECK_THROWS_AS(entropy_stirling(motif("0-1"), 5, 100), std::domain_error);
  }

  TEST_CASE("signed stirling error shrinks with count (diagnostic sweep)") {
    MotifClass tri = motif("0-1,0-2,1-2");
    double prev_rel = 1e9;
    for (std::uint64_t n : {10, 100, 1000}) {
      double exact = entropy_bits(tri, n, 2000);
      double rel = std::fabs(entropy_stirling(tri, n, 2000) - exact) / exact;
      MESSAGE("stirling relative error at n=", n, ": ", rel);
      CHECK(rel < prev_rel);
      prev_rel = rel;
    }
  }
}

TEST_SUITE("total_information") {
  TEST_CASE("edge-only summary equals the ERI benchmark") {
    Graph g = Graph::from_edges(false, 3, {{0, 1}, {1, 2}, {0, 2}});
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    CoverSummary s{3, false, {{"0-1", 3}}};
    CHECK(total_information(s, cat) == doctest::Approx(edge_cover_information(g)).epsilon(1e-12));
  }

  TEST_CASE("empty counts reduce to log* N") {
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    CoverSummary s{5, false, {}};
    CHECK(total_information(s, cat) == doctest::Approx(log_star(5)));
  }

  TEST_CASE("triangle cover of 40 disjoint triangles beats the edge cover") {
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    CoverSummary tri{120, false, {{"0-1,0-2,1-2", 40}}};
    CoverSummary edges{120, false, {{"0-1", 120}}};
    double st = total_information(tri, cat);
    double se = total_information(edges, cat);
    CHECK(st < se);
    MESSAGE("40 triangles: ", st, " bits vs edge cover ", se, " bits");
  }

  TEST_CASE("unknown motif is a lookup error") {
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    CoverSummary s{10, false, {{"0-1,0-2,0-3", 1}}};
    CHECK_THROWS_AS(total_information(s, cat), ValidationError);
  }

  TEST_CASE("triangle ERI example: 2 log*3 + eps(edge)") {
    Graph g = Graph::from_edges(false, 3, {{0, 1}, {1, 2}, {0, 2}});
    double expect = 2.0 * log_star(3) + edge_list_code_bits(2, 1, false);
    CHECK(edge_cover_information(g) == doctest::Approx(expect));
  }

  TEST_CASE("single-edge graph ERI") {
    Graph g = Graph::from_edges(false, 2, {{0, 1}});
    double expect = log_star(2) + edge_list_code_bits(2, 1, false) + log_star(1);
    CHECK(edge_cover_information(g) == doctest::Approx(expect));
  }

  TEST_CASE("empty graph has no edge-cover information") {
    Graph g = Graph::from_edges(false, 4, {});
    CHECK_THROWS_AS(edge_cover_information(g), std::domain_error);
  }

  TEST_CASE("additivity over disjoint count maps up to the shared log* N") {
    MotifCatalog cat = MotifCatalog::generate(4, false, CatalogFilter::connected);
    CoverSummary a{500, false, {{"0-1,0-2,1-2", 7}}};
    CoverSummary b{500, false, {{"0-1,0-2,0-3", 9}}};
    CoverSummary both{500, false, {{"0-1,0-2,1-2", 7}, {"0-1,0-2,0-3", 9}}};
    double lhs = total_information(both, cat);
    double rhs = total_information(a, cat) + total_information(b, cat) - log_star(500);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  TEST_CASE("total information is monotone in the epsilon override") {
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    CoverSummary s{100, false, {{"0-1,0-2,1-2", 5}, {"0-1", 10}}};
    double prev = -1.0;
    for (double eps : {0.0, 1.0, 4.0, 16.0}) {
      CostModel cost;
      cost.epsilon_mode = CostModel::EpsilonMode::constant;
      cost.epsilon_constant = eps;
      double v = total_information(s, cat, cost);
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("epsilon examples from the edge-list code") {
    // single edge: log*2 + log*1 + log2 C(1,1)
    CHECK(motif("0-1").epsilon_bits == doctest::Approx(log_star(2) + log_star(1)));
    // triangle: log*3 + log*3 + log2 C(3,3) = 2 log*3
    CHECK(motif("0-1,0-2,1-2").epsilon_bits == doctest::Approx(2.0 * log_star(3)));
    // directed feed-forward loop: 2 log*3 + log2 C(6,3) = 2 log*3 + log2 20
    CHECK(motif("0>1,0>2,1>2").epsilon_bits ==
          doctest::Approx(2.0 * log_star(3) + std::log2(20.0)));
  }
}

TEST_SUITE("scores") {
  TEST_CASE("c-score identities on a solved cover") {
    // two disjoint triangles plus a pendant edge
    Graph g = Graph::from_edges(
        false, 7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {5, 6}});
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    SolveResult r = greedy_cover(g, cat, SolverConfig{});
    const std::size_t edge_pos = cat.single_edge_position();
    CHECK(c_score(g, r.cover, cat, edge_pos) == 0.0);
    for (std::size_t pos = 0; pos < cat.size(); ++pos) {
      double c = c_score(g, r.cover, cat, pos);
      CHECK(c >= 0.0);  // solver-accepted motifs never hurt
      if (r.cover.count(pos) == 0) CHECK(c == 0.0);
    }
  }

  TEST_CASE("single positive score normalizes to one; equal scores to 1/sqrt(2)") {
    Graph g = Graph::from_edges(false, 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    SolveResult r = greedy_cover(g, cat, SolverConfig{});
    auto profile = significance_profile(g, r.cover, cat);
    double norm2 = 0.0;
    for (auto& [id, v] : profile) norm2 += v * v;
    CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(profile.at("0-1,0-2,1-2") == doctest::Approx(1.0));
  }

  TEST_CASE("all-zero profile is undefined") {
    Graph g = Graph::from_edges(false, 4, {{0, 1}, {2, 3}});
    MotifCatalog cat = MotifCatalog::generate(2, false, CatalogFilter::connected);
    SolveResult r = greedy_cover(g, cat, SolverConfig{});
    CHECK_THROWS_AS(significance_profile(g, r.cover, cat), std::domain_error);
  }

  TEST_CASE("c-score evaluates the dissolution directly") {
    // cover with 2 triangles: dissolving them yields the pure edge cover
    Graph g = Graph::from_edges(false, 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    MotifCatalog cat = MotifCatalog::generate(3, false, CatalogFilter::connected);
    SolveResult r = greedy_cover(g, cat, SolverConfig{});
    REQUIRE(r.cover.count(*cat.position("0-1,0-2,1-2")) == 2);
    double sigma = total_information(r.cover.summary(g, cat), cat);
    double dissolved = edge_cover_information(g);
    double expect = dissolved / sigma - 1.0;
    CHECK(c_score(g, r.cover, cat, *cat.position("0-1,0-2,1-2")) == doctest::Approx(expect));
  }
}
