#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "motifcover/catalog.hpp"
#include "motifcover/errors.hpp"
#include "motifcover/rng.hpp"

using namespace motifcover;

namespace {

Pattern pat(int size, bool directed, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> e(edges);
  return Pattern::from_edges(size, directed, e);
}

// independent class counter: pairwise isomorphism testing by explicit
// permutation search, no canonical forms involved
bool isomorphic_bruteforce(const Pattern& a, const Pattern& b) {
  if (a.size != b.size || a.directed != b.directed || a.edge_count() != b.edge_count())
    return false;
  std::vector<std::uint8_t> perm(a.size);
  for (int i = 0; i < a.size; ++i) perm[i] = static_cast<std::uint8_t>(i);
  do {
    if (apply_perm_to_mask(a.mask, a.size, a.directed, perm) == b.mask) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::size_t count_classes_bruteforce(int k, bool directed, bool biconnected_only) {
  std::vector<Pattern> reps;
  const int nslots = Pattern::slot_count(k, directed);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nslots); ++mask) {
    Pattern p{static_cast<std::uint8_t>(k), directed, mask};
    if (!p.connected_underlying()) continue;
    if (biconnected_only && !p.biconnected_underlying()) continue;
    bool fresh = true;
    for (const auto& r : reps)
      if (isomorphic_bruteforce(p, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(p);
  }
  return reps.size();
}

}  // namespace

TEST_SUITE("pattern") {
  TEST_CASE("canonical form is invariant under relabeling") {
    Pattern tri = pat(3, false, {{0, 1}, {0, 2}, {1, 2}});
    std::vector<std::uint8_t> perm{2, 0, 1};
    CHECK(canonical_form(tri.permuted(perm)) == canonical_form(tri));
  }

  TEST_CASE("path and triangle have distinct canonical forms") {
    Pattern tri = pat(3, false, {{0, 1}, {0, 2}, {1, 2}});
    Pattern path = pat(3, false, {{0, 1}, {1, 2}});
    CHECK(canonical_form(tri) != canonical_form(path));
  }

  TEST_CASE("feed-forward loop canonicalizes consistently over all relabelings") {
    // oracle: apply all six relabelings explicitly and canonicalize each
    Pattern ffl = pat(3, true, {{0, 1}, {0, 2}, {1, 2}});
    std::set<std::uint64_t> canon_masks;
    std::set<std::uint64_t> image_masks;
    std::vector<std::uint8_t> perm{0, 1, 2};
    do {
      Pattern img = ffl.permuted(perm);
      image_masks.insert(img.mask);
      canon_masks.insert(canonical_form(img).mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(canon_masks.size() == 1);
    CHECK(*canon_masks.begin() == *std::min_element(image_masks.begin(), image_masks.end()));
  }

  TEST_CASE("canonical invariance under random relabelings, random patterns") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const int k = 2 + static_cast<int>(rng.below(5));
      const bool directed = rng.bernoulli(0.5);
      const int nslots = Pattern::slot_count(k, directed);
      Pattern p{static_cast<std::uint8_t>(k), directed,
                rng.below(std::uint64_t{1} << nslots)};
      if (p.mask == 0) continue;
      std::vector<std::uint8_t> perm(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
      rng.shuffle(perm);
      CHECK(canonical_form(p.permuted(perm)) == canonical_form(p));
    }
  }

  TEST_CASE("size above 8 is rejected") {
    CHECK_THROWS(Pattern::parse("0-9"));
  }

  TEST_CASE("pattern strings round-trip") {
    Pattern p = pat(4, true, {{0, 1}, {2, 1}, {3, 0}});
    CHECK(Pattern::parse(p.to_string()) == p);
    CHECK(Pattern::parse("0-1,0-2").to_string() == "0-1,0-2");
  }
}

TEST_SUITE("automorphisms") {
  TEST_CASE("triangle has the full symmetric group and one orbit") {
    auto sym = analyze_pattern(pat(3, false, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(sym.aut_size == 6);
    CHECK(sym.orbit_count == 1);
  }

  TEST_CASE("claw splits into center and leaf orbits") {
    // oracle: brute force over all 4! permutations
    Pattern claw = pat(4, false, {{0, 1}, {0, 2}, {0, 3}});
    std::uint64_t aut = 0;
    std::vector<std::uint8_t> perm{0, 1, 2, 3};
    do {
      if (apply_perm_to_mask(claw.mask, 4, false, perm) == claw.mask) ++aut;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(aut == 6);

    auto sym = analyze_pattern(claw);
    CHECK(sym.aut_size == 6);
    CHECK(sym.orbit_count == 2);
    std::map<int, int> orbit_sizes;
    for (int v = 0; v < 4; ++v) orbit_sizes[sym.orbit_of[v]]++;
    std::vector<int> sizes;
    for (auto [o, s] : orbit_sizes) sizes.push_back(s);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 3});
  }

  TEST_CASE("directed 3-cycle keeps only rotations") {
    auto sym = analyze_pattern(pat(3, true, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(sym.aut_size == 3);
    CHECK(sym.orbit_count == 1);
  }

  TEST_CASE("single edge: aut 2 undirected, 1 directed") {
    CHECK(analyze_pattern(pat(2, false, {{0, 1}})).aut_size == 2);
    CHECK(analyze_pattern(pat(2, true, {{0, 1}})).aut_size == 1);
  }

  TEST_CASE("orbit sizes divide the automorphism group order") {
    Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      const int k = 2 + static_cast<int>(rng.below(4));
      const bool directed = rng.bernoulli(0.5);
      const int nslots = Pattern::slot_count(k, directed);
      Pattern p{static_cast<std::uint8_t>(k), directed, rng.below(std::uint64_t{1} << nslots)};
      if (p.mask == 0) continue;
      auto sym = analyze_pattern(p);
      std::map<int, std::uint64_t> orbit_sizes;
      for (int v = 0; v < k; ++v) orbit_sizes[sym.orbit_of[v]]++;
      std::uint64_t total = 0;
      for (auto [o, s] : orbit_sizes) {
        CHECK(sym.aut_size % s == 0);  // orbit-stabilizer
        total += s;
      }
      CHECK(total == static_cast<std::uint64_t>(k));
    }
  }
}

TEST_SUITE("biconnectivity") {
  TEST_CASE("triangle is biconnected, path is not") {
    CHECK(is_biconnected(pat(3, false, {{0, 1}, {0, 2}, {1, 2}})));
    CHECK(!is_biconnected(pat(3, false, {{0, 1}, {1, 2}})));
  }

  TEST_CASE("two-vertex motifs count as biconnected") {
    CHECK(is_biconnected(pat(2, false, {{0, 1}})));
    CHECK(is_biconnected(pat(2, true, {{0, 1}})));
    CHECK(is_biconnected(pat(2, true, {{0, 1}, {1, 0}})));
  }

  TEST_CASE("disconnected input is a domain error") {
    CHECK_THROWS_AS(is_biconnected(pat(4, false, {{0, 1}, {2, 3}})), std::domain_error);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("small catalog counts match brute-force pairwise isomorphism testing") {
    for (int k = 2; k <= 4; ++k) {
      for (bool directed : {false, true}) {
        MotifCatalog cat = MotifCatalog::generate(k, directed, CatalogFilter::connected);
        std::size_t expect = 0;
        for (int j = 2; j <= k; ++j) expect += count_classes_bruteforce(j, directed, false);
        CHECK_MESSAGE(cat.size() == expect,
                      "k=" << k << " directed=" << directed << " got " << cat.size());

        MotifCatalog bic = MotifCatalog::generate(k, directed, CatalogFilter::biconnected);
        std::size_t expect_b = 0;
        for (int j = 2; j <= k; ++j) expect_b += count_classes_bruteforce(j, directed, true);
        CHECK(bic.size() == expect_b);
      }
    }
  }

  TEST_CASE("undirected connected counts: 30 up to size 5, 142 up to size 6") {
    CHECK(MotifCatalog::generate(5, false, CatalogFilter::connected).size() == 30);
    CHECK(MotifCatalog::generate(6, false, CatalogFilter::connected).size() == 142);
  }

  TEST_CASE("catalog ordering is deterministic and indexed") {
    MotifCatalog cat = MotifCatalog::generate(4, false, CatalogFilter::connected);
    for (std::size_t i = 1; i < cat.size(); ++i) {
      const auto &a = cat.at(i - 1), &b = cat.at(i);
      bool ordered = a.size() < b.size() ||
                     (a.size() == b.size() && a.edge_count() < b.edge_count()) ||
                     (a.size() == b.size() && a.edge_count() == b.edge_count() &&
                      a.canonical_id < b.canonical_id);
      CHECK(ordered);
      CHECK(cat.position(cat.at(i).canonical_id) == i);
    }
    CHECK(cat.has_single_edge());
  }

  TEST_CASE("connected classes satisfy the tree bound; biconnected implies connected") {
    MotifCatalog cat = MotifCatalog::generate(5, false, CatalogFilter::connected);
    for (const auto& m : cat.classes()) {
      CHECK(m.connected);
      CHECK(m.edge_count() >= m.size() - 1);
      if (m.biconnected) CHECK(m.connected);
      CHECK(static_cast<std::uint64_t>(24 * 5 * 6 * 7 * 8) % m.aut_size == 0);  // aut divides |m|!
    }
  }

  TEST_CASE("catalog save/load round-trips") {
    MotifCatalog cat = MotifCatalog::generate(4, true, CatalogFilter::connected);
    std::ostringstream out;
    cat.save(out);
    std::istringstream in(out.str());
    MotifCatalog back = MotifCatalog::load(in);
    REQUIRE(back.size() == cat.size());
    CHECK(back.directed());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(back.at(i).canonical_id == cat.at(i).canonical_id);
      CHECK(back.at(i).aut_size == cat.at(i).aut_size);
      CHECK(back.at(i).epsilon_bits == doctest::Approx(cat.at(i).epsilon_bits));
    }
  }

  TEST_CASE("with_single_edge injects exactly the single edge") {
    std::vector<Pattern> tri{pat(3, false, {{0, 1}, {0, 2}, {1, 2}})};
    MotifCatalog cat = MotifCatalog::from_patterns(false, tri);
    CHECK(!cat.has_single_edge());
    MotifCatalog fixed = cat.with_single_edge();
    CHECK(fixed.has_single_edge());
    CHECK(fixed.size() == 2);
  }

  TEST_CASE("aliases expand to canonical forms") {
    CHECK(pattern_from_alias("triangle", false).to_string() == "0-1,0-2,1-2");
    CHECK(pattern_from_alias("claw", false) == pattern_from_alias("star3", false));
    CHECK(pattern_from_alias("k4", false).edge_count() == 6);
    CHECK(pattern_from_alias("cycle4", false).edge_count() == 4);
    CHECK(pattern_from_alias("path3", false).edge_count() == 2);
    CHECK(pattern_from_alias("ffl", true).edge_count() == 3);
    CHECK(pattern_from_alias("mutual", true).edge_count() == 2);
    CHECK_THROWS_AS(pattern_from_alias("nonsense", false), ValidationError);
  }
}
