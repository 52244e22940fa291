#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motifcover {

// Labeled graph on at most 8 vertices with edges packed into a 64-bit mask.
// Undirected slots enumerate pairs (i,j), i<j, in lexicographic order;
// directed slots enumerate ordered pairs (i,j), i!=j, in lexicographic order.
struct Pattern {
  static constexpr int kMaxSize = 8;

  std::uint8_t size = 0;
  bool directed = false;
  std::uint64_t mask = 0;

  static int slot_count(int size, bool directed) {
    return directed ? size * (size - 1) : size * (size - 1) / 2;
  }
  static int slot(int size, bool directed, int i, int j);

  int slots() const { return slot_count(size, directed); }
  bool has_edge(int i, int j) const {
    return (mask >> slot(size, directed, i, j)) & 1u;
  }
  Pattern& add_edge(int i, int j) {
    mask |= std::uint64_t{1} << slot(size, directed, i, j);
    return *this;
  }
  int edge_count() const;

  // edges in ascending slot order; undirected pairs come out with i < j
  std::vector<std::pair<std::uint8_t, std::uint8_t>> edge_list() const;

  Pattern permuted(std::span<const std::uint8_t> perm) const;

  bool spanning() const;  // no isolated vertex
  bool connected_underlying() const;
  // No cut vertex in the underlying graph. Two-vertex patterns count as
  // biconnected: there is no vertex whose removal disconnects them.
  bool biconnected_underlying() const;

  std::string to_string() const;  // "0-1,0-2" undirected, "0>1,2>1" directed
  static Pattern from_edges(int size, bool directed,
                            std::span<const std::pair<int, int>> edges);
  // Parses "0-1,0-2" / "0>1,0>2"; directedness inferred from the separator.
  static Pattern parse(std::string_view text);

  auto operator<=>(const Pattern&) const = default;
};

// Exhaustive symmetry analysis over all size! relabelings.
struct PatternSymmetry {
  Pattern canonical;
  std::uint64_t aut_size = 1;
  // original label -> canonical label (first permutation reaching the minimum)
  std::array<std::uint8_t, Pattern::kMaxSize> canonical_perm{};
  // canonical label -> orbit index; orbits numbered by smallest member
  std::array<std::uint8_t, Pattern::kMaxSize> orbit_of{};
  int orbit_count = 0;
};

PatternSymmetry analyze_pattern(const Pattern& p);
Pattern canonical_form(const Pattern& p);

// slot -> (i, j) decode table for a given shape
const std::vector<std::pair<std::uint8_t, std::uint8_t>>& slot_pairs(int size, bool directed);

// All permutations of {0..k-1} in lexicographic order, flattened (k bytes each).
const std::vector<std::uint8_t>& permutation_pool(int k);

std::uint64_t apply_perm_to_mask(std::uint64_t mask, int size, bool directed,
                                 std::span<const std::uint8_t> perm);

}  // namespace motifcover
