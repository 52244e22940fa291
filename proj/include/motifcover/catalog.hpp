#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "motifcover/bitcost.hpp"
#include "motifcover/pattern.hpp"

namespace motifcover {

// One isomorphism class of small graphs.
struct MotifClass {
  std::string canonical_id;  // canonical edge-list string
  Pattern canonical;
  std::uint64_t aut_size = 1;
  std::vector<std::uint8_t> orbit_of;  // per canonical vertex
  int orbit_count = 0;
  bool connected = false;
  bool biconnected = false;
  double epsilon_bits = 0.0;  // edge-list code length

  int size() const { return canonical.size; }
  int edge_count() const { return canonical.edge_count(); }
  bool directed() const { return canonical.directed; }
};

MotifClass make_motif_class(const Pattern& p);

enum class CatalogFilter { connected, biconnected };

// Deduplicated, deterministically ordered set of motif classes.
class MotifCatalog {
 public:
  MotifCatalog() = default;

  // Exhaustive enumeration of all labeled graphs on 2..max_size vertices,
  // filtered and deduplicated by canonical form. max_size <= 6 undirected,
  // <= 5 directed.
  static MotifCatalog generate(int max_size, bool directed, CatalogFilter filter);
  static MotifCatalog from_patterns(bool directed, const std::vector<Pattern>& patterns);

  bool directed() const { return directed_; }
  int max_size() const { return max_size_; }
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  const MotifClass& at(std::size_t pos) const { return classes_[pos]; }
  const std::vector<MotifClass>& classes() const { return classes_; }

  std::optional<std::size_t> position(const std::string& canonical_id) const;
  std::optional<std::size_t> position(const Pattern& canonical) const;
  bool has_single_edge() const;
  std::size_t single_edge_position() const;  // throws when absent
  MotifCatalog with_single_edge() const;

  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;
  static MotifCatalog load(std::istream& in);
  static MotifCatalog load_file(const std::string& path);

 private:
  void finalize();  // sort, index, compute max_size

  bool directed_ = false;
  int max_size_ = 0;
  std::vector<MotifClass> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

// True iff the (connected) pattern has no cut vertex in its underlying
// graph; 2-vertex patterns count as biconnected. Disconnected input is a
// domain error.
bool is_biconnected(const Pattern& p);

// Named shorthand for common motifs: edge, mutual (directed), triangle,
// clawN/starN, cycleN, pathN, kN, ffl (directed). Returns a canonical form.
Pattern pattern_from_alias(std::string_view name, bool directed);

// Per-size lookup from an edge bitmask on k sorted vertices to the catalog
// position of its class, or -1 when the mask does not span k connected
// vertices or its class is not in the catalog. `only` restricts the table
// to one catalog position.
struct ClassTable {
  int k = 0;
  bool directed = false;
  std::vector<std::int32_t> value;
};
ClassTable build_class_table(const MotifCatalog& catalog, int k, std::int64_t only = -1);

}  // namespace motifcover
