#include "motifcover/pattern.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <mutex>
#include <numeric>

#include "motifcover/errors.hpp"

namespace motifcover {

int Pattern::slot(int size, bool directed, int i, int j) {
  if (directed) return i * (size - 1) + (j > i ? j - 1 : j);
  if (i > j) std::swap(i, j);
  return i * size - i * (i + 3) / 2 + j - 1;
}

int Pattern::edge_count() const { return std::popcount(mask); }

const std::vector<std::pair<std::uint8_t, std::uint8_t>>& slot_pairs(int size, bool directed) {
  static std::vector<std::pair<std::uint8_t, std::uint8_t>> tables[2][Pattern::kMaxSize + 1];
  static std::once_flag once;
  std::call_once(once, [] {
    for (int dir = 0; dir < 2; ++dir)
      for (int k = 2; k <= Pattern::kMaxSize; ++k) {
        auto& t = tables[dir][k];
        t.resize(Pattern::slot_count(k, dir != 0));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) {
            if (i == j || (!dir && i > j)) continue;
            t[Pattern::slot(k, dir != 0, i, j)] = {static_cast<std::uint8_t>(i),
                                                   static_cast<std::uint8_t>(j)};
          }
      }
  });
  return tables[directed ? 1 : 0][size];
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> Pattern::edge_list() const {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  const auto& pairs = slot_pairs(size, directed);
  std::uint64_t m = mask;
  while (m) {
    int s = std::countr_zero(m);
    m &= m - 1;
    out.push_back(pairs[static_cast<std::size_t>(s)]);
  }
  return out;
}

std::uint64_t apply_perm_to_mask(std::uint64_t mask, int size, bool directed,
                                 std::span<const std::uint8_t> perm) {
  const auto& pairs = slot_pairs(size, directed);
  std::uint64_t out = 0;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    auto [i, j] = pairs[static_cast<std::size_t>(s)];
    out |= std::uint64_t{1} << Pattern::slot(size, directed, perm[i], perm[j]);
  }
  return out;
}

Pattern Pattern::permuted(std::span<const std::uint8_t> perm) const {
  Pattern p = *this;
  p.mask = apply_perm_to_mask(mask, size, directed, perm);
  return p;
}

bool Pattern::spanning() const {
  std::uint8_t touched = 0;
  for (auto [i, j] : edge_list()) {
    touched |= static_cast<std::uint8_t>(1u << i);
    touched |= static_cast<std::uint8_t>(1u << j);
  }
  return touched == static_cast<std::uint8_t>((1u << size) - 1);
}

namespace {

std::array<std::uint8_t, Pattern::kMaxSize> underlying_adj(const Pattern& p) {
  std::array<std::uint8_t, Pattern::kMaxSize> adj{};
  for (auto [i, j] : p.edge_list()) {
    adj[i] |= static_cast<std::uint8_t>(1u << j);
    adj[j] |= static_cast<std::uint8_t>(1u << i);
  }
  return adj;
}

bool reachable_all(const std::array<std::uint8_t, Pattern::kMaxSize>& adj, int size,
                   std::uint8_t start_bit, std::uint8_t skip_mask, std::uint8_t want) {
  std::uint8_t seen = start_bit;
  std::uint8_t frontier = start_bit;
  while (frontier) {
    std::uint8_t next = 0;
    std::uint8_t f = frontier;
    while (f) {
      int v = std::countr_zero(static_cast<unsigned>(f));
      f &= static_cast<std::uint8_t>(f - 1);
      next |= adj[v];
    }
    next &= static_cast<std::uint8_t>(~skip_mask);
    frontier = static_cast<std::uint8_t>(next & ~seen);
    seen |= next;
  }
  (void)size;
  return (seen & want) == want;
}

}  // namespace

bool Pattern::connected_underlying() const {
  if (size == 0) return false;
  if (!spanning()) return false;
  auto adj = underlying_adj(*this);
  const std::uint8_t all = static_cast<std::uint8_t>((1u << size) - 1);
  return reachable_all(adj, size, 1u, 0u, all);
}

bool Pattern::biconnected_underlying() const {
  if (!connected_underlying()) return false;
  if (size == 2) return true;
  auto adj = underlying_adj(*this);
  const std::uint8_t all = static_cast<std::uint8_t>((1u << size) - 1);
  for (int cut = 0; cut < size; ++cut) {
    const std::uint8_t cut_bit = static_cast<std::uint8_t>(1u << cut);
    const std::uint8_t want = static_cast<std::uint8_t>(all & ~cut_bit);
    int start = std::countr_zero(static_cast<unsigned>(want));
    if (!reachable_all(adj, size, static_cast<std::uint8_t>(1u << start), cut_bit, want))
      return false;
  }
  return true;
}

std::string Pattern::to_string() const {
  std::string out;
  const char sep = directed ? '>' : '-';
  bool first = true;
  for (auto [i, j] : edge_list()) {
    if (!first) out.push_back(',');
    first = false;
    out.push_back(static_cast<char>('0' + i));
    out.push_back(sep);
    out.push_back(static_cast<char>('0' + j));
  }
  return out;
}

Pattern Pattern::from_edges(int size, bool directed,
                            std::span<const std::pair<int, int>> edges) {
  if (size < 2 || size > kMaxSize)
    throw ValidationError("pattern size must be between 2 and 8");
  Pattern p;
  p.size = static_cast<std::uint8_t>(size);
  p.directed = directed;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= size || j >= size)
      throw ValidationError("pattern edge endpoint out of range");
    if (i == j) throw ValidationError("pattern may not contain a self-loop");
    std::uint64_t bit = std::uint64_t{1} << slot(size, directed, i, j);
    if (p.mask & bit) throw ValidationError("duplicate edge in pattern");
    p.mask |= bit;
  }
  return p;
}

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw ValidationError("empty pattern string");
  std::vector<std::pair<int, int>> edges;
  bool directed = text.find('>') != std::string_view::npos;
  int max_label = -1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - pos);
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (tok.empty()) throw ValidationError("empty edge token in pattern string");
    const char sep = directed ? '>' : '-';
    std::size_t s = tok.find(sep);
    if (s == std::string_view::npos || tok.find(directed ? '-' : '>') != std::string_view::npos)
      throw ValidationError("mixed or missing edge separators in pattern string");
    int a = 0, b = 0;
    auto ra = std::from_chars(tok.data(), tok.data() + s, a);
    auto rb = std::from_chars(tok.data() + s + 1, tok.data() + tok.size(), b);
    if (ra.ec != std::errc{} || rb.ec != std::errc{} || ra.ptr != tok.data() + s ||
        rb.ptr != tok.data() + tok.size())
      throw ValidationError("bad edge token in pattern string: " + std::string(tok));
    edges.emplace_back(a, b);
    max_label = std::max({max_label, a, b});
  }
  if (max_label + 1 > kMaxSize) throw ValidationError("pattern has more than 8 vertices");
  return from_edges(max_label + 1, directed, edges);
}

const std::vector<std::uint8_t>& permutation_pool(int k) {
  static std::vector<std::uint8_t> pools[Pattern::kMaxSize + 1];
  static std::once_flag once;
  std::call_once(once, [] {
    for (int n = 1; n <= Pattern::kMaxSize; ++n) {
      std::vector<std::uint8_t> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), static_cast<std::uint8_t>(0));
      auto& pool = pools[n];
      do {
        pool.insert(pool.end(), perm.begin(), perm.end());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  });
  return pools[k];
}

PatternSymmetry analyze_pattern(const Pattern& p) {
  if (p.size < 2 || p.size > Pattern::kMaxSize)
    throw ValidationError("pattern size must be between 2 and 8");
  const int k = p.size;
  const auto& pool = permutation_pool(k);
  const std::size_t nperms = pool.size() / static_cast<std::size_t>(k);

  PatternSymmetry sym;
  std::uint64_t best = ~std::uint64_t{0};
  std::size_t best_at = 0;
  std::uint64_t aut = 0;

  std::array<std::uint8_t, Pattern::kMaxSize> parent{};
  for (int v = 0; v < k; ++v) parent[v] = static_cast<std::uint8_t>(v);
  auto find = [&](std::uint8_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  for (std::size_t pi = 0; pi < nperms; ++pi) {
    std::span<const std::uint8_t> perm(pool.data() + pi * static_cast<std::size_t>(k),
                                       static_cast<std::size_t>(k));
    std::uint64_t img = apply_perm_to_mask(p.mask, k, p.directed, perm);
    if (img < best) {
      best = img;
      best_at = pi;
    }
    if (img == p.mask) {
      ++aut;
      for (int v = 0; v < k; ++v) {
        auto a = find(static_cast<std::uint8_t>(v));
        auto b = find(perm[static_cast<std::size_t>(v)]);
        if (a != b) parent[a] = b;
      }
    }
  }

  sym.canonical = Pattern{static_cast<std::uint8_t>(k), p.directed, best};
  sym.aut_size = aut;
  std::span<const std::uint8_t> cperm(pool.data() + best_at * static_cast<std::size_t>(k),
                                      static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) sym.canonical_perm[v] = cperm[static_cast<std::size_t>(v)];

  // orbits on canonical labels, numbered by smallest canonical member
  std::array<std::uint8_t, Pattern::kMaxSize> root_of_canonical{};
  for (int v = 0; v < k; ++v) root_of_canonical[sym.canonical_perm[v]] = find(static_cast<std::uint8_t>(v));
  std::array<int, Pattern::kMaxSize> orbit_index;
  orbit_index.fill(-1);
  int next = 0;
  for (int c = 0; c < k; ++c) {
    std::uint8_t r = root_of_canonical[c];
    // the orbit's index is assigned when its first canonical member appears
    int found = -1;
    for (int c2 = 0; c2 < c; ++c2)
      if (root_of_canonical[c2] == r) {
        found = orbit_index[c2];
        break;
      }
    orbit_index[c] = found >= 0 ? found : next++;
    sym.orbit_of[c] = static_cast<std::uint8_t>(orbit_index[c]);
  }
  sym.orbit_count = next;
  return sym;
}

Pattern canonical_form(const Pattern& p) { return analyze_pattern(p).canonical; }

}  // namespace motifcover
