#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace motifcover {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash64(std::uint64_t x) {
  return splitmix64(x);
}

// Stable derivation of stream seeds from a master seed and coordinates
// (run index, step index, motif index, ...).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t h = hash64(seed);
  h = hash64(h ^ (a * 0x9e3779b97f4a7c15ull + 0x165667b19e3779f9ull));
  h = hash64(h ^ (b * 0xbf58476d1ce4e5b9ull + 0x27d4eb2f165667c5ull));
  return h;
}

// mt19937_64 with hand-rolled distributions so that sampled sequences are
// pinned by the engine alone (std:: distributions are implementation
// defined; the engine itself is fully specified).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(hash64(seed)) {}

  std::uint64_t next() { return eng_(); }

  // unbiased integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::uint64_t poisson(double lambda);

  // Binomial(trials, p). Exact Bernoulli counting for small trial counts;
  // Poisson for the sparse regime (trials huge, trials*p^2 negligible).
  std::uint64_t binomial(long double trials, long double p);

 private:
  std::mt19937_64 eng_;
};

}  // namespace motifcover
