#ifndef RAMSEY_RANDOM_HPP
#define RAMSEY_RANDOM_HPP

#include "ramsey/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>

namespace ramsey {

/// SplitMix64 step; used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded generator with platform-independent helpers (the standard
/// distributions are implementation-defined, so they are avoided).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return x % bound;
  }

  template <class It> void shuffle(It first, It last) {
    for (auto i = last - first; i > 1; --i)
      std::iter_swap(first + (i - 1), first + static_cast<std::ptrdiff_t>(below(static_cast<std::uint64_t>(i))));
  }

private:
  std::mt19937_64 engine_;
};

/// G(n, 1/2): each pair independently with probability one half.
Graph random_graph(std::size_t n, Rng &rng);

} // namespace ramsey

#endif // RAMSEY_RANDOM_HPP
