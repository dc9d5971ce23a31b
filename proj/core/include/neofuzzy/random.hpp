#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace neofuzzy {

/// Uniform double in [0, 1) built from the top 53 bits of two draws. Used
/// instead of std::uniform_real_distribution so that seeded sequences are
/// identical across standard libraries.
inline double uniform_unit(std::mt19937& rng) {
  const std::uint64_t hi = rng();
  const std::uint64_t lo = rng();
  return static_cast<double>(((hi << 32) | lo) >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// In-place Fisher-Yates shuffle with explicit index draws, deterministic for
/// a given engine state on every platform.
template <class T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

/// Identity permutation 0..n-1, the starting point for shuffled visit orders.
inline std::vector<std::size_t> index_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

}  // namespace neofuzzy
