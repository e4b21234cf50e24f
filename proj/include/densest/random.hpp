#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace densest {

// Portable draws on top of std::mt19937_64 (the std distributions are not
// reproducible across standard library implementations).

/// Uniform double in [0, 1) from the top 53 bits of one output.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), bound >= 1 (Lemire's multiply-and-reject).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

template <class T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace densest
