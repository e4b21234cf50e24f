#pragma once

#include <cstdint>

#include "densest/graph.hpp"

namespace densest {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod61(unsigned __int128 x);
std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b);
std::uint64_t addmod61(std::uint64_t a, std::uint64_t b);
std::uint64_t submod61(std::uint64_t a, std::uint64_t b);
std::uint64_t powmod61(std::uint64_t base, std::uint64_t exp);
// Reduces a signed integer into [0, P).
std::uint64_t signed_mod61(std::int64_t x);

/// Bijection on [0, 2^61) used to scramble hash outputs.
std::uint64_t mix61(std::uint64_t x);

std::uint64_t splitmix64(std::uint64_t& state);

/// Per-component seed derived from a master seed: master ^ (odd constant * index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

using EdgeIndex = std::uint64_t;

/// Number of canonical edges on n nodes, n(n-1)/2.
std::uint64_t edge_domain(NodeId n);

/// v(v-1)/2 + u for u < v < n.
EdgeIndex edge_index(NodeId u, NodeId v, NodeId n);
inline EdgeIndex edge_index(const Edge& e, NodeId n) { return edge_index(e.u, e.v, n); }

Edge decode_index(EdgeIndex idx, NodeId n);

/// Member of the family x -> ((a*x + b) mod P) mod B with P = 2^61 - 1.
class PairwiseHash {
 public:
  PairwiseHash(std::uint64_t a, std::uint64_t b, std::uint64_t domain, std::uint64_t range);

  /// Draws (a, b) deterministically from seed.
  static PairwiseHash from_seed(std::uint64_t seed, std::uint64_t domain, std::uint64_t range);

  std::uint64_t operator()(std::uint64_t x) const;
  /// (a*x + b) mod P, before range reduction.
  std::uint64_t raw(std::uint64_t x) const;

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  std::uint64_t prime() const { return kMersenne61; }
  std::uint64_t domain() const { return domain_; }
  std::uint64_t range() const { return range_; }

  friend bool operator==(const PairwiseHash&, const PairwiseHash&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t domain_;
  std::uint64_t range_;
};

}  // namespace densest
