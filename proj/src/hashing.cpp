#include "densest/hashing.hpp"

#include <cmath>
#include <string>

#include "densest/error.hpp"

namespace densest {

std::uint64_t mod61(unsigned __int128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x & kMersenne61);
  std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  std::uint64_t r = lo + (hi & kMersenne61) + static_cast<std::uint64_t>(hi >> 61);
  r = (r & kMersenne61) + (r >> 61);
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
  return mod61(static_cast<unsigned __int128>(a) * b);
}

std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kMersenne61 ? r - kMersenne61 : r;
}

std::uint64_t submod61(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kMersenne61 - b;
}

std::uint64_t powmod61(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  base %= kMersenne61;
  while (exp != 0) {
    if (exp & 1u) result = mulmod61(result, base);
    base = mulmod61(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t signed_mod61(std::int64_t x) {
  if (x >= 0) return static_cast<std::uint64_t>(x) % kMersenne61;
  const std::uint64_t mag = (static_cast<std::uint64_t>(-(x + 1)) + 1) % kMersenne61;
  return mag == 0 ? 0 : kMersenne61 - mag;
}

std::uint64_t mix61(std::uint64_t x) {
  constexpr std::uint64_t mask = (std::uint64_t{1} << 61) - 1;
  x &= mask;
  x ^= x >> 29;
  x = (x * 0xbf58476d1ce4e5b9ULL) & mask;
  x ^= x >> 32;
  x = (x * 0x94d049bb133111ebULL) & mask;
  x ^= x >> 29;
  return x;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return master ^ (0x9e3779b97f4a7c15ULL * index);
}

std::uint64_t edge_domain(NodeId n) {
  const std::uint64_t nn = n;
  return nn < 2 ? 0 : nn * (nn - 1) / 2;
}

EdgeIndex edge_index(NodeId u, NodeId v, NodeId n) {
  if (u >= v) {
    throw Error(ErrorCode::NonCanonical,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") requires u < v");
  }
  if (v >= n) {
    throw Error(ErrorCode::OutOfRange, "node " + std::to_string(v) + " >= n = " + std::to_string(n));
  }
  const std::uint64_t vv = v;
  return vv * (vv - 1) / 2 + u;
}

Edge decode_index(EdgeIndex idx, NodeId n) {
  if (idx >= edge_domain(n)) {
    throw Error(ErrorCode::OutOfRange, "edge index " + std::to_string(idx) + " outside [0, " +
                                           std::to_string(edge_domain(n)) + ")");
  }
  // Largest v with v(v-1)/2 <= idx; the float guess is corrected in both directions.
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (v * (v - 1) / 2 > idx) --v;
  while ((v + 1) * v / 2 <= idx) ++v;
  return {static_cast<NodeId>(idx - v * (v - 1) / 2), static_cast<NodeId>(v)};
}

PairwiseHash::PairwiseHash(std::uint64_t a, std::uint64_t b, std::uint64_t domain,
                           std::uint64_t range)
    : a_(a), b_(b), domain_(domain), range_(range) {
  if (range_ == 0) throw Error(ErrorCode::InvalidArgument, "hash range must be >= 1");
  if (domain_ == 0) throw Error(ErrorCode::InvalidArgument, "hash domain must be >= 1");
  if (domain_ >= kMersenne61) {
    throw Error(ErrorCode::InvalidArgument, "hash domain must be below 2^61 - 1");
  }
  if (a_ == 0 || a_ >= kMersenne61 || b_ >= kMersenne61) {
    throw Error(ErrorCode::InvalidArgument, "hash coefficients out of range");
  }
}

PairwiseHash PairwiseHash::from_seed(std::uint64_t seed, std::uint64_t domain,
                                     std::uint64_t range) {
  std::uint64_t state = seed;
  const std::uint64_t a = 1 + splitmix64(state) % (kMersenne61 - 1);
  const std::uint64_t b = splitmix64(state) % kMersenne61;
  return PairwiseHash(a, b, domain, range);
}

std::uint64_t PairwiseHash::raw(std::uint64_t x) const {
  if (x >= domain_) {
    throw Error(ErrorCode::OutOfDomain,
                std::to_string(x) + " outside hash domain [0, " + std::to_string(domain_) + ")");
  }
  return addmod61(mulmod61(a_, x), b_);
}

std::uint64_t PairwiseHash::operator()(std::uint64_t x) const { return raw(x) % range_; }

}  // namespace densest
