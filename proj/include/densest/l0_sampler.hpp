#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "densest/hashing.hpp"

namespace densest {

/// Linear 1-sparse recovery unit: count, index-weighted sum, and a modular
/// fingerprint sum f_x * z^x mod (2^61 - 1).
struct OneSparseCell {
  std::int64_t count = 0;
  std::int64_t index_sum = 0;
  std::uint64_t fingerprint = 0;

  bool is_zero() const { return count == 0 && index_sum == 0 && fingerprint == 0; }

  friend bool operator==(const OneSparseCell&, const OneSparseCell&) = default;
};

enum class RecoveryStatus { Found, Empty, Fail };

struct Recovery {
  RecoveryStatus status = RecoveryStatus::Empty;
  EdgeIndex index = 0;  // meaningful only when status == Found

  bool found() const { return status == RecoveryStatus::Found; }
};

/// Indices already extracted; recoveries act on the sketched vector minus
/// their indicators.
class RecoveryLedger {
 public:
  void subtract(EdgeIndex idx);
  bool contains(EdgeIndex idx) const;
  std::span<const EdgeIndex> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }

 private:
  std::vector<EdgeIndex> indices_;
};

/// l0 sampler over [0, domain) under turnstile updates.
///
/// Each of kChains independent chains holds levels 0..L (L = ceil(log2 domain)).
/// Index x sits in level l of a chain iff the chain's level value for x is
/// below 2^(L-l), so level 0 holds everything and levels are nested. The level
/// value is the top L bits of mix61(h(x)) for a pairwise hash h.
///
/// Recovery scans chain 0 then chain 1, each from level 0 upward, and returns
/// the first level whose working cell (cell minus ledger indicators) passes the
/// 1-sparse test.
class L0Sampler {
 public:
  static constexpr int kChains = 2;

  L0Sampler(std::uint64_t domain, std::uint64_t seed);

  /// Applies f[idx] += delta. Returns the number of cells touched.
  std::size_t update(EdgeIndex idx, std::int64_t delta);

  Recovery recover(const RecoveryLedger& ledger) const;
  Recovery recover() const { return recover(RecoveryLedger{}); }

  std::uint64_t domain() const { return domain_; }
  std::uint64_t seed() const { return seed_; }
  int level_count() const { return levels_; }
  std::uint64_t fingerprint_base() const { return z_; }
  /// Deepest level of the given chain containing idx.
  int depth(int chain, EdgeIndex idx) const;

  const OneSparseCell& cell(int chain, int level) const {
    return cells_[static_cast<std::size_t>(chain * levels_ + level)];
  }
  std::span<const OneSparseCell> cells() const { return cells_; }

  /// Cell-wise sum/difference; both operands must come from the same (domain, seed).
  L0Sampler& operator+=(const L0Sampler& other);
  L0Sampler& operator-=(const L0Sampler& other);

  bool is_zero() const;

  /// Appends the raw cell state (little-endian) to out.
  void append_state(std::vector<std::uint8_t>& out) const;

 private:
  void check_compatible(const L0Sampler& other) const;

  std::uint64_t domain_;
  std::uint64_t seed_;
  int levels_;  // L + 1
  int shift_;   // 61 - L
  std::uint64_t z_;
  std::array<PairwiseHash, kChains> level_hash_;
  std::vector<OneSparseCell> cells_;
};

}  // namespace densest
