#include "densest/l0_sampler.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "densest/error.hpp"

namespace densest {

void RecoveryLedger::subtract(EdgeIndex idx) {
  if (contains(idx)) {
    throw Error(ErrorCode::AlreadySubtracted, "index " + std::to_string(idx) + " already subtracted");
  }
  indices_.push_back(idx);
}

bool RecoveryLedger::contains(EdgeIndex idx) const {
  return std::find(indices_.begin(), indices_.end(), idx) != indices_.end();
}

namespace {

PairwiseHash chain_hash(std::uint64_t& state, std::uint64_t domain, int levels) {
  return PairwiseHash::from_seed(splitmix64(state), domain, std::uint64_t{1} << (levels - 1));
}

}  // namespace

L0Sampler::L0Sampler(std::uint64_t domain, std::uint64_t seed)
    : domain_(domain),
      seed_(seed),
      levels_(domain == 0 ? 1 : static_cast<int>(std::bit_width(domain - 1)) + 1),
      shift_(61 - (levels_ - 1)),
      z_(0),
      level_hash_{PairwiseHash(1, 0, std::max<std::uint64_t>(domain, 1), 1),
                  PairwiseHash(1, 0, std::max<std::uint64_t>(domain, 1), 1)} {
  if (domain == 0) throw Error(ErrorCode::InvalidArgument, "l0 sampler domain must be >= 1");
  std::uint64_t state = seed;
  for (auto& h : level_hash_) h = chain_hash(state, domain, levels_);
  z_ = 2 + splitmix64(state) % (kMersenne61 - 2);
  cells_.assign(static_cast<std::size_t>(kChains * levels_), OneSparseCell{});
}

int L0Sampler::depth(int chain, EdgeIndex idx) const {
  const std::uint64_t value = mix61(level_hash_[static_cast<std::size_t>(chain)].raw(idx)) >> shift_;
  const int top = levels_ - 1;
  return value == 0 ? top : top - static_cast<int>(std::bit_width(value));
}

std::size_t L0Sampler::update(EdgeIndex idx, std::int64_t delta) {
  if (idx >= domain_) {
    throw Error(ErrorCode::OutOfDomain,
                "index " + std::to_string(idx) + " outside [0, " + std::to_string(domain_) + ")");
  }
  const std::uint64_t fp = mulmod61(signed_mod61(delta), powmod61(z_, idx));
  const auto weighted = delta * static_cast<std::int64_t>(idx);
  std::size_t touched = 0;
  for (int chain = 0; chain < kChains; ++chain) {
    const int deepest = depth(chain, idx);
    OneSparseCell* row = &cells_[static_cast<std::size_t>(chain * levels_)];
    for (int level = 0; level <= deepest; ++level) {
      row[level].count += delta;
      row[level].index_sum += weighted;
      row[level].fingerprint = addmod61(row[level].fingerprint, fp);
    }
    touched += static_cast<std::size_t>(deepest + 1);
  }
  return touched;
}

Recovery L0Sampler::recover(const RecoveryLedger& ledger) const {
  struct Removed {
    std::array<int, kChains> depth;
    std::int64_t index;
    std::uint64_t power;
  };
  std::vector<Removed> removed;
  removed.reserve(ledger.size());
  for (EdgeIndex idx : ledger.indices()) {
    if (idx >= domain_) continue;
    Removed r{{}, static_cast<std::int64_t>(idx), powmod61(z_, idx)};
    for (int chain = 0; chain < kChains; ++chain) r.depth[chain] = depth(chain, idx);
    removed.push_back(r);
  }

  bool any_nonzero = false;
  for (int chain = 0; chain < kChains; ++chain) {
    for (int level = 0; level < levels_; ++level) {
      OneSparseCell w = cell(chain, level);
      for (const Removed& r : removed) {
        if (r.depth[chain] < level) continue;
        w.count -= 1;
        w.index_sum -= r.index;
        w.fingerprint = submod61(w.fingerprint, r.power);
      }
      if (w.is_zero()) break;  // deeper levels of this chain are subsets
      any_nonzero = true;
      if (w.count == 0 || w.index_sum % w.count != 0) continue;
      const std::int64_t x = w.index_sum / w.count;
      if (x < 0 || static_cast<std::uint64_t>(x) >= domain_) continue;
      const auto idx = static_cast<EdgeIndex>(x);
      if (depth(chain, idx) < level) continue;
      if (mulmod61(signed_mod61(w.count), powmod61(z_, idx)) != w.fingerprint) continue;
      return {RecoveryStatus::Found, idx};
    }
  }
  return {any_nonzero ? RecoveryStatus::Fail : RecoveryStatus::Empty, 0};
}

void L0Sampler::check_compatible(const L0Sampler& other) const {
  if (other.domain_ != domain_ || other.seed_ != seed_) {
    throw Error(ErrorCode::InvalidArgument, "l0 samplers must share domain and seed to combine");
  }
}

L0Sampler& L0Sampler::operator+=(const L0Sampler& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].count += other.cells_[i].count;
    cells_[i].index_sum += other.cells_[i].index_sum;
    cells_[i].fingerprint = addmod61(cells_[i].fingerprint, other.cells_[i].fingerprint);
  }
  return *this;
}

L0Sampler& L0Sampler::operator-=(const L0Sampler& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i].count -= other.cells_[i].count;
    cells_[i].index_sum -= other.cells_[i].index_sum;
    cells_[i].fingerprint = submod61(cells_[i].fingerprint, other.cells_[i].fingerprint);
  }
  return *this;
}

bool L0Sampler::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const OneSparseCell& c) { return c.is_zero(); });
}

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

void L0Sampler::append_state(std::vector<std::uint8_t>& out) const {
  for (const OneSparseCell& c : cells_) {
    put_u64(out, static_cast<std::uint64_t>(c.count));
    put_u64(out, static_cast<std::uint64_t>(c.index_sum));
    put_u64(out, c.fingerprint);
  }
}

}  // namespace densest
