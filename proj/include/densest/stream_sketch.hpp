#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "densest/graph.hpp"
#include "densest/hashing.hpp"
#include "densest/l0_sampler.hpp"
#include "densest/random.hpp"
#include "densest/solver.hpp"

namespace densest {

enum class Preset { Paper, Desk };

std::string_view to_string(Preset preset);
Preset parse_preset(std::string_view name);

struct SketchConfig {
  NodeId n = 0;
  double epsilon = 0.45;
  double c = 0.5;
  std::size_t partitions = 1;          // r
  std::size_t groups = 1;              // B
  std::size_t samplers_per_group = 8;  // tau
  std::uint64_t master_seed = 0;
  Preset preset = Preset::Paper;
  bool overridden = false;  // r, B or tau differ from the preset formulas

  /// Fills r, B and tau from the preset formulas (log base 2):
  ///   paper: r = ceil(10 log n), tau = max(8, ceil(24 c log n))
  ///   desk:  r = ceil(3 log n),  tau = max(8, ceil(8 c log n))
  /// and B = ceil(n / eps^2) for both.
  static SketchConfig make(NodeId n, double epsilon, double c, Preset preset = Preset::Paper,
                           std::uint64_t master_seed = 0);

  /// Throws InvalidConfig unless n >= 2, 0 < eps < 1/2, c > 0 and r, B, tau >= 1.
  void validate() const;
};

/// min(1, c eps^-2 log2(n) n / m); throws EmptyStream for m <= 0.
double sampling_probability(const SketchConfig& config, std::int64_t m);

/// t = 4 eps^2 m / n; throws EmptyStream for m <= 0.
double small_threshold(const SketchConfig& config, std::int64_t m);

struct GroupState {
  std::int64_t count = 0;
  std::vector<L0Sampler> samplers;
};

enum class AbortReason { TooManySamples, RecoveryExhausted };

std::string_view to_string(AbortReason reason);

struct GroupDiagnostics {
  std::size_t partition = 0;
  std::size_t group = 0;
  std::int64_t count = 0;
  std::uint64_t draws = 0;      // X_{i,j}
  std::uint64_t recovered = 0;  // edges extracted from the samplers
  std::uint64_t admitted = 0;   // recovered edges passing the fate filter
};

struct SampleResult {
  double p = 0.0;
  double threshold = 0.0;            // t = 4 eps^2 m / n
  std::vector<Edge> edges;           // S, sorted; empty when aborted
  std::vector<std::size_t> origin;   // partition that admitted edges[k]
  std::vector<GroupDiagnostics> groups;  // small non-empty groups, (i, j) ascending
  std::optional<AbortReason> aborted;
};

/// One-pass sketch for densest-subgraph estimation in a dynamic graph stream:
/// r hash partitions of the edge set into B groups, an exact counter per group
/// and tau l0 samplers per group. All state is linear in the edge multiplicities.
class DensestSketch {
 public:
  explicit DensestSketch(SketchConfig config);

  const SketchConfig& config() const { return config_; }

  /// Caller guarantees strict-turnstile validity.
  void update(const EdgeUpdate& update);

  std::int64_t edge_count() const { return m_; }
  std::uint64_t domain() const { return domain_; }

  /// Sampling probability min(1, c eps^-2 log2(n) n / m).
  double sampling_probability() const;
  /// t = 4 eps^2 m / n.
  double small_threshold() const;
  /// count <= max(t, 1).
  bool is_small(std::int64_t count) const;

  std::size_t group_of(std::size_t partition, EdgeIndex idx) const {
    return partition_hash_[partition](idx);
  }
  const PairwiseHash& partition_hash(std::size_t partition) const {
    return partition_hash_[partition];
  }
  const GroupState& group(std::size_t partition, std::size_t j) const {
    return groups_[partition * config_.groups + j];
  }

  /// Post-processing: binomial draws per small group, ledgered extraction and
  /// the fate filter. Throws EmptyStream when m = 0.
  SampleResult assemble_sample(std::mt19937_64& rng) const;

  /// Live reference edges whose group is large in every partition.
  std::size_t uncovered_edges(const Graph& reference) const;

  /// Sampler cells touched by the most recent update / by all updates.
  std::uint64_t last_update_touches() const { return last_touches_; }
  std::uint64_t total_touches() const { return total_touches_; }
  std::uint64_t hash_evaluations() const { return hash_evaluations_; }

  /// Serialized m, group counters and sampler cells (little-endian).
  std::vector<std::uint8_t> state_bytes() const;

 private:
  SketchConfig config_;
  std::uint64_t domain_;
  std::int64_t m_ = 0;
  std::vector<PairwiseHash> partition_hash_;
  std::vector<GroupState> groups_;
  std::uint64_t last_touches_ = 0;
  std::uint64_t total_touches_ = 0;
  std::uint64_t hash_evaluations_ = 0;
};

/// Exact Binomial(g, p) as a sum of g Bernoulli draws.
std::uint64_t sample_binomial(std::uint64_t g, double p, std::mt19937_64& rng);

struct DensityEstimate {
  SampleResult sample;
  std::vector<NodeId> subset;  // U' (empty when nothing was sampled or on abort)
  DensityValue sampled_density;  // d(G'_{U'})
  double estimate = 0.0;         // d(G'_{U'}) / p
  bool empty_sample = false;
};

/// Builds G' = (V, S) and returns p^-1 max_U d(G'_U).
DensityEstimate estimate_density(const DensestSketch& sketch, std::mt19937_64& rng,
                                 SolverKind solver = SolverKind::Flow);

}  // namespace densest
