#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densest/error.hpp"
#include "densest/solver.hpp"
#include "densest/stream_file.hpp"
#include "densest/stream_sketch.hpp"
#include "json.hpp"

namespace densest {

// Process exit codes shared by the CLI and the report types.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitTooManySamples = 3;
inline constexpr int kExitRecoveryExhausted = 4;
inline constexpr int kExitEmptyStream = 5;

int exit_code_for(AbortReason reason);
int exit_code_for(ErrorCode code);

struct RunOptions {
  SketchConfig config;
  std::uint64_t post_seed = 0;
  SolverKind solver = SolverKind::Flow;
};

struct RunReport {
  SketchConfig config;
  std::uint64_t post_seed = 0;
  SolverKind solver = SolverKind::Flow;
  std::size_t stream_length = 0;
  std::int64_t m = 0;
  double p = 0.0;
  double threshold = 0.0;
  std::optional<AbortReason> aborted;
  bool empty_sample = false;
  std::size_t sampled_edges = 0;
  DensityValue sampled_density;
  double estimate = 0.0;
  std::vector<NodeId> subgraph;
  double update_ms = 0.0;
  double post_ms = 0.0;

  int exit_code() const { return aborted ? exit_code_for(*aborted) : kExitOk; }
  nlohmann::ordered_json to_json(bool include_timings = true) const;
};

/// Feeds every update to a fresh sketch, then runs post-processing with a
/// generator seeded by post_seed. Throws EmptyStream if no edge survives.
RunReport run_stream(const StreamFile& stream, const RunOptions& options);

struct ExactReport {
  NodeId n = 0;
  std::size_t m = 0;
  SolverKind solver = SolverKind::Flow;
  DensestResult best;

  nlohmann::ordered_json to_json() const;
};

/// Replays the stream exactly and solves the final graph.
ExactReport exact_stream(const StreamFile& stream, SolverKind solver = SolverKind::Flow);

struct CompareReport {
  std::size_t trials = 0;
  DensityValue d_star;
  double band_low = 0.0;
  double band_high = 0.0;
  std::vector<double> ratios;  // estimate / d*, one per non-aborted trial
  std::size_t aborts = 0;
  std::size_t too_many_samples = 0;
  std::size_t recovery_exhausted = 0;
  std::size_t in_band = 0;
  std::vector<RunReport> runs;

  double abort_rate() const { return trials ? static_cast<double>(aborts) / static_cast<double>(trials) : 0.0; }
  double in_band_fraction() const {
    return trials ? static_cast<double>(in_band) / static_cast<double>(trials) : 0.0;
  }
  nlohmann::ordered_json to_json(bool include_runs = false) const;
};

/// Runs `trials` independent runs; trial t uses master seed base + t and post
/// seed base + t. A trial is in band when (1-eps)/(1+eps) <= ratio <= 1 + eps_upper.
/// Aborted trials count against the band.
CompareReport compare_stream(const StreamFile& stream, const RunOptions& base, std::size_t trials,
                             double eps_upper);

/// Default upper band slack: 1 + eps_upper = 1.05 (1 + eps).
inline double default_eps_upper(double epsilon) { return 1.05 * (1.0 + epsilon) - 1.0; }

}  // namespace densest
