#include "densest/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "densest/error.hpp"

namespace densest {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

nlohmann::ordered_json density_json(const DensityValue& d) {
  const DensityValue r = d.reduced();
  return {{"numerator", r.numerator()}, {"denominator", r.denominator()}, {"value", r.to_double()}};
}

}  // namespace

int exit_code_for(AbortReason reason) {
  return reason == AbortReason::TooManySamples ? kExitTooManySamples : kExitRecoveryExhausted;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::NodeOutOfRange:
    case ErrorCode::TurnstileViolation:
    case ErrorCode::Io:
      return kExitParse;
    case ErrorCode::EmptyStream:
      return kExitEmptyStream;
    default:
      return kExitUsage;
  }
}

nlohmann::ordered_json RunReport::to_json(bool include_timings) const {
  nlohmann::ordered_json j;
  j["command"] = "run";
  j["n"] = config.n;
  j["m"] = m;
  j["stream_length"] = stream_length;
  j["preset"] = to_string(config.preset);
  j["overridden"] = config.overridden;
  j["epsilon"] = config.epsilon;
  j["c"] = config.c;
  j["r"] = config.partitions;
  j["B"] = config.groups;
  j["tau"] = config.samplers_per_group;
  j["p"] = p;
  j["t"] = threshold;
  j["aborted"] = aborted ? nlohmann::ordered_json(std::string(to_string(*aborted))) : nlohmann::ordered_json();
  j["empty_sample"] = empty_sample;
  j["sampled_edges"] = sampled_edges;
  j["sampled_density"] = density_json(sampled_density);
  j["estimate"] = estimate;
  j["subgraph"] = subgraph;
  j["solver"] = to_string(solver);
  j["seed"] = config.master_seed;
  j["post_seed"] = post_seed;
  if (include_timings) j["timings_ms"] = {{"update", update_ms}, {"post", post_ms}};
  return j;
}

RunReport run_stream(const StreamFile& stream, const RunOptions& options) {
  if (options.config.n != stream.n) {
    throw Error(ErrorCode::InvalidConfig, "config n does not match the stream header");
  }
  RunReport report;
  report.config = options.config;
  report.post_seed = options.post_seed;
  report.solver = options.solver;
  report.stream_length = stream.updates.size();

  auto start = Clock::now();
  DensestSketch sketch(options.config);
  for (const EdgeUpdate& up : stream.updates) sketch.update(up);
  report.update_ms = elapsed_ms(start);
  report.m = sketch.edge_count();

  start = Clock::now();
  std::mt19937_64 rng(options.post_seed);
  DensityEstimate est = estimate_density(sketch, rng, options.solver);
  report.post_ms = elapsed_ms(start);

  report.p = est.sample.p;
  report.threshold = est.sample.threshold;
  report.aborted = est.sample.aborted;
  report.empty_sample = est.empty_sample;
  report.sampled_edges = est.sample.edges.size();
  report.sampled_density = est.sampled_density;
  report.estimate = est.estimate;
  report.subgraph = std::move(est.subset);
  return report;
}

nlohmann::ordered_json ExactReport::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = "exact";
  j["n"] = n;
  j["m"] = m;
  j["solver"] = to_string(solver);
  j["d_star"] = density_json(best.density);
  j["subgraph"] = best.nodes;
  return j;
}

ExactReport exact_stream(const StreamFile& stream, SolverKind solver) {
  const Graph g = final_graph(stream);
  ExactReport report;
  report.n = stream.n;
  report.m = g.edge_count();
  report.solver = solver;
  report.best = solve_densest(g, solver);
  return report;
}

nlohmann::ordered_json CompareReport::to_json(bool include_runs) const {
  nlohmann::ordered_json j;
  j["command"] = "compare";
  j["trials"] = trials;
  j["d_star"] = density_json(d_star);
  j["band"] = {band_low, band_high};
  j["aborts"] = aborts;
  j["abort_rate"] = abort_rate();
  j["aborts_by_reason"] = {{"TooManySamples", too_many_samples},
                           {"RecoveryExhausted", recovery_exhausted}};
  j["in_band"] = in_band;
  j["in_band_fraction"] = in_band_fraction();
  if (!ratios.empty()) {
    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    j["ratio_min"] = sorted.front();
    j["ratio_median"] = sorted[sorted.size() / 2];
    j["ratio_max"] = sorted.back();
    j["ratio_mean"] = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  }
  j["ratios"] = ratios;
  if (include_runs) {
    nlohmann::ordered_json runs_json = nlohmann::ordered_json::array();
    for (const RunReport& r : runs) runs_json.push_back(r.to_json(false));
    j["runs"] = std::move(runs_json);
  }
  return j;
}

CompareReport compare_stream(const StreamFile& stream, const RunOptions& base, std::size_t trials,
                             double eps_upper) {
  if (trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
  const ExactReport exact = exact_stream(stream, SolverKind::Flow);
  if (exact.m == 0) throw Error(ErrorCode::EmptyStream, "stream has no live edges");

  CompareReport report;
  report.trials = trials;
  report.d_star = exact.best.density;
  const double eps = base.config.epsilon;
  report.band_low = (1.0 - eps) / (1.0 + eps);
  report.band_high = 1.0 + eps_upper;
  const double d_star = report.d_star.to_double();

  for (std::size_t t = 0; t < trials; ++t) {
    RunOptions options = base;
    options.config.master_seed = base.config.master_seed + t;
    options.post_seed = base.post_seed + t;
    RunReport run = run_stream(stream, options);
    if (run.aborted) {
      ++report.aborts;
      if (*run.aborted == AbortReason::TooManySamples) {
        ++report.too_many_samples;
      } else {
        ++report.recovery_exhausted;
      }
    } else {
      const double ratio = run.estimate / d_star;
      report.ratios.push_back(ratio);
      if (ratio >= report.band_low && ratio <= report.band_high) ++report.in_band;
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace densest
