#include "densest/stream_sketch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "densest/error.hpp"

namespace densest {

namespace {

// Ceiling that ignores floating noise just above an integer.
std::size_t ceil_count(double x) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(x - 1e-9)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::string_view to_string(Preset preset) { return preset == Preset::Paper ? "paper" : "desk"; }

Preset parse_preset(std::string_view name) {
  if (name == "paper") return Preset::Paper;
  if (name == "desk") return Preset::Desk;
  throw Error(ErrorCode::InvalidConfig, "unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(AbortReason reason) {
  return reason == AbortReason::TooManySamples ? "TooManySamples" : "RecoveryExhausted";
}

SketchConfig SketchConfig::make(NodeId n, double epsilon, double c, Preset preset,
                                std::uint64_t master_seed) {
  SketchConfig cfg;
  cfg.n = n;
  cfg.epsilon = epsilon;
  cfg.c = c;
  cfg.preset = preset;
  cfg.master_seed = master_seed;
  const double log_n = std::log2(static_cast<double>(std::max<NodeId>(n, 2)));
  const double r_factor = preset == Preset::Paper ? 10.0 : 3.0;
  const double tau_factor = preset == Preset::Paper ? 24.0 : 8.0;
  cfg.partitions = ceil_count(r_factor * log_n);
  cfg.samplers_per_group = std::max<std::size_t>(8, ceil_count(tau_factor * c * log_n));
  cfg.groups = epsilon > 0.0 ? ceil_count(static_cast<double>(n) / (epsilon * epsilon)) : 1;
  return cfg;
}

void SketchConfig::validate() const {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidConfig, why); };
  if (n < 2) fail("n must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 0.5)) fail("epsilon must lie in (0, 1/2)");
  if (!(c > 0.0) || !std::isfinite(c)) fail("c must be a positive real");
  if (partitions == 0 || groups == 0 || samplers_per_group == 0) {
    fail("r, B and tau must all be at least 1");
  }
}

DensestSketch::DensestSketch(SketchConfig config)
    : config_(config), domain_(edge_domain(config.n)) {
  config_.validate();
  const std::size_t r = config_.partitions;
  const std::size_t b = config_.groups;
  const std::size_t tau = config_.samplers_per_group;
  partition_hash_.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    partition_hash_.push_back(PairwiseHash::from_seed(derive_seed(config_.master_seed, i), domain_, b));
  }
  groups_.resize(r * b);
  std::uint64_t next_seed = r;
  for (GroupState& g : groups_) {
    g.samplers.reserve(tau);
    for (std::size_t s = 0; s < tau; ++s) {
      g.samplers.emplace_back(domain_, derive_seed(config_.master_seed, next_seed++));
    }
  }
}

void DensestSketch::update(const EdgeUpdate& update) {
  const Edge& e = update.edge;
  if (e.u >= e.v || e.v >= config_.n) {
    throw Error(ErrorCode::OutOfDomain, "edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") invalid for n = " +
                                            std::to_string(config_.n));
  }
  const EdgeIndex idx = edge_index(e, config_.n);
  m_ += update.delta;
  std::uint64_t touches = 0;
  for (std::size_t i = 0; i < config_.partitions; ++i) {
    const std::size_t j = partition_hash_[i](idx);
    ++hash_evaluations_;
    GroupState& g = groups_[i * config_.groups + j];
    g.count += update.delta;
    for (L0Sampler& s : g.samplers) touches += s.update(idx, update.delta);
  }
  last_touches_ = touches;
  total_touches_ += touches;
}

double sampling_probability(const SketchConfig& config, std::int64_t m) {
  if (m <= 0) throw Error(ErrorCode::EmptyStream, "stream has no live edges");
  const double n = config.n;
  const double p =
      config.c / (config.epsilon * config.epsilon) * std::log2(n) * n / static_cast<double>(m);
  return std::min(1.0, p);
}

double small_threshold(const SketchConfig& config, std::int64_t m) {
  if (m <= 0) throw Error(ErrorCode::EmptyStream, "stream has no live edges");
  return 4.0 * config.epsilon * config.epsilon * static_cast<double>(m) /
         static_cast<double>(config.n);
}

double DensestSketch::sampling_probability() const {
  return densest::sampling_probability(config_, m_);
}

double DensestSketch::small_threshold() const { return densest::small_threshold(config_, m_); }

bool DensestSketch::is_small(std::int64_t count) const {
  const double t = std::max(1.0, small_threshold());
  return static_cast<double>(count) <= t * (1.0 + 1e-12);
}

SampleResult DensestSketch::assemble_sample(std::mt19937_64& rng) const {
  SampleResult result;
  result.p = sampling_probability();
  result.threshold = small_threshold();
  const std::size_t tau = config_.samplers_per_group;

  for (std::size_t i = 0; i < config_.partitions; ++i) {
    for (std::size_t j = 0; j < config_.groups; ++j) {
      const GroupState& g = group(i, j);
      if (g.count <= 0 || !is_small(g.count)) continue;
      GroupDiagnostics diag;
      diag.partition = i;
      diag.group = j;
      diag.count = g.count;
      diag.draws = sample_binomial(static_cast<std::uint64_t>(g.count), result.p, rng);
      result.groups.push_back(diag);
      if (diag.draws >= tau) {
        result.aborted = AbortReason::TooManySamples;
        return result;
      }
    }
  }

  std::vector<std::pair<Edge, std::size_t>> admitted;
  for (GroupDiagnostics& diag : result.groups) {
    const GroupState& g = group(diag.partition, diag.group);
    RecoveryLedger ledger;
    for (std::uint64_t slot = 0; slot < diag.draws; ++slot) {
      bool extracted = false;
      for (std::size_t k = 0; k < tau && !extracted; ++k) {
        const L0Sampler& sampler = g.samplers[(slot + k) % tau];
        const Recovery rec = sampler.recover(ledger);
        if (!rec.found() || ledger.contains(rec.index)) continue;
        ledger.subtract(rec.index);
        extracted = true;
      }
      if (!extracted) {
        result.aborted = AbortReason::RecoveryExhausted;
        return result;
      }
    }
    diag.recovered = ledger.size();
    for (EdgeIndex idx : ledger.indices()) {
      bool fated_earlier = false;
      for (std::size_t earlier = 0; earlier < diag.partition && !fated_earlier; ++earlier) {
        fated_earlier = is_small(group(earlier, group_of(earlier, idx)).count);
      }
      if (fated_earlier) continue;
      ++diag.admitted;
      admitted.emplace_back(decode_index(idx, config_.n), diag.partition);
    }
  }

  std::sort(admitted.begin(), admitted.end());
  result.edges.reserve(admitted.size());
  result.origin.reserve(admitted.size());
  for (const auto& [edge, partition] : admitted) {
    result.edges.push_back(edge);
    result.origin.push_back(partition);
  }
  return result;
}

std::size_t DensestSketch::uncovered_edges(const Graph& reference) const {
  std::size_t uncovered = 0;
  for (const Edge& e : reference.edges()) {
    const EdgeIndex idx = edge_index(e, config_.n);
    bool covered = false;
    for (std::size_t i = 0; i < config_.partitions && !covered; ++i) {
      covered = is_small(group(i, group_of(i, idx)).count);
    }
    if (!covered) ++uncovered;
  }
  return uncovered;
}

std::vector<std::uint8_t> DensestSketch::state_bytes() const {
  std::vector<std::uint8_t> out;
  put_u64(out, static_cast<std::uint64_t>(m_));
  for (const GroupState& g : groups_) {
    put_u64(out, static_cast<std::uint64_t>(g.count));
    for (const L0Sampler& s : g.samplers) s.append_state(out);
  }
  return out;
}

std::uint64_t sample_binomial(std::uint64_t g, double p, std::mt19937_64& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  if (p == 0.0) return 0;
  if (p == 1.0) return g;
  std::uint64_t successes = 0;
  for (std::uint64_t k = 0; k < g; ++k) {
    if (uniform01(rng) < p) ++successes;
  }
  return successes;
}

DensityEstimate estimate_density(const DensestSketch& sketch, std::mt19937_64& rng,
                                 SolverKind solver) {
  DensityEstimate est;
  est.sample = sketch.assemble_sample(rng);
  if (est.sample.aborted) return est;
  if (est.sample.edges.empty()) {
    est.empty_sample = true;
    return est;
  }
  Graph sampled(sketch.config().n);
  for (const Edge& e : est.sample.edges) sampled.insert(e);
  DensestResult best = solve_densest(sampled, solver);
  est.subset = std::move(best.nodes);
  est.sampled_density = best.density;
  est.estimate = best.density.to_double() / est.sample.p;
  return est;
}

}  // namespace densest
