// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "densest/experiment.hpp"
#include "densest/generate.hpp"
#include "densest/l0_sampler.hpp"
#include "densest/solver.hpp"
#include "densest/stream_sketch.hpp"
#include "oracles.hpp"

using namespace densest;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// c such that p = min(1, c eps^-2 log2(n) n / m) equals target.
double c_for_p(double target, NodeId n, std::int64_t m, double eps) {
  return target * static_cast<double>(m) * eps * eps / (std::log2(static_cast<double>(n)) * n);
}

// 1. Exact solver against brute force, greedy within factor 2.
Outcome exact_oracle() {
  std::mt19937_64 rng(20240101);
  int exact_ok = 0;
  int greedy_ok = 0;
  constexpr int kGraphs = 200;
  for (int k = 0; k < kGraphs; ++k) {
    const auto n = static_cast<NodeId>(2 + rng() % 11);
    const double density = 0.1 + 0.85 * (k % 10) / 9.0;
    const Graph g = densest::testing::random_graph(n, density, rng);
    const DensityValue brute = brute_force_densest(g).density;
    const DensityValue exact = exact_densest(g).density;
    exact_ok += exact == brute;
    if (g.edge_count() == 0) {
      ++greedy_ok;
      continue;
    }
    const DensityValue greedy = charikar_greedy(g).density;
    greedy_ok += DensityValue(2 * greedy.numerator(), greedy.denominator()) >= brute;
  }
  return {exact_ok == kGraphs && greedy_ok == kGraphs,
          fmt("exact==brute %d/%d, greedy>=d*/2 %d/%d", exact_ok, kGraphs, greedy_ok, kGraphs)};
}

// 2. Per-edge and pairwise inclusion frequencies of the assembled sample.
Outcome sampling_marginals() {
  constexpr NodeId kN = 32;
  constexpr double kEps = 0.45;
  constexpr int kRuns = 10'000;
  std::mt19937_64 rng(77);
  const Graph g = [&] {
    std::vector<Edge> all;
    for (NodeId v = 1; v < kN; ++v)
      for (NodeId u = 0; u < v; ++u) all.push_back({u, v});
    shuffle_in_place(all, rng);
    Graph out(kN);
    for (std::size_t k = 0; k < 200; ++k) out.insert(all[k]);
    return out;
  }();
  const std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const double c = c_for_p(0.3, kN, 200, kEps);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (pairs.size() < 20) {
    const std::size_t a = uniform_below(rng, edges.size());
    const std::size_t b = uniform_below(rng, edges.size());
    if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
  }

  std::vector<int> hits(edges.size(), 0);
  std::vector<int> joint(pairs.size(), 0);
  std::vector<char> in(edges.size());
  int completed = 0;
  double p = 0.0;
  for (int run = 0; run < kRuns; ++run) {
    DensestSketch sk(SketchConfig::make(kN, kEps, c, Preset::Desk, rng()));
    for (const Edge& e : edges) sk.update({e, +1});
    std::mt19937_64 post(rng());
    const SampleResult sample = sk.assemble_sample(post);
    if (sample.aborted) continue;
    ++completed;
    p = sample.p;
    std::fill(in.begin(), in.end(), 0);
    for (const Edge& e : sample.edges) {
      in[static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin())] = 1;
    }
    for (std::size_t k = 0; k < edges.size(); ++k) hits[k] += in[k];
    for (std::size_t k = 0; k < pairs.size(); ++k) joint[k] += in[pairs[k].first] && in[pairs[k].second];
  }

  const double se = densest::testing::bernoulli_se(p, completed);
  const double se2 = densest::testing::bernoulli_se(p * p, completed);
  int edges_ok = 0;
  for (int h : hits) edges_ok += std::abs(h / static_cast<double>(completed) - p) <= 4 * se;
  int pairs_ok = 0;
  for (int h : joint) pairs_ok += std::abs(h / static_cast<double>(completed) - p * p) <= 4 * se2;
  const bool pass = completed > 0 && edges_ok >= 0.95 * edges.size() && pairs_ok == 20;
  return {pass, fmt("p=%.4f runs=%d aborts=%d edges within 4SE %d/%zu, pairs within 4SE %d/20", p,
                    completed, kRuns - completed, edges_ok, edges.size(), pairs_ok)};
}

// 3. In the p = 1 regime the sample is the live edge set and the estimate is d*.
Outcome clamp_exactness() {
  std::mt19937_64 rng(31337);
  constexpr int kTrials = 100;
  int exact = 0;
  int aborts = 0;
  int wrong = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const NodeId n = std::array<NodeId, 3>{16, 32, 64}[trial % 3];
    const auto updates = densest::testing::random_turnstile_stream(n, 60 + rng() % 400, 0.35, rng);
    const Graph live = replay(n, updates);
    if (live.edge_count() == 0) {
      --trial;
      continue;
    }
    DensestSketch sk(SketchConfig::make(n, 0.45, 0.5, Preset::Desk, rng()));
    for (const EdgeUpdate& up : updates) sk.update(up);
    if (sk.sampling_probability() < 1.0) {
      ++wrong;
      continue;
    }
    std::mt19937_64 post(rng());
    const DensityEstimate est = estimate_density(sk, post);
    if (est.sample.aborted) {
      ++aborts;
      continue;
    }
    const DensestResult truth = exact_densest(live);
    const bool same_edges =
        std::equal(live.edges().begin(), live.edges().end(), est.sample.edges.begin(),
                   est.sample.edges.end());
    if (same_edges && est.sampled_density == truth.density &&
        est.estimate == truth.density.to_double()) {
      ++exact;
    } else {
      ++wrong;
    }
  }
  return {exact >= 99 && wrong == 0,
          fmt("exact %d/%d, in-band aborts %d, wrong answers %d", exact, kTrials, aborts, wrong)};
}

struct PlantedWorkload {
  StreamFile stream;
  std::vector<NodeId> clique;
  DensestResult truth;
  double c = 0.0;
};

PlantedWorkload planted_workload() {
  PlantedWorkload w;
  const GeneratedStream g = generate(StreamModel::Planted, {64, 600, 12, 0}, 7);
  w.stream = g.stream;
  w.clique = g.clique;
  const Graph final = final_graph(g.stream);
  w.truth = exact_densest(final);
  w.c = c_for_p(0.4, 64, static_cast<std::int64_t>(final.edge_count()), 0.45);
  return w;
}

// 4. Estimate / d* inside the band on the planted workload.
Outcome end_to_end(const PlantedWorkload& w) {
  RunOptions base;
  base.config = SketchConfig::make(64, 0.45, w.c, Preset::Paper, 4000);
  base.post_seed = 4000;
  const CompareReport r = compare_stream(w.stream, base, 50, default_eps_upper(0.45));
  const bool clique_inside = std::includes(w.truth.nodes.begin(), w.truth.nodes.end(),
                                           w.clique.begin(), w.clique.end());
  const auto [lo, hi] = std::minmax_element(r.ratios.begin(), r.ratios.end());
  return {r.in_band >= 45 && clique_inside,
          fmt("d*=%s |U*|=%zu contains clique=%s; in band [%.3f, %.3f]: %zu/50, ratios %.3f..%.3f, "
              "aborts %zu",
              w.truth.density.reduced().to_string().c_str(), w.truth.nodes.size(),
              clique_inside ? "yes" : "no", r.band_low, r.band_high, r.in_band,
              r.ratios.empty() ? 0.0 : *lo, r.ratios.empty() ? 0.0 : *hi, r.aborts)};
}

// 5. No aborts with the paper-preset tau over 100 trials.
Outcome abort_rarity(const PlantedWorkload& w) {
  RunOptions base;
  base.config = SketchConfig::make(64, 0.45, w.c, Preset::Paper, 5000);
  base.post_seed = 5000;
  const CompareReport r = compare_stream(w.stream, base, 100, default_eps_upper(0.45));
  return {r.aborts == 0, fmt("tau=%zu r=%zu B=%zu; aborts %zu/100 (TooManySamples %zu, "
                             "RecoveryExhausted %zu)",
                             base.config.samplers_per_group, base.config.partitions,
                             base.config.groups, r.aborts, r.too_many_samples,
                             r.recovery_exhausted)};
}

// 6. l0 sampler soundness, cancellation, uniformity and distinctness.
Outcome l0_suite() {
  std::mt19937_64 rng(606);
  int unsound = 0;
  int not_distinct = 0;
  int found = 0;
  constexpr int kTrials = 100'000;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::uint64_t domain = 2 + uniform_below(rng, 4000);
    L0Sampler s(domain, rng());
    std::map<EdgeIndex, std::int64_t> f;
    const std::uint64_t touches = 1 + uniform_below(rng, 12);
    for (std::uint64_t k = 0; k < touches; ++k) {
      // Edge multiplicities stay in {0, 1}: insert if absent, delete if present.
      const EdgeIndex idx = uniform_below(rng, domain);
      const std::int64_t delta = f[idx] == 0 ? 1 : -1;
      s.update(idx, delta);
      f[idx] += delta;
    }
    std::set<EdgeIndex> support;
    for (const auto& [idx, v] : f)
      if (v != 0) support.insert(idx);
    RecoveryLedger ledger;
    while (true) {
      const Recovery r = s.recover(ledger);
      if (!r.found()) break;
      ++found;
      if (!support.count(r.index) || ledger.contains(r.index)) {
        ++unsound;
        break;
      }
      ledger.subtract(r.index);
    }
    const auto idx = ledger.indices();
    std::set<EdgeIndex> distinct(idx.begin(), idx.end());
    not_distinct += distinct.size() != idx.size();
  }

  int not_empty = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t domain = 2 + uniform_below(rng, 4000);
    L0Sampler s(domain, rng());
    std::vector<EdgeIndex> inserted;
    for (int k = 0; k < 20; ++k) {
      inserted.push_back(uniform_below(rng, domain));
      s.update(inserted.back(), +1);
    }
    shuffle_in_place(inserted, rng);
    for (EdgeIndex x : inserted) s.update(x, -1);
    not_empty += s.recover().status != RecoveryStatus::Empty || !s.is_zero();
  }

  constexpr std::uint64_t kDomain = 2016;
  std::vector<EdgeIndex> support;
  while (support.size() < 10) {
    const EdgeIndex x = uniform_below(rng, kDomain);
    if (std::find(support.begin(), support.end(), x) == support.end()) support.push_back(x);
  }
  std::map<EdgeIndex, int> counts;
  int successes = 0;
  constexpr int kSeeds = 10'000;
  for (int seed = 0; seed < kSeeds; ++seed) {
    L0Sampler s(kDomain, rng());
    for (EdgeIndex x : support) s.update(x, +1);
    const Recovery r = s.recover();
    if (!r.found()) continue;
    ++successes;
    ++counts[r.index];
  }
  const double q = 0.1;
  const double sigma = std::sqrt(successes * q * (1 - q));
  int uniform_ok = 0;
  double worst = 0.0;
  for (EdgeIndex x : support) {
    const double z = std::abs(counts[x] - successes * q) / sigma;
    worst = std::max(worst, z);
    uniform_ok += z <= 4.0;
  }
  const double fail_rate = 1.0 - successes / static_cast<double>(kSeeds);
  const bool pass = unsound == 0 && not_distinct == 0 && not_empty == 0 && uniform_ok == 10 &&
                    fail_rate < 0.15;
  return {pass, fmt("unsound %d (of %d recoveries), non-distinct %d, cancelled-not-empty %d/1000, "
                    "uniform %d/10 (max z %.2f), fail rate %.3f",
                    unsound, found, not_distinct, not_empty, uniform_ok, worst, fail_rate)};
}

// 7. Group counters match a replay and update cost is position-independent.
Outcome counter_exactness() {
  std::mt19937_64 rng(707);
  int mismatches = 0;
  int sum_errors = 0;
  int touch_mismatches = 0;
  std::uint64_t updates_checked = 0;
  for (int stream = 0; stream < 5; ++stream) {
    constexpr NodeId kN = 48;
    const auto updates = densest::testing::random_turnstile_stream(kN, 1000, 0.4, rng);
    const SketchConfig cfg = SketchConfig::make(kN, 0.4, 0.3, Preset::Desk, rng());
    DensestSketch sk(cfg);
    std::map<Edge, std::uint64_t> touches;
    for (const EdgeUpdate& up : updates) {
      sk.update(up);
      ++updates_checked;
      const auto [it, fresh] = touches.emplace(up.edge, sk.last_update_touches());
      if (!fresh && it->second != sk.last_update_touches()) ++touch_mismatches;
    }
    // A fresh sketch charges the same edge the same number of touches.
    int probed = 0;
    for (auto it = touches.begin(); it != touches.end() && probed < 10; ++it, ++probed) {
      DensestSketch probe(cfg);
      probe.update({it->first, +1});
      if (probe.last_update_touches() != it->second) ++touch_mismatches;
    }
    const Graph live = replay(kN, updates);
    for (std::size_t i = 0; i < cfg.partitions; ++i) {
      std::vector<std::int64_t> expected(cfg.groups, 0);
      for (const Edge& e : live.edges()) ++expected[sk.group_of(i, edge_index(e, kN))];
      std::int64_t total = 0;
      for (std::size_t j = 0; j < cfg.groups; ++j) {
        mismatches += sk.group(i, j).count != expected[j];
        total += sk.group(i, j).count;
      }
      sum_errors += total != static_cast<std::int64_t>(live.edge_count());
    }
  }
  return {mismatches == 0 && sum_errors == 0 && touch_mismatches == 0,
          fmt("5 streams x 1000 updates: counter mismatches %d, partition sum errors %d, "
              "touch-count mismatches %d over %llu updates",
              mismatches, sum_errors, touch_mismatches,
              static_cast<unsigned long long>(updates_checked))};
}

// 8. Churned and churn-free streams of the same final graph give identical state.
Outcome deletion_robustness() {
  int identical = 0;
  constexpr int kSeeds = 3;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const GeneratedStream churn = generate(StreamModel::Churn, {64, 600, 12, 2}, seed);
    const GeneratedStream planted = generate(StreamModel::Planted, {64, 600, 12, 0}, seed);
    const SketchConfig cfg = SketchConfig::make(64, 0.45, 0.5, Preset::Desk, 900 + seed);
    DensestSketch a(cfg);
    for (const EdgeUpdate& up : churn.stream.updates) a.update(up);
    DensestSketch b(cfg);
    for (const EdgeUpdate& up : planted.stream.updates) b.update(up);
    identical += a.state_bytes() == b.state_bytes();
  }
  return {identical == kSeeds, fmt("q=2 churn vs planted: identical state %d/%d", identical, kSeeds)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& criterion) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criterion();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    failures += !o.pass;
  };

  report(1, "exact solver oracle equivalence", exact_oracle);
  report(2, "sampling marginal fidelity", sampling_marginals);
  report(3, "clamp-degeneracy exactness", clamp_exactness);
  const PlantedWorkload w = planted_workload();
  report(4, "end-to-end approximation", [&] { return end_to_end(w); });
  report(5, "abort rarity", [&] { return abort_rarity(w); });
  report(6, "l0 sampler suite", l0_suite);
  report(7, "counter and partition exactness", counter_exactness);
  report(8, "deletion robustness", deletion_robustness);
  return failures == 0 ? 0 : 1;
}
