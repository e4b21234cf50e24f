#include "densest/generate.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "densest/error.hpp"
#include "densest/hashing.hpp"
#include "densest/random.hpp"

namespace densest {

std::string_view to_string(StreamModel model) {
  switch (model) {
    case StreamModel::Gnm: return "gnm";
    case StreamModel::Planted: return "planted";
    case StreamModel::Churn: return "churn";
  }
  return "gnm";
}

StreamModel parse_stream_model(std::string_view name) {
  if (name == "gnm") return StreamModel::Gnm;
  if (name == "planted") return StreamModel::Planted;
  if (name == "churn") return StreamModel::Churn;
  throw Error(ErrorCode::InvalidParams, "unknown model '" + std::string(name) + "'");
}

namespace {

// Floyd's sampling of `count` distinct values from [0, universe), in draw order.
std::vector<std::uint64_t> distinct_sample(std::uint64_t universe, std::uint64_t count,
                                           std::mt19937_64& rng) {
  std::unordered_set<std::uint64_t> chosen;
  std::vector<std::uint64_t> order;
  order.reserve(count);
  for (std::uint64_t j = universe - count; j < universe; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    const std::uint64_t pick = chosen.insert(t).second ? t : j;
    if (pick == j) chosen.insert(j);
    order.push_back(pick);
  }
  return order;
}

}  // namespace

GeneratedStream generate(StreamModel model, const GenerateParams& params, std::uint64_t seed) {
  const NodeId n = params.n;
  if (n < 2) throw Error(ErrorCode::InvalidParams, "n must be at least 2");
  const std::uint64_t domain = edge_domain(n);
  if (params.m > domain) {
    throw Error(ErrorCode::InvalidParams, "m = " + std::to_string(params.m) +
                                              " exceeds n(n-1)/2 = " + std::to_string(domain));
  }
  if (model != StreamModel::Gnm && (params.k < 2 || params.k > n)) {
    throw Error(ErrorCode::InvalidParams, "clique size k must lie in [2, n]");
  }
  if (model == StreamModel::Churn && params.q == 0) {
    throw Error(ErrorCode::InvalidParams, "churn needs q >= 1");
  }

  std::mt19937_64 rng(seed);
  GeneratedStream out;
  out.stream.n = n;

  std::vector<std::uint64_t> background = distinct_sample(domain, params.m, rng);
  std::vector<std::uint64_t> inserts = background;

  if (model != StreamModel::Gnm) {
    for (std::uint64_t v : distinct_sample(n, params.k, rng)) out.clique.push_back(static_cast<NodeId>(v));
    std::sort(out.clique.begin(), out.clique.end());
    const std::unordered_set<std::uint64_t> present(background.begin(), background.end());
    for (std::size_t a = 0; a < out.clique.size(); ++a) {
      for (std::size_t b = a + 1; b < out.clique.size(); ++b) {
        const EdgeIndex idx = edge_index(out.clique[a], out.clique[b], n);
        if (!present.count(idx)) inserts.push_back(idx);
      }
    }
  }
  shuffle_in_place(inserts, rng);

  if (model != StreamModel::Churn) {
    for (std::uint64_t idx : inserts) out.stream.updates.push_back({decode_index(idx, n), +1});
    return out;
  }

  // One token per event; the k-th occurrence of an edge's token becomes its
  // k-th event (insert, then q delete/insert pairs for background edges).
  std::vector<std::uint64_t> tokens = inserts;
  for (std::uint64_t idx : background) {
    for (unsigned round = 0; round < 2 * params.q; ++round) tokens.push_back(idx);
  }
  shuffle_in_place(tokens, rng);
  std::unordered_map<std::uint64_t, unsigned> seen;
  out.stream.updates.reserve(tokens.size());
  for (std::uint64_t idx : tokens) {
    const unsigned occurrence = seen[idx]++;
    out.stream.updates.push_back({decode_index(idx, n), occurrence % 2 == 0 ? +1 : -1});
  }
  return out;
}

}  // namespace densest
