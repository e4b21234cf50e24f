#pragma once

// Test-only reference implementations. None of these share code paths with
// the library routines they check.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "densest/graph.hpp"

namespace densest::testing {

struct Arc {
  std::size_t from;
  std::size_t to;
  std::int64_t capacity;
};

/// Minimum s-t cut by enumerating every node bipartition.
inline std::int64_t brute_force_min_cut(std::size_t nodes, const std::vector<Arc>& arcs,
                                        std::size_t source, std::size_t sink) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << nodes); ++mask) {
    const bool s_in = (mask >> source) & 1u;
    const bool t_in = (mask >> sink) & 1u;
    if (!s_in || t_in) continue;
    std::int64_t cut = 0;
    for (const Arc& a : arcs) {
      if (((mask >> a.from) & 1u) && !((mask >> a.to) & 1u)) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

inline Graph random_graph(NodeId n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  Graph g(n);
  for (NodeId v = 1; v < n; ++v) {
    for (NodeId u = 0; u < v; ++u) {
      if (coin(rng)) g.insert({u, v});
    }
  }
  return g;
}

inline Graph clique(NodeId n, NodeId k, NodeId offset = 0) {
  Graph g(n);
  for (NodeId a = 0; a < k; ++a) {
    for (NodeId b = a + 1; b < k; ++b) g.insert({offset + a, offset + b});
  }
  return g;
}

inline Graph k4_with_pendant() {
  Graph g(5);
  for (NodeId a = 0; a < 4; ++a) {
    for (NodeId b = a + 1; b < 4; ++b) g.insert({a, b});
  }
  g.insert({3, 4});
  return g;
}

inline Graph star(NodeId leaves) {
  Graph g(leaves + 1);
  for (NodeId v = 1; v <= leaves; ++v) g.insert({0, v});
  return g;
}

/// Random strict-turnstile stream: inserts absent edges, deletes present ones.
inline std::vector<EdgeUpdate> random_turnstile_stream(NodeId n, std::size_t length,
                                                       double delete_bias, std::mt19937_64& rng) {
  std::vector<EdgeUpdate> out;
  std::vector<Edge> live;
  std::set<Edge> present;
  std::uniform_int_distribution<NodeId> node(0, n - 1);
  std::bernoulli_distribution want_delete(delete_bias);
  while (out.size() < length) {
    if (!live.empty() && want_delete(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
      const std::size_t i = pick(rng);
      const Edge e = live[i];
      live[i] = live.back();
      live.pop_back();
      present.erase(e);
      out.push_back({e, -1});
    } else {
      NodeId a = node(rng);
      NodeId b = node(rng);
      if (a == b) continue;
      const Edge e = Edge::canonical(a, b);
      if (present.count(e)) continue;
      present.insert(e);
      live.push_back(e);
      out.push_back({e, +1});
    }
  }
  return out;
}

/// Standard error of a Bernoulli(q) frequency over `trials`.
inline double bernoulli_se(double q, double trials) { return std::sqrt(q * (1.0 - q) / trials); }

}  // namespace densest::testing
