#include "densest/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "densest/error.hpp"

namespace densest {

Edge Edge::canonical(NodeId a, NodeId b) {
  if (a == b) {
    throw Error(ErrorCode::NonCanonical, "self-loop on node " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

DensityValue::DensityValue(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "density denominator must be positive");
  }
}

DensityValue DensityValue::reduced() const {
  const std::uint64_t g = std::gcd(num_, den_);
  return {num_ / g, den_ / g};
}

std::string DensityValue::to_string() const {
  const DensityValue r = reduced();
  return std::to_string(r.num_) + "/" + std::to_string(r.den_);
}

bool operator==(const DensityValue& a, const DensityValue& b) {
  return static_cast<unsigned __int128>(a.num_) * b.den_ ==
         static_cast<unsigned __int128>(b.num_) * a.den_;
}

std::strong_ordering operator<=>(const DensityValue& a, const DensityValue& b) {
  const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
  const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void Graph::check_edge(const Edge& e) const {
  if (e.u >= e.v) {
    throw Error(ErrorCode::NonCanonical, "edge (" + std::to_string(e.u) + "," +
                                             std::to_string(e.v) + ") is not canonical");
  }
  if (e.v >= n_) {
    throw Error(ErrorCode::OutOfRange, "node " + std::to_string(e.v) + " >= n = " +
                                           std::to_string(n_));
  }
}

void Graph::apply(const EdgeUpdate& update) {
  check_edge(update.edge);
  const std::string label =
      "(" + std::to_string(update.edge.u) + "," + std::to_string(update.edge.v) + ")";
  if (update.delta == +1) {
    if (!edges_.insert(update.edge).second) {
      throw Error(ErrorCode::DuplicateInsert, "edge " + label + " already present");
    }
  } else if (update.delta == -1) {
    if (edges_.erase(update.edge) == 0) {
      throw Error(ErrorCode::DeleteAbsent, "edge " + label + " not present");
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "delta must be +1 or -1");
  }
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<NodeId>> Graph::adjacency() const {
  std::vector<std::vector<NodeId>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph apply_update(Graph graph, const EdgeUpdate& update) {
  graph.apply(update);
  return graph;
}

Graph replay(NodeId n, std::span<const EdgeUpdate> updates) {
  Graph g(n);
  for (const EdgeUpdate& up : updates) g.apply(up);
  return g;
}

DensityValue density(const Graph& graph, std::span<const NodeId> subset) {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "density of an empty subset");
  std::vector<bool> member(graph.node_count(), false);
  std::uint64_t size = 0;
  for (NodeId v : subset) {
    if (v >= graph.node_count()) {
      throw Error(ErrorCode::OutOfRange, "node " + std::to_string(v) + " not in graph");
    }
    if (!member[v]) {
      member[v] = true;
      ++size;
    }
  }
  std::uint64_t inside = 0;
  for (const Edge& e : graph.edges()) {
    if (member[e.u] && member[e.v]) ++inside;
  }
  return {inside, size};
}

namespace {

std::vector<NodeId> nodes_of(std::uint32_t mask) {
  std::vector<NodeId> out;
  for (NodeId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

}  // namespace

DensestResult brute_force_densest(const Graph& graph) {
  const NodeId n = graph.node_count();
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::TooLarge, "brute force limited to n <= 20, got " + std::to_string(n));
  }
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no nodes");

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : graph.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }

  std::uint32_t best_mask = 1;
  DensityValue best(0, 1);
  int best_size = 1;
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint64_t twice_edges = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    const int size = std::popcount(mask);
    const DensityValue d(twice_edges / 2, static_cast<std::uint64_t>(size));
    const auto cmp = d <=> best;
    bool better = cmp > 0;
    if (cmp == 0) {
      if (size < best_size) {
        better = true;
      } else if (size == best_size) {
        better = nodes_of(mask) < nodes_of(best_mask);
      }
    }
    if (better) {
      best = d;
      best_mask = mask;
      best_size = size;
    }
    if (mask == full) break;
  }
  return {nodes_of(best_mask), best};
}

}  // namespace densest
