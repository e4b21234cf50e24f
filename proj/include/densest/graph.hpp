#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace densest {

using NodeId = std::uint32_t;

// Undirected edge in canonical form (u < v).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  // Orders the endpoints; throws NonCanonical on a self-loop.
  static Edge canonical(NodeId a, NodeId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeUpdate {
  Edge edge;
  int delta = +1;  // +1 insert, -1 delete

  EdgeUpdate negated() const { return {edge, -delta}; }

  friend bool operator==(const EdgeUpdate&, const EdgeUpdate&) = default;
};

/// Exact density |E(G_U)| / |U|. Kept unreduced; all comparisons cross-multiply.
class DensityValue {
 public:
  DensityValue() = default;
  DensityValue(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }
  DensityValue reduced() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const DensityValue& a, const DensityValue& b);
  friend std::strong_ordering operator<=>(const DensityValue& a, const DensityValue& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// Simple undirected graph on nodes [0, n) under strict turnstile updates:
/// every edge multiplicity stays in {0, 1}.
class Graph {
 public:
  Graph() = default;
  explicit Graph(NodeId n) : n_(n) {}

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge>& edges() const { return edges_; }
  bool contains(const Edge& e) const { return edges_.count(e) != 0; }

  void apply(const EdgeUpdate& update);
  void insert(const Edge& e) { apply({e, +1}); }
  void erase(const Edge& e) { apply({e, -1}); }

  std::vector<std::size_t> degrees() const;
  std::vector<std::vector<NodeId>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_edge(const Edge& e) const;

  NodeId n_ = 0;
  std::set<Edge> edges_;
};

Graph apply_update(Graph graph, const EdgeUpdate& update);

Graph replay(NodeId n, std::span<const EdgeUpdate> updates);

DensityValue density(const Graph& graph, std::span<const NodeId> subset);

struct DensestResult {
  std::vector<NodeId> nodes;  // sorted ascending
  DensityValue density;
};

inline constexpr NodeId kBruteForceLimit = 20;

/// Exhaustive maximum-density search over all non-empty subsets. Ties go to the
/// smallest subset, then the lexicographically smallest node list.
DensestResult brute_force_densest(const Graph& graph);

}  // namespace densest
