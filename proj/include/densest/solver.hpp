#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "densest/graph.hpp"

namespace densest {

struct MaxFlowResult {
  std::int64_t value = 0;
  /// Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side;
};

/// Directed network with integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t node_count) : heads_(node_count, -1) {}

  std::size_t node_count() const { return heads_.size(); }
  std::size_t arc_count() const { return to_.size() / 2; }

  /// Adds arc from -> to with the given capacity (plus its zero-capacity reverse).
  void add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

 private:
  friend struct MaxFlowSolver;
  friend MaxFlowResult max_flow(const FlowNetwork&, std::size_t, std::size_t);

  std::vector<int> heads_;
  std::vector<int> next_;
  std::vector<std::size_t> to_;
  std::vector<std::int64_t> capacity_;
};

/// Dinic blocking-flow max flow; the network is copied, not mutated.
MaxFlowResult max_flow(const FlowNetwork& network, std::size_t source, std::size_t sink);

/// Goldberg's network for the density guess numerator/denominator: nodes
/// 0..n-1 are graph vertices, n is the source and n+1 the sink.
FlowNetwork goldberg_network(const Graph& graph, std::int64_t numerator, std::int64_t denominator);

inline constexpr NodeId kExactSolverLimit = 4096;

/// Exact maximum density via binary search over min-cut feasibility tests.
/// A graph without edges yields ({0}, 0/1).
DensestResult exact_densest(const Graph& graph);

struct GreedyTrace {
  std::vector<NodeId> peel_order;
  /// prefix_density[k] is the density of the graph left after removing the
  /// first k peeled nodes.
  std::vector<DensityValue> prefix_density;
};

GreedyTrace greedy_peel(const Graph& graph);

/// Charikar's peeling: removes a minimum-degree node (smallest id on ties)
/// until empty and returns the densest intermediate graph. Density >= d*/2.
DensestResult charikar_greedy(const Graph& graph);

enum class SolverKind { Flow, Greedy, Brute };

std::string_view to_string(SolverKind kind);
SolverKind parse_solver_kind(std::string_view name);

DensestResult solve_densest(const Graph& graph, SolverKind kind);

}  // namespace densest
