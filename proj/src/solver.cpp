#include "densest/solver.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "densest/error.hpp"

namespace densest {

void FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
  if (from >= heads_.size() || to >= heads_.size()) {
    throw Error(ErrorCode::OutOfRange, "arc endpoint outside network");
  }
  if (capacity < 0) throw Error(ErrorCode::InvalidArgument, "negative arc capacity");
  auto push = [&](std::size_t a, std::size_t b, std::int64_t cap) {
    next_.push_back(heads_[a]);
    heads_[a] = static_cast<int>(to_.size());
    to_.push_back(b);
    capacity_.push_back(cap);
  };
  push(from, to, capacity);
  push(to, from, 0);
}

struct MaxFlowSolver {
  const FlowNetwork& net;
  std::vector<std::int64_t> residual;
  std::vector<int> level;
  std::vector<int> cursor;
  std::size_t sink;

  bool build_levels(std::size_t source) {
    level.assign(net.node_count(), -1);
    std::queue<std::size_t> queue;
    level[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (int a = net.heads_[u]; a != -1; a = net.next_[static_cast<std::size_t>(a)]) {
        const auto arc = static_cast<std::size_t>(a);
        const std::size_t v = net.to_[arc];
        if (residual[arc] > 0 && level[v] < 0) {
          level[v] = level[u] + 1;
          queue.push(v);
        }
      }
    }
    return level[sink] >= 0;
  }

  std::int64_t push_flow(std::size_t u, std::int64_t limit) {
    if (u == sink) return limit;
    for (int& a = cursor[u]; a != -1; a = net.next_[static_cast<std::size_t>(a)]) {
      const auto arc = static_cast<std::size_t>(a);
      const std::size_t v = net.to_[arc];
      if (residual[arc] <= 0 || level[v] != level[u] + 1) continue;
      const std::int64_t pushed = push_flow(v, std::min(limit, residual[arc]));
      if (pushed > 0) {
        residual[arc] -= pushed;
        residual[arc ^ 1u] += pushed;
        return pushed;
      }
    }
    return 0;
  }
};

MaxFlowResult max_flow(const FlowNetwork& network, std::size_t source, std::size_t sink) {
  if (source >= network.node_count() || sink >= network.node_count() || source == sink) {
    throw Error(ErrorCode::InvalidArgument, "invalid source/sink");
  }
  MaxFlowSolver solver{network, network.capacity_, {}, {}, sink};
  MaxFlowResult result;
  while (solver.build_levels(source)) {
    solver.cursor = network.heads_;
    while (const std::int64_t pushed =
               solver.push_flow(source, std::numeric_limits<std::int64_t>::max())) {
      result.value += pushed;
    }
  }
  result.source_side.resize(network.node_count());
  for (std::size_t v = 0; v < network.node_count(); ++v) result.source_side[v] = solver.level[v] >= 0;
  return result;
}

FlowNetwork goldberg_network(const Graph& graph, std::int64_t numerator, std::int64_t denominator) {
  const std::size_t n = graph.node_count();
  const auto m = static_cast<std::int64_t>(graph.edge_count());
  if (denominator <= 0 || numerator < 0) {
    throw Error(ErrorCode::InvalidArgument, "density guess must be a non-negative fraction");
  }
  const std::vector<std::size_t> deg = graph.degrees();
  FlowNetwork net(n + 2);
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  for (std::size_t v = 0; v < n; ++v) {
    net.add_arc(source, v, m * denominator);
    net.add_arc(v, sink,
                denominator * m + 2 * numerator - denominator * static_cast<std::int64_t>(deg[v]));
  }
  for (const Edge& e : graph.edges()) {
    net.add_arc(e.u, e.v, denominator);
    net.add_arc(e.v, e.u, denominator);
  }
  return net;
}

namespace {

// Nodes U with d(G_U) > numerator/denominator, or empty if none exists.
std::vector<NodeId> denser_than(const Graph& graph, std::int64_t numerator, std::int64_t denominator) {
  const std::size_t n = graph.node_count();
  const FlowNetwork net = goldberg_network(graph, numerator, denominator);
  const MaxFlowResult flow = max_flow(net, n, n + 1);
  const auto trivial_cut =
      static_cast<std::int64_t>(graph.edge_count()) * denominator * static_cast<std::int64_t>(n);
  std::vector<NodeId> nodes;
  if (flow.value >= trivial_cut) return nodes;
  for (std::size_t v = 0; v < n; ++v) {
    if (flow.source_side[v]) nodes.push_back(static_cast<NodeId>(v));
  }
  return nodes;
}

}  // namespace

DensestResult exact_densest(const Graph& graph) {
  const NodeId n = graph.node_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph has no nodes");
  if (graph.edge_count() == 0) return {{0}, DensityValue(0, 1)};

  // Isolated nodes never belong to a densest subgraph; search on the rest.
  std::vector<NodeId> original;
  std::vector<NodeId> compact_id(n, 0);
  const std::vector<std::size_t> deg = graph.degrees();
  for (NodeId v = 0; v < n; ++v) {
    if (deg[v] == 0) continue;
    compact_id[v] = static_cast<NodeId>(original.size());
    original.push_back(v);
  }
  const auto k = static_cast<NodeId>(original.size());
  if (k > kExactSolverLimit) {
    throw Error(ErrorCode::TooLarge, "exact solver supports at most " +
                                         std::to_string(kExactSolverLimit) + " non-isolated nodes");
  }
  Graph core(k);
  for (const Edge& e : graph.edges()) core.insert({compact_id[e.u], compact_id[e.v]});

  // Distinct achievable densities differ by at least 1/(k(k-1)), so once the
  // feasible guess lo/D and the infeasible guess (lo+1)/D are adjacent, the
  // subgraph found at lo has density exactly d*.
  const std::int64_t scale = static_cast<std::int64_t>(k) * (k - 1);
  std::int64_t lo = 0;                                    // feasible: m >= 1
  std::int64_t hi = scale * static_cast<std::int64_t>(k);  // infeasible: d* < k
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (denser_than(core, mid, scale).empty()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  std::vector<NodeId> nodes;
  for (NodeId v : denser_than(core, lo, scale)) nodes.push_back(original[v]);
  const DensityValue d = density(graph, nodes);
  return {std::move(nodes), d};
}

GreedyTrace greedy_peel(const Graph& graph) {
  const NodeId n = graph.node_count();
  const auto adj = graph.adjacency();
  std::vector<std::size_t> deg = graph.degrees();
  std::vector<bool> removed(n, false);
  std::set<std::pair<std::size_t, NodeId>> queue;
  for (NodeId v = 0; v < n; ++v) queue.emplace(deg[v], v);

  GreedyTrace trace;
  std::uint64_t edges = graph.edge_count();
  std::uint64_t alive = n;
  while (!queue.empty()) {
    trace.prefix_density.emplace_back(edges, alive);
    const NodeId v = queue.begin()->second;
    queue.erase(queue.begin());
    removed[v] = true;
    trace.peel_order.push_back(v);
    edges -= deg[v];
    --alive;
    for (NodeId w : adj[v]) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return trace;
}

DensestResult charikar_greedy(const Graph& graph) {
  if (graph.edge_count() == 0) throw Error(ErrorCode::EmptyGraph, "greedy peeling needs an edge");
  const GreedyTrace trace = greedy_peel(graph);
  std::size_t best = 0;
  for (std::size_t k = 1; k < trace.prefix_density.size(); ++k) {
    if (trace.prefix_density[k] > trace.prefix_density[best]) best = k;
  }
  std::vector<NodeId> nodes(trace.peel_order.begin() + static_cast<std::ptrdiff_t>(best),
                            trace.peel_order.end());
  std::sort(nodes.begin(), nodes.end());
  return {std::move(nodes), trace.prefix_density[best]};
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Flow: return "flow";
    case SolverKind::Greedy: return "greedy";
    case SolverKind::Brute: return "brute";
  }
  return "flow";
}

SolverKind parse_solver_kind(std::string_view name) {
  if (name == "flow") return SolverKind::Flow;
  if (name == "greedy") return SolverKind::Greedy;
  if (name == "brute") return SolverKind::Brute;
  throw Error(ErrorCode::InvalidArgument, "unknown solver '" + std::string(name) + "'");
}

DensestResult solve_densest(const Graph& graph, SolverKind kind) {
  switch (kind) {
    case SolverKind::Flow: return exact_densest(graph);
    case SolverKind::Greedy:
      if (graph.edge_count() == 0) return {{0}, DensityValue(0, 1)};
      return charikar_greedy(graph);
    case SolverKind::Brute: return brute_force_densest(graph);
  }
  return exact_densest(graph);
}

}  // namespace densest
