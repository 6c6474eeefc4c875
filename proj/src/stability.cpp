#include "coal/stability.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "coal/errors.hpp"
#include "coal/lp.hpp"

namespace coal {

namespace {

// Pads every label to the decomposition's width by borrowing vertices
// from adjacent labels (parent first, then children, lowest index
// first), repeating passes until uniform. Growth preserves validity:
// a borrowed vertex keeps its node set connected because it comes from
// an adjacent node.
VineDecomposition pad_labels(const VineDecomposition& d,
                             const std::vector<int>& bfs_order,
                             const std::vector<int>& parent) {
  VineDecomposition padded = d;
  int w = d.width();
  auto adj = d.node_adjacency();
  while (true) {
    bool uniform = true, changed = false;
    for (int t : bfs_order) {
      if (padded.labels[t].size() >= w) continue;
      uniform = false;
      std::vector<int> donors;
      if (parent[t] >= 0) donors.push_back(parent[t]);
      for (int s : adj[t])
        if (s != parent[t]) donors.push_back(s);
      for (int donor : donors) {
        for (int v : padded.labels[donor].members()) {
          if (padded.labels[t].contains(v)) continue;
          padded.labels[t] = padded.labels[t].set_union(VertexSet{v});
          changed = true;
          if (padded.labels[t].size() >= w) break;
        }
        if (padded.labels[t].size() >= w) break;
      }
    }
    if (uniform) break;
    if (!changed)
      throw std::logic_error("label padding stalled below uniform width");
  }
  return padded;
}

}  // namespace

VineAllocationResult vine_allocation(const CoalitionGame& game,
                                     const VineDecomposition& d) {
  require_valid_game(game);
  auto violations = validate_vine(game.graph, d);
  if (!violations.empty())
    throw InputError("invalid vine decomposition: " + violations.front());

  // Root at node 0 and order nodes by BFS so parents precede children.
  auto adj = d.node_adjacency();
  std::vector<int> parent(d.num_nodes, -1), depth(d.num_nodes, 0);
  std::vector<int> bfs_order;
  {
    std::deque<int> queue{0};
    std::vector<char> seen(d.num_nodes, 0);
    seen[0] = 1;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      bfs_order.push_back(t);
      for (int s : adj[t])
        if (!seen[s]) {
          seen[s] = 1;
          parent[s] = t;
          depth[s] = depth[t] + 1;
          queue.push_back(s);
        }
    }
  }

  VineAllocationResult result;
  result.padded = pad_labels(d, bfs_order, parent);
  const VineDecomposition& padded = result.padded;
  int w = padded.width();

  // Root node of each coalition: the unique shallowest node whose
  // label meets the coalition. T(Q) must induce a subtree.
  std::vector<std::vector<const VertexSet*>> rooted(d.num_nodes);
  for (const auto& [q, value] : game.coalitions) {
    std::vector<int> nodes;
    for (int t = 0; t < padded.num_nodes; ++t)
      if (padded.labels[t].intersects(q)) nodes.push_back(t);
    // Connectivity of the node set within the tree.
    std::vector<char> inside(padded.num_nodes, 0), seen(padded.num_nodes, 0);
    for (int t : nodes) inside[t] = 1;
    std::deque<int> queue{nodes.front()};
    seen[nodes.front()] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int s : adj[t])
        if (inside[s] && !seen[s]) {
          seen[s] = 1;
          ++reached;
          queue.push_back(s);
        }
    }
    if (reached != nodes.size())
      throw InputError("coalition " + q.to_string() +
                       " spans a disconnected node set");
    int root = nodes.front();
    for (int t : nodes)
      if (depth[t] < depth[root]) root = t;
    rooted[root].push_back(&q);
  }

  // Bottom-up: pay the maximum residual at each node to its label.
  std::vector<Rational> pay(game.graph.num_vertices(), Rational(0));
  long long residual_sum = 0;
  std::vector<const VertexSet*> node_best(padded.num_nodes, nullptr);
  std::vector<long long> node_residual(padded.num_nodes, 0);
  for (auto it = bfs_order.rbegin(); it != bfs_order.rend(); ++it) {
    int t = *it;
    const VertexSet* best = nullptr;
    long long best_residual = 0;
    for (const VertexSet* q : rooted[t]) {
      Rational received = 0;
      for (int i : q->members()) received += pay[i];
      long long value = game.coalitions.at(*q);
      long long residual = 0;
      if (received < value) {
        Rational gap = Rational(value) - received;
        residual = static_cast<long long>(numerator(gap));
        if (denominator(gap) != 1)
          throw std::logic_error("non-integral residual");
      }
      if (residual > best_residual ||
          (residual == best_residual && residual > 0 && best != nullptr &&
           *q < *best)) {
        best = q;
        best_residual = residual;
      }
    }
    if (best_residual > 0) {
      for (int i : padded.labels[t].members()) pay[i] += best_residual;
      residual_sum += best_residual;
      node_best[t] = best;
      node_residual[t] = best_residual;
      result.trace.push_back({t, *best, best_residual});
    }
  }

  for (int i = 0; i < game.graph.num_vertices(); ++i)
    if (pay[i] != 0) {
      result.allocation.values[i] = pay[i];
      result.allocation.cost += pay[i];
    }

  // Greedy top-down packing witness.
  std::vector<char> deleted(padded.num_nodes, 0);
  for (int t : bfs_order) {
    if (deleted[t]) continue;
    deleted[t] = 1;
    if (node_best[t] == nullptr) continue;
    const VertexSet& q = *node_best[t];
    result.witness.coalitions.push_back(q);
    result.witness.value += game.coalitions.at(q);
    for (int s = 0; s < padded.num_nodes; ++s)
      if (padded.labels[s].intersects(q)) deleted[s] = 1;
  }

  // Exact re-verification of every claimed property.
  for (const auto& [q, value] : game.coalitions) {
    Rational received = 0;
    for (int i : q.members()) received += pay[i];
    if (received < value)
      throw std::logic_error("vine allocation infeasible for coalition " +
                             q.to_string());
  }
  for (std::size_t i = 0; i < result.witness.coalitions.size(); ++i)
    for (std::size_t j = i + 1; j < result.witness.coalitions.size(); ++j)
      if (result.witness.coalitions[i].intersects(result.witness.coalitions[j]))
        throw std::logic_error("packing witness is not disjoint");
  // Each chosen coalition pays at least one agent per node of its
  // (remaining) node set, so the packed value dominates the residual
  // sum; this is the inequality the cost bound rests on.
  if (result.witness.value < residual_sum)
    throw std::logic_error("packing witness value below residual sum");
  if (result.allocation.cost > Rational(w) * result.witness.value)
    throw std::logic_error("allocation cost exceeds width times witness");
  return result;
}

Allocation sqrt_allocation(const CoalitionGame& game) {
  require_valid_game(game);
  int n = game.graph.num_vertices();
  Allocation out;
  if (game.coalitions.empty()) return out;

  long long max_value = 0;
  for (const auto& [s, v] : game.coalitions)
    max_value = std::max(max_value, v);

  // Greedy disjoint packing of small coalitions by descending value,
  // ties by lexicographically smallest member list.
  std::vector<std::pair<VertexSet, long long>> small;
  for (const auto& [s, v] : game.coalitions)
    if (static_cast<long long>(s.size()) * s.size() < n)
      small.emplace_back(s, v);
  std::stable_sort(small.begin(), small.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  std::vector<Rational> pay(n, Rational(0));
  VertexSet used;
  for (const auto& [s, v] : small) {
    if (s.intersects(used)) continue;
    used = used.set_union(s);
    for (int i : s.members()) pay[i] += v;
  }

  Rational uniform = Rational(max_value) / isqrt_ceil(n);
  for (int i = 0; i < n; ++i) pay[i] += uniform;

  for (const auto& [s, v] : game.coalitions) {
    Rational received = 0;
    for (int i : s.members()) received += pay[i];
    if (received < v)
      throw std::logic_error("greedy allocation infeasible for coalition " +
                             s.to_string());
  }
  for (int i = 0; i < n; ++i)
    if (pay[i] != 0) {
      out.values[i] = pay[i];
      out.cost += pay[i];
    }
  return out;
}

GapReport gap_report(const CoalitionGame& game, int tau,
                     long long node_budget) {
  require_valid_game(game);
  GapReport report;
  report.tau = tau;
  if (game.coalitions.empty()) {
    report.ratio_pc = report.gap_primal = report.gap_dual =
        report.alpha_star = 1;
    return report;
  }

  IntegralCover cover = integral_covering(game, node_budget);
  IntegralPacking packing = integral_packing(game, node_budget);
  LpSolution frac_cover = covering_lp(game);
  LpSolution frac_pack = packing_lp(game);
  report.kappa = cover.cost;
  report.rho = packing.value;
  report.kappa_f = frac_cover.objective;
  report.rho_f = frac_pack.objective;
  if (report.kappa_f != report.rho_f)
    throw std::logic_error("strong duality violated in gap report");
  if (report.rho > report.rho_f || report.rho_f > report.kappa)
    throw std::logic_error("duality sandwich violated in gap report");

  report.ratio_pc = report.kappa / report.rho;
  report.gap_primal = report.kappa / report.kappa_f;
  report.gap_dual = report.rho_f / report.rho;
  report.alpha_star = report.gap_dual;
  if (report.ratio_pc != report.gap_primal * report.gap_dual)
    throw std::logic_error("gap factorization violated in gap report");

  if (tau >= 0) {
    if (report.ratio_pc > tau)
      report.failed_bounds.push_back("kappa/rho exceeds tau");
    if (report.gap_primal > tau)
      report.failed_bounds.push_back("kappa/kappa_f exceeds tau");
    if (report.gap_dual > tau)
      report.failed_bounds.push_back("rho_f/rho exceeds tau");
  }
  return report;
}

}  // namespace coal
