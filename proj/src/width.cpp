#include "coal/width.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "coal/errors.hpp"

namespace coal {

int LabeledTree::max_label_size() const {
  int best = 0;
  for (const VertexSet& l : labels) best = std::max(best, l.size());
  return best;
}

std::vector<std::vector<int>> LabeledTree::node_adjacency() const {
  std::vector<std::vector<int>> adj(num_nodes);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> LabeledTree::nodes_containing(int v) const {
  std::vector<int> out;
  for (int t = 0; t < num_nodes; ++t)
    if (labels[t].contains(v)) out.push_back(t);
  return out;
}

std::vector<std::string> validate_thicket(const Graph& g, const Thicket& t) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    const VertexSet& s = t.sets[i];
    if (s.empty()) {
      violations.push_back("set " + std::to_string(i) + " is empty");
      continue;
    }
    if (s.max_vertex() >= g.num_vertices()) {
      violations.push_back("set " + std::to_string(i) +
                           " has out-of-range vertices");
      continue;
    }
    if (!is_connected_induced(g, s))
      violations.push_back("set " + std::to_string(i) + " = " + s.to_string() +
                           " induces a disconnected subgraph");
  }
  for (std::size_t i = 0; i < t.sets.size(); ++i)
    for (std::size_t j = i + 1; j < t.sets.size(); ++j)
      if (!t.sets[i].empty() && !t.sets[j].empty() &&
          !t.sets[i].intersects(t.sets[j]))
        violations.push_back("sets " + std::to_string(i) + " and " +
                             std::to_string(j) + " are disjoint");
  return violations;
}

int hitting_size(const Graph& g, const Thicket& t, long long node_budget) {
  auto violations = validate_thicket(g, t);
  if (!violations.empty())
    throw InputError("invalid thicket: " + violations.front());
  if (t.sets.empty()) throw InputError("hitting size of an empty thicket");
  return min_hitting_set(t.sets, g.num_vertices(), node_budget).size();
}

namespace {

struct BudgetCounter {
  long long remaining;
  void tick() {
    if (--remaining < 0) throw BudgetError("search node budget exceeded");
  }
};

std::vector<std::uint64_t> components_avoiding(const Graph& g,
                                               std::uint64_t excluded) {
  int n = g.num_vertices();
  std::vector<std::uint64_t> comps;
  std::uint64_t remaining =
      ((n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)) &
      ~excluded;
  while (remaining != 0) {
    int start = std::countr_zero(remaining);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      std::uint64_t fresh = g.neighbor_mask(v) & remaining & ~comp;
      while (fresh != 0) {
        int w = std::countr_zero(fresh);
        fresh &= fresh - 1;
        comp |= std::uint64_t{1} << w;
        queue.push_back(w);
      }
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

// Feasibility side of the thicket search: a thicket of hitting size
// >= k exists iff a pairwise-intersecting family of connected sets can
// dodge every (k-1)-subset. Restricting candidates to components of
// G - X is sound: a component contains every connected set avoiding X,
// and enlarging a member only helps both constraints.
struct ThicketSearch {
  const Graph& g;
  const std::vector<std::uint64_t>& blockers;  // all (k-1)-subsets
  std::vector<std::vector<std::uint64_t>> comps_per_blocker;
  BudgetCounter& budget;
  std::vector<std::uint64_t> witness;

  bool search(std::vector<std::uint64_t>& chosen) {
    budget.tick();
    int open = -1;
    for (int i = 0; i < static_cast<int>(blockers.size()) && open < 0; ++i) {
      bool dodged = false;
      for (std::uint64_t s : chosen)
        if ((s & blockers[i]) == 0) {
          dodged = true;
          break;
        }
      if (!dodged) open = i;
    }
    if (open < 0) {
      witness = chosen;
      return true;
    }
    for (std::uint64_t comp : comps_per_blocker[open]) {
      bool compatible = true;
      for (std::uint64_t s : chosen)
        if ((s & comp) == 0) {
          compatible = false;
          break;
        }
      if (!compatible) continue;
      chosen.push_back(comp);
      if (search(chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

std::vector<std::uint64_t> subsets_of_size(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  if (k > n) return out;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    out.push_back(mask);
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return out;
}

}  // namespace

std::pair<int, Thicket> thicket_number_exact(const Graph& g, int max_n,
                                             long long node_budget) {
  int n = g.num_vertices();
  if (n > max_n)
    throw BudgetError("thicket number: n=" + std::to_string(n) +
                      " exceeds budget max_n=" + std::to_string(max_n));
  if (n == 0) return {0, Thicket{}};
  BudgetCounter budget{node_budget};

  int tau = 1;
  Thicket best{{VertexSet{0}}};
  for (int k = 2; k <= n; ++k) {
    auto blockers = subsets_of_size(n, k - 1);
    ThicketSearch search{g, blockers, {}, budget, {}};
    search.comps_per_blocker.reserve(blockers.size());
    for (std::uint64_t x : blockers)
      search.comps_per_blocker.push_back(components_avoiding(g, x));
    std::vector<std::uint64_t> chosen;
    if (!search.search(chosen)) break;
    tau = k;
    best.sets.clear();
    for (std::uint64_t s : search.witness)
      best.sets.push_back(VertexSet::from_mask(s));
  }
  return {tau, best};
}

namespace {

std::vector<std::string> validate_labeled_tree(const Graph& g,
                                               const LabeledTree& d,
                                               bool adjacency_suffices) {
  std::vector<std::string> violations;
  int m = d.num_nodes;
  if (m <= 0) {
    violations.push_back("decomposition has no nodes");
    return violations;
  }
  if (static_cast<int>(d.labels.size()) != m) {
    violations.push_back("label count does not match node count");
    return violations;
  }
  if (static_cast<int>(d.links.size()) != m - 1)
    violations.push_back("link count " + std::to_string(d.links.size()) +
                         " is not node count minus one");
  for (auto [a, b] : d.links)
    if (a < 0 || a >= m || b < 0 || b >= m || a == b) {
      violations.push_back("invalid link");
      return violations;
    }
  auto adj = d.node_adjacency();
  {
    std::vector<char> seen(m, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      for (int s : adj[t])
        if (!seen[s]) {
          seen[s] = 1;
          ++count;
          queue.push_back(s);
        }
    }
    if (count != m) violations.push_back("links do not form a tree");
  }
  if (!violations.empty()) return violations;

  for (int t = 0; t < m; ++t)
    for (int v : d.labels[t].members())
      if (v < 0 || v >= g.num_vertices())
        violations.push_back("node " + std::to_string(t) +
                             " labels out-of-range vertex " +
                             std::to_string(v));
  if (!violations.empty()) return violations;

  for (int v = 0; v < g.num_vertices(); ++v) {
    auto nodes = d.nodes_containing(v);
    if (nodes.empty()) {
      violations.push_back("vertex " + std::to_string(v) +
                           " appears in no label");
      continue;
    }
    std::vector<char> inside(m, 0);
    for (int t : nodes) inside[t] = 1;
    std::deque<int> queue{nodes.front()};
    std::vector<char> seen(m, 0);
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
      violations.push_back("vertex " + std::to_string(v) +
                           " has a disconnected node set");
  }

  for (auto [u, v] : g.edges()) {
    auto tu = d.nodes_containing(u);
    auto tv = d.nodes_containing(v);
    bool ok = false;
    for (int a : tu) {
      for (int b : tv) {
        if (a == b ||
            (adjacency_suffices &&
             std::binary_search(adj[a].begin(), adj[a].end(), b))) {
          ok = true;
          break;
        }
      }
      if (ok) break;
    }
    if (!ok)
      violations.push_back("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") is not covered");
  }
  return violations;
}

}  // namespace

std::vector<std::string> validate_vine(const Graph& g,
                                       const VineDecomposition& d) {
  return validate_labeled_tree(g, d, /*adjacency_suffices=*/true);
}

std::vector<std::string> validate_tree_decomposition(
    const Graph& g, const TreeDecomposition& d) {
  return validate_labeled_tree(g, d, /*adjacency_suffices=*/false);
}

namespace {

// Decision search for nu(G) <= w. The tree is grown by leaves in BFS
// order (non-decreasing parent indices). Invariants enforced per step:
//   - a re-occurring vertex needs the parent's label to contain it;
//   - every node introduces at least one unseen vertex;
//   - adjacent labels are incomparable;
//   - an edge must satisfy condition (ii) the moment both endpoints
//     are placed (later repair is impossible under leaf growth).
struct VineSearch {
  const Graph& g;
  int n, w;
  std::uint64_t full;
  BudgetCounter& budget;
  std::vector<std::uint64_t> labels;
  std::vector<int> parents;
  std::uint64_t placed = 0;

  bool grow(int last_parent) {
    budget.tick();
    if (placed == full) return true;
    int nodes = static_cast<int>(labels.size());
    for (int q = last_parent; q < nodes; ++q) {
      // Every placed vertex with an unplaced neighbor must still be
      // reachable: some node indexed >= q has to carry it.
      bool attachable = true;
      for (auto [a, b] : g.edges()) {
        for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
          std::uint64_t ubit = std::uint64_t{1} << u;
          if (placed & ubit) continue;
          if (!(placed & (std::uint64_t{1} << v))) continue;
          bool carried = false;
          for (int s = q; s < nodes && !carried; ++s)
            carried = (labels[s] >> v) & 1;
          if (!carried) {
            attachable = false;
            break;
          }
        }
        if (!attachable) break;
      }
      if (!attachable) break;

      std::uint64_t unplaced = full & ~placed;
      std::uint64_t allowed = labels[q] | unplaced;
      for (std::uint64_t label = allowed; label != 0;
           label = (label - 1) & allowed) {
        if (std::popcount(label) > w) continue;
        std::uint64_t fresh = label & unplaced;
        if (fresh == 0) continue;
        if ((labels[q] & ~label) == 0) continue;  // parent label absorbed
        bool edges_ok = true;
        std::uint64_t scan = fresh;
        while (scan != 0 && edges_ok) {
          int u = std::countr_zero(scan);
          scan &= scan - 1;
          if ((g.neighbor_mask(u) & placed & ~(label | labels[q])) != 0)
            edges_ok = false;
        }
        if (!edges_ok) continue;
        labels.push_back(label);
        parents.push_back(q);
        std::uint64_t saved = placed;
        placed |= label;
        if (grow(q)) return true;
        placed = saved;
        labels.pop_back();
        parents.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::pair<int, VineDecomposition> vinewidth_exact(const Graph& g, int max_n,
                                                  long long node_budget) {
  int n = g.num_vertices();
  if (n > max_n)
    throw BudgetError("vinewidth: n=" + std::to_string(n) +
                      " exceeds budget max_n=" + std::to_string(max_n));
  if (n > 64) throw BudgetError("vinewidth search limited to n <= 64");
  if (n == 0) {
    VineDecomposition d;
    d.num_nodes = 1;
    d.labels = {VertexSet{}};
    return {0, d};
  }
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1;
  BudgetCounter budget{node_budget};
  for (int w = 1; w <= n; ++w) {
    // Root label is anchored at vertex 0; any decomposition can be
    // rooted at a node containing it.
    std::vector<std::uint64_t> roots;
    for (std::uint64_t label = full; label != 0; label = (label - 1) & full)
      if ((label & 1) && std::popcount(label) <= w) roots.push_back(label);
    std::sort(roots.begin(), roots.end());
    for (std::uint64_t root : roots) {
      // Edges among root vertices are covered by the root node itself,
      // so no coverage check is needed before growing.
      VineSearch search{g, n, w, full, budget, {root}, {-1}, root};
      if (search.grow(0)) {
        VineDecomposition d;
        d.num_nodes = static_cast<int>(search.labels.size());
        for (int t = 1; t < d.num_nodes; ++t)
          d.links.emplace_back(search.parents[t], t);
        for (std::uint64_t label : search.labels)
          d.labels.push_back(VertexSet::from_mask(label));
        auto violations = validate_vine(g, d);
        if (!violations.empty())
          throw std::logic_error("vinewidth witness failed validation: " +
                                 violations.front());
        return {w, d};
      }
    }
  }
  throw std::logic_error("vinewidth search exhausted without a witness");
}

TreeDecomposition vine_to_tree(const VineDecomposition& d) {
  TreeDecomposition out;
  out.num_nodes = d.num_nodes + static_cast<int>(d.links.size());
  out.labels = d.labels;
  int middle = d.num_nodes;
  for (auto [a, b] : d.links) {
    out.labels.push_back(d.labels[a].set_union(d.labels[b]));
    out.links.emplace_back(a, middle);
    out.links.emplace_back(middle, b);
    ++middle;
  }
  return out;
}

int treewidth_exact(const Graph& g, int max_n) {
  int n = g.num_vertices();
  if (n > max_n)
    throw BudgetError("treewidth: n=" + std::to_string(n) +
                      " exceeds budget max_n=" + std::to_string(max_n));
  if (n == 0) return 0;
  if (n > 25) throw BudgetError("treewidth DP limited to n <= 25");
  std::uint64_t full = (std::uint64_t{1} << n) - 1;

  // q(W, v): vertices outside W u {v} reachable from v through W.
  auto fill_in_degree = [&](std::uint64_t w_mask, int v) {
    std::uint64_t visited = std::uint64_t{1} << v;
    std::deque<int> queue{v};
    std::uint64_t reached = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      std::uint64_t nbrs = g.neighbor_mask(x) & ~visited;
      reached |= nbrs & ~w_mask;
      std::uint64_t inside = nbrs & w_mask;
      visited |= nbrs;
      while (inside != 0) {
        int y = std::countr_zero(inside);
        inside &= inside - 1;
        queue.push_back(y);
      }
    }
    return std::popcount(reached & ~(std::uint64_t{1} << v));
  };

  std::vector<signed char> best(full + 1, -1);
  best[0] = 0;
  std::vector<std::uint64_t> order(full + 1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint64_t s : order) {
    if (s == 0) continue;
    int value = n;
    std::uint64_t scan = s;
    while (scan != 0) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      std::uint64_t without = s & ~(std::uint64_t{1} << v);
      int candidate =
          std::max<int>(best[without], fill_in_degree(without, v));
      value = std::min(value, candidate);
    }
    best[s] = static_cast<signed char>(value);
  }
  return best[full];
}

bool node_separator_check(const Graph& g, const VineDecomposition& d, int t) {
  if (t < 0 || t >= d.num_nodes) throw InputError("node index out of range");
  auto adj = d.node_adjacency();
  if (adj[t].size() < 2)
    throw InputError("node " + std::to_string(t) +
                     " is a leaf; separator check needs an internal node");
  std::vector<int> side(d.num_nodes, -1);
  side[t] = -2;
  int branch = 0;
  for (int start : adj[t]) {
    if (side[start] != -1) continue;
    side[start] = branch;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj[x])
        if (side[y] == -1) {
          side[y] = branch;
          queue.push_back(y);
        }
    }
    ++branch;
  }
  const VertexSet& separator = d.labels[t];
  std::vector<int> vertex_side(g.num_vertices(), -1);
  for (int node = 0; node < d.num_nodes; ++node) {
    if (node == t) continue;
    for (int v : d.labels[node].members()) {
      if (separator.contains(v)) continue;
      if (vertex_side[v] == -1) vertex_side[v] = side[node];
      // A vertex legitimately spanning branches would make the
      // decomposition invalid; the edge test below still decides.
    }
  }
  for (auto [u, v] : g.edges()) {
    if (separator.contains(u) || separator.contains(v)) continue;
    if (vertex_side[u] >= 0 && vertex_side[v] >= 0 &&
        vertex_side[u] != vertex_side[v])
      return false;
  }
  return true;
}

VineDecomposition grid_column_vine(int k) {
  if (k <= 0) throw InputError("grid side must be positive");
  VineDecomposition d;
  d.num_nodes = k;
  for (int col = 0; col < k; ++col) {
    std::vector<int> column;
    for (int row = 0; row < k; ++row) column.push_back(row * k + col);
    d.labels.push_back(VertexSet(column));
    if (col + 1 < k) d.links.emplace_back(col, col + 1);
  }
  return d;
}

VineDecomposition clique_half_vine(int n) {
  if (n < 2) throw InputError("clique half decomposition needs n >= 2");
  int half = (n + 1) / 2;
  std::vector<int> first, second;
  for (int v = 0; v < n; ++v) (v < half ? first : second).push_back(v);
  VineDecomposition d;
  d.num_nodes = 2;
  d.labels = {VertexSet(first), VertexSet(second)};
  d.links = {{0, 1}};
  return d;
}

VineDecomposition path_power_block_vine(int n, int r) {
  if (n <= 0 || r <= 0 || r >= n)
    throw InputError("path power decomposition needs 0 < r < n");
  VineDecomposition d;
  for (int start = 0; start < n; start += r) {
    std::vector<int> block;
    for (int v = start; v < std::min(n, start + r); ++v) block.push_back(v);
    d.labels.push_back(VertexSet(block));
    if (start > 0) d.links.emplace_back(d.num_nodes - 1, d.num_nodes);
    ++d.num_nodes;
  }
  return d;
}

VineDecomposition trivial_vine(const Graph& g) {
  VineDecomposition d;
  d.num_nodes = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v)
    d.labels.push_back(VertexSet{v});
  for (auto [u, v] : g.edges()) d.links.emplace_back(u, v);
  if (static_cast<int>(d.links.size()) != d.num_nodes - 1)
    throw InputError("trivial decomposition requires a tree graph");
  return d;
}

}  // namespace coal
