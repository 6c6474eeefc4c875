#ifndef COAL_WIDTH_HPP
#define COAL_WIDTH_HPP

#include <string>
#include <utility>
#include <vector>

#include "coal/discrete.hpp"
#include "coal/graph.hpp"

namespace coal {

/// Family of connected vertex sets that pairwise share a vertex
/// (adjacency is not sufficient).
struct Thicket {
  std::vector<VertexSet> sets;
};

/// Labeled tree over the host graph. Nodes are 0..num_nodes-1; links
/// form a tree.
struct LabeledTree {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> links;
  std::vector<VertexSet> labels;

  int max_label_size() const;
  std::vector<std::vector<int>> node_adjacency() const;
  /// Nodes whose label contains v, in increasing order.
  std::vector<int> nodes_containing(int v) const;
};

/// Condition (ii): endpoint node sets intersect OR are adjacent.
/// Width = max label size.
struct VineDecomposition : LabeledTree {
  int width() const { return max_label_size(); }
};

/// Condition (ii) strengthened to intersection. Width = max label
/// size minus one.
struct TreeDecomposition : LabeledTree {
  int width() const { return max_label_size() - 1; }
};

/// Empty result means valid; otherwise one line per violated
/// condition (disconnected member, disjoint pair).
std::vector<std::string> validate_thicket(const Graph& g, const Thicket& t);

/// Minimum transversal size of the thicket's family. Requires a valid
/// thicket.
int hitting_size(const Graph& g, const Thicket& t,
                 long long node_budget = kDefaultNodeBudget);

/// tau(G) with a maximizing thicket whose hitting size equals tau.
/// max_n caps the instance size; exceeding it or the node budget
/// raises BudgetError.
std::pair<int, Thicket> thicket_number_exact(
    const Graph& g, int max_n = 8, long long node_budget = kDefaultNodeBudget);

/// Itemized violations of tree-ness, condition (i), condition (ii).
std::vector<std::string> validate_vine(const Graph& g,
                                       const VineDecomposition& d);

/// Violations under the strict (intersection) edge condition.
std::vector<std::string> validate_tree_decomposition(
    const Graph& g, const TreeDecomposition& d);

/// nu(G) with a minimum-width witness. Cross-checked by callers against
/// thicket_number_exact; this search is independent of the thicket side.
std::pair<int, VineDecomposition> vinewidth_exact(
    const Graph& g, int max_n = 8, long long node_budget = kDefaultNodeBudget);

/// Replaces each link by a length-two path whose middle node is labeled
/// by the union of the endpoint labels. Output width <= 2*width(d) - 1.
TreeDecomposition vine_to_tree(const VineDecomposition& d);

/// omega(G) by the exact elimination-ordering dynamic program over
/// vertex subsets.
int treewidth_exact(const Graph& g, int max_n = 12);

/// True iff removing the label of internal node t leaves no edge
/// between vertex sets hanging off distinct subtrees at t. Throws
/// InputError when t is a leaf.
bool node_separator_check(const Graph& g, const VineDecomposition& d, int t);

/// Width-k column decomposition of grid(k): a path of k nodes, node i
/// labeled with column i.
VineDecomposition grid_column_vine(int k);

/// Width-ceil(n/2) two-node decomposition of clique(n).
VineDecomposition clique_half_vine(int n);

/// Width-r block decomposition of path_power(n, r): consecutive blocks
/// of r path vertices along a path of nodes.
VineDecomposition path_power_block_vine(int n, int r);

/// The identity decomposition l(v) = {v} of a tree (or forest) graph.
VineDecomposition trivial_vine(const Graph& g);

}  // namespace coal

#endif  // COAL_WIDTH_HPP
