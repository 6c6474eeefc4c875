#ifndef COAL_VC_HPP
#define COAL_VC_HPP

#include <map>
#include <utility>

#include "coal/discrete.hpp"
#include "coal/graph.hpp"

namespace coal {

/// Certificate that a vertex set is shattered by the family of
/// connected induced subgraphs: one connected realizer per subset.
struct ShatterWitness {
  VertexSet shattered_set;
  std::map<VertexSet, VertexSet> realizers;  // subset Y -> R with Y = X cap R
};

struct ShatterResult {
  bool shattered = false;
  ShatterWitness witness;    // populated when shattered
  VertexSet failing_subset;  // first subset with no realizer otherwise
};

/// Tests whether x is shattered by the connected-set family of g.
/// Subsets are scanned in increasing bitmask order, so the reported
/// failing subset is deterministic.
ShatterResult is_shattered(const Graph& g, const VertexSet& x,
                           long long node_budget = kDefaultNodeBudget);

/// VC-dimension of the connected-set family with a maximum shattered
/// set and its realizers. The empty subset needs a connected realizer
/// disjoint from the candidate, so a single-vertex graph has dimension
/// zero.
std::pair<int, ShatterWitness> vc_dimension_exact(
    const Graph& g, int max_n = 12, long long node_budget = kDefaultNodeBudget);

}  // namespace coal

#endif  // COAL_VC_HPP
