#ifndef COAL_DISCRETE_HPP
#define COAL_DISCRETE_HPP

#include <map>
#include <vector>

#include "coal/game.hpp"
#include "coal/graph.hpp"

namespace coal {

/// Default search budget; exhaustion raises BudgetError, never a wrong
/// answer.
inline constexpr long long kDefaultNodeBudget = 10'000'000;

struct IntegralCover {
  std::map<int, long long> allocation;  // vertex -> non-negative amount
  long long cost = 0;
};

struct IntegralPacking {
  std::vector<VertexSet> coalitions;  // pairwise disjoint, listed in game
  long long value = 0;
};

struct HittingSet {
  VertexSet members;
  int size() const { return members.size(); }
};

/// Minimum-cardinality transversal of the family (all sets non-empty).
/// Branch and bound on the smallest unhit set.
HittingSet min_hitting_set(const std::vector<VertexSet>& family, int n,
                           long long node_budget = kDefaultNodeBudget);

/// Minimum-cost integral allocation covering every listed coalition
/// (kappa). Simple games reduce to min_hitting_set; general games run
/// branch and bound with the exact LP relaxation as lower bound.
IntegralCover integral_covering(const CoalitionGame& game,
                                long long node_budget = kDefaultNodeBudget);

/// Maximum total value over pairwise-disjoint listed coalitions (rho).
IntegralPacking integral_packing(const CoalitionGame& game,
                                 long long node_budget = kDefaultNodeBudget);

}  // namespace coal

#endif  // COAL_DISCRETE_HPP
