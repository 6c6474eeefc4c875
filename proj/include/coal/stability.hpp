#ifndef COAL_STABILITY_HPP
#define COAL_STABILITY_HPP

#include <map>
#include <string>
#include <vector>

#include "coal/discrete.hpp"
#include "coal/game.hpp"
#include "coal/rational.hpp"
#include "coal/width.hpp"

namespace coal {

/// Feasible payment allocation: every listed coalition receives at
/// least its value in total.
struct Allocation {
  std::map<int, Rational> values;  // vertex -> amount >= 0
  Rational cost;                   // sum of all amounts
};

/// Pairwise-disjoint listed coalitions certifying a packing value.
struct PackingWitness {
  std::vector<VertexSet> coalitions;
  long long value = 0;
};

/// One allocation step of the vine algorithm: at this node, the
/// maximum-residual rooted coalition and the amount paid to every
/// agent in the node's label.
struct ResidualEntry {
  int node = -1;
  VertexSet coalition;
  long long residual = 0;
};

struct VineAllocationResult {
  Allocation allocation;
  PackingWitness witness;
  std::vector<ResidualEntry> trace;  // positive residuals, bottom-up order
  VineDecomposition padded;          // uniform-label-size decomposition used
};

/// Bottom-up allocation over a vine decomposition: labels are padded to
/// uniform size width(d) by borrowing from adjacent labels, the tree is
/// rooted at node 0, and each node pays the maximum residual among
/// coalitions rooted there to its whole label. The greedy top-down
/// witness packs disjoint coalitions of total value equal to the
/// residual sum, so cost <= width(d) * witness value.
VineAllocationResult vine_allocation(const CoalitionGame& game,
                                     const VineDecomposition& d);

/// Greedy allocation: pack small coalitions (size^2 < n) by descending
/// value, paying each selected coalition's value to all its members,
/// then add the uniform term v_max / ceil(sqrt(n)) to every agent.
/// Feasible, with cost^2 <= 4 * n * rho^2.
Allocation sqrt_allocation(const CoalitionGame& game);

/// The four exact optima and their ratios. With no listed coalitions
/// everything is 0 and each ratio is 1.
struct GapReport {
  Rational kappa, kappa_f, rho, rho_f;
  Rational ratio_pc, gap_primal, gap_dual, alpha_star;
  int tau = -1;                             // -1 when not supplied
  std::vector<std::string> failed_bounds;   // tau sandwich violations
};

/// Computes kappa, kappa_f, rho, rho_f exactly and derives the ratios.
/// When tau >= 0, checks kappa/rho <= tau, kappa/kappa_f <= tau, and
/// rho_f/rho <= tau, recording any violation.
GapReport gap_report(const CoalitionGame& game, int tau = -1,
                     long long node_budget = kDefaultNodeBudget);

}  // namespace coal

#endif  // COAL_STABILITY_HPP
