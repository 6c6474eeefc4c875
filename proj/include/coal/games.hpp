#ifndef COAL_GAMES_HPP
#define COAL_GAMES_HPP

#include "coal/discrete.hpp"
#include "coal/game.hpp"
#include "coal/graph.hpp"
#include "coal/rational.hpp"
#include "coal/width.hpp"

namespace coal {

/// Simple game whose value-1 coalitions are exactly the thicket's
/// sets. Covering value equals the thicket's hitting size; packing
/// value is 1 (the sets pairwise intersect).
CoalitionGame thicket_game(const Graph& g, const Thicket& t);

/// Game on grid(k) with one value-1 coalition per index i: the union
/// of row i and column i. Requires k >= 2.
CoalitionGame grid_rowcol_game(int k);

/// Row-column game lifted through a grid minor model: coalition i is
/// the union of all branch sets in grid row i and grid column i.
CoalitionGame minor_thicket_game(const Graph& g, const MinorModel& m);

/// Clique on n = s*s vertices labeled by grid coordinates (vertex =
/// i*s + j); coalition i is grid row i union grid column i. Requires a
/// perfect square n >= 4.
CoalitionGame clique_grid_game(int n);

/// All ceil(n/2)-subsets of clique(n) at value 1. Requires
/// 2 <= n <= 12.
CoalitionGame clique_half_game(int n);

/// Simple game over deduplicated unions S of thicket subfamilies with
/// |S intersect x| >= ceil(h/2), where h is the hitting size. Requires
/// x to be a minimum hitting set of t and at most 12 thicket members.
CoalitionGame primal_gap_game(const Graph& g, const Thicket& t,
                              const HittingSet& x,
                              long long node_budget = kDefaultNodeBudget);

/// Exact integral covering value of the implicit path-power game by
/// branch and bound with a lazy violation oracle: survivor blocks are
/// separated by runs of >= r removed consecutive positions, and a
/// violated coalition exists iff some block reaches the size threshold.
int pathpower_cover_number(const ImplicitPathPowerGame& spec,
                           long long node_budget = kDefaultNodeBudget);

/// Fractional covering upper bound k, certified by the uniform
/// allocation k/n per agent: every value-1 coalition has at least
/// ceil(n/k) members, so it receives at least 1.
Rational pathpower_frac_upper(const ImplicitPathPowerGame& spec);

}  // namespace coal

#endif  // COAL_GAMES_HPP
