#ifndef COAL_GAME_HPP
#define COAL_GAME_HPP

#include <map>
#include <string>

#include "coal/graph.hpp"

namespace coal {

/// A coalition game over an interaction graph. Values are stored
/// sparsely: an absent coalition has value zero, and every listed
/// coalition must induce a connected subgraph.
struct CoalitionGame {
  Graph graph;
  std::map<VertexSet, long long> coalitions;  // value >= 1 for each entry
  std::string tag;

  bool is_simple() const {
    for (const auto& [s, v] : coalitions)
      if (v != 1) return false;
    return true;
  }
};

/// Itemized violations: non-viable coalitions, non-positive values,
/// empty member lists.
std::vector<std::string> validate_game(const CoalitionGame& game);

/// Throws InputError listing the first violation.
void require_valid_game(const CoalitionGame& game);

/// Path-power game kept implicit: on P^r, every connected set with at
/// least ceil(n/k) vertices has value 1. The coalition list is never
/// materialized; only the dedicated lazy routines accept this type.
struct ImplicitPathPowerGame {
  int n = 0;
  int r = 0;
  int k = 0;

  int threshold() const { return (n + k - 1) / k; }
};

/// Checks n, r, k positivity and n >= 3r.
void require_valid_pathpower(const ImplicitPathPowerGame& spec);

}  // namespace coal

#endif  // COAL_GAME_HPP
