#include "coal/game.hpp"

#include "coal/errors.hpp"

namespace coal {

std::vector<std::string> validate_game(const CoalitionGame& game) {
  std::vector<std::string> violations;
  for (const auto& [s, v] : game.coalitions) {
    if (s.empty()) {
      violations.push_back("empty coalition listed");
      continue;
    }
    if (s.max_vertex() >= game.graph.num_vertices()) {
      violations.push_back("coalition " + s.to_string() +
                           " has out-of-range vertices");
      continue;
    }
    if (v < 1)
      violations.push_back("coalition " + s.to_string() +
                           " has non-positive value");
    if (!is_connected_induced(game.graph, s))
      violations.push_back("coalition " + s.to_string() +
                           " induces a disconnected subgraph");
  }
  return violations;
}

void require_valid_game(const CoalitionGame& game) {
  auto violations = validate_game(game);
  if (!violations.empty())
    throw InputError("invalid game" +
                     (game.tag.empty() ? "" : " [" + game.tag + "]") + ": " +
                     violations.front());
}

void require_valid_pathpower(const ImplicitPathPowerGame& spec) {
  if (spec.n <= 0 || spec.r <= 0 || spec.k <= 0)
    throw InputError("path-power game parameters must be positive");
  if (spec.n < 3 * spec.r)
    throw InputError("path-power game requires n >= 3r");
}

}  // namespace coal
