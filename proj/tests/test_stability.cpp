#include <doctest.h>

#include <vector>

#include "coal/discrete.hpp"
#include "coal/errors.hpp"
#include "coal/experiments.hpp"
#include "coal/games.hpp"
#include "coal/stability.hpp"
#include "coal/width.hpp"

using coal::CoalitionGame;
using coal::Graph;
using coal::Rational;
using coal::VertexSet;

namespace {

// Test-side feasibility check, independent of the library's own
// re-verification.
void check_feasible(const CoalitionGame& game, const coal::Allocation& a) {
  Rational total = 0;
  for (const auto& [v, amount] : a.values) {
    CHECK(amount >= 0);
    total += amount;
  }
  CHECK(total == a.cost);
  for (const auto& [s, v] : game.coalitions) {
    Rational got = 0;
    for (int i : s.members()) {
      auto it = a.values.find(i);
      if (it != a.values.end()) got += it->second;
    }
    CHECK(got >= v);
  }
}

}  // namespace

TEST_CASE("vine allocation on named games stays within width times rho") {
  struct Case {
    CoalitionGame game;
    coal::VineDecomposition vine;
  };
  std::vector<Case> cases;
  cases.push_back({coal::grid_rowcol_game(3), coal::grid_column_vine(3)});
  cases.push_back({coal::clique_half_game(5), coal::clique_half_vine(5)});
  cases.push_back({coal::clique_half_game(6), coal::clique_half_vine(6)});
  {
    CoalitionGame g;
    g.graph = coal::generate(coal::GraphFamily::Path, 6);
    g.coalitions[VertexSet{0, 1, 2}] = 4;
    g.coalitions[VertexSet{2, 3}] = 2;
    g.coalitions[VertexSet{3, 4, 5}] = 3;
    g.coalitions[VertexSet{1, 2, 3, 4}] = 5;
    cases.push_back({g, coal::trivial_vine(g.graph)});
  }
  for (const Case& c : cases) {
    auto result = coal::vine_allocation(c.game, c.vine);
    check_feasible(c.game, result.allocation);
    int w = result.padded.width();
    CHECK(w == c.vine.width());  // padding never raises the width
    // Witness is a disjoint packing of listed coalitions.
    VertexSet used;
    long long value = 0;
    for (const VertexSet& q : result.witness.coalitions) {
      CHECK(c.game.coalitions.count(q) == 1);
      CHECK_FALSE(q.intersects(used));
      used = used.set_union(q);
      value += c.game.coalitions.at(q);
    }
    CHECK(value == result.witness.value);
    CHECK(result.allocation.cost <= Rational(w) * result.witness.value);
    // The witness value never beats the exact packing optimum.
    CHECK(result.witness.value <= coal::integral_packing(c.game).value);
  }
}

TEST_CASE("vine allocation on seeded random games over random trees") {
  coal::RngStream rng(424242);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 5;
    Graph tree = coal::random_tree(n, rng);
    CoalitionGame game = coal::random_game(tree, 8, 4, rng);
    if (game.coalitions.empty()) continue;
    auto result = coal::vine_allocation(game, coal::trivial_vine(tree));
    check_feasible(game, result.allocation);
    CHECK(result.allocation.cost <=
          Rational(result.padded.width()) * result.witness.value);
  }
}

TEST_CASE("vine allocation rejects invalid decompositions") {
  CoalitionGame game = coal::grid_rowcol_game(2);
  coal::VineDecomposition bad;
  bad.num_nodes = 1;
  bad.labels = {VertexSet{0}};  // does not cover the grid
  CHECK_THROWS_AS(coal::vine_allocation(game, bad), coal::InputError);
}

TEST_CASE("sqrt allocation is feasible with the stated cost bound") {
  coal::RngStream rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 13;  // up to 16
    Graph g = coal::random_connected_graph(n, rng);
    CoalitionGame game = coal::random_game(g, 10, 5, rng);
    if (game.coalitions.empty()) continue;
    auto a = coal::sqrt_allocation(game);
    check_feasible(game, a);
    long long rho = coal::integral_packing(game).value;
    CHECK(a.cost * a.cost <= Rational(4) * n * rho * rho);
  }
}

TEST_CASE("gap report ratios factor exactly") {
  CoalitionGame game = coal::clique_half_game(5);
  auto report = coal::gap_report(game, 3);
  CHECK(report.kappa == Rational(3));
  CHECK(report.kappa_f == Rational(5, 3));
  CHECK(report.rho_f == Rational(5, 3));
  CHECK(report.rho == Rational(1));
  CHECK(report.ratio_pc == Rational(3));
  CHECK(report.gap_primal == Rational(9, 5));
  CHECK(report.gap_dual == Rational(5, 3));
  CHECK(report.ratio_pc == report.gap_primal * report.gap_dual);
  CHECK(report.alpha_star == report.gap_dual);
  CHECK(report.failed_bounds.empty());

  // An impossible tau assertion is recorded, not thrown.
  auto failing = coal::gap_report(game, 1);
  CHECK_FALSE(failing.failed_bounds.empty());

  CoalitionGame empty;
  empty.graph = coal::generate(coal::GraphFamily::Path, 3);
  auto trivial = coal::gap_report(empty);
  CHECK(trivial.kappa == Rational(0));
  CHECK(trivial.ratio_pc == Rational(1));
}
