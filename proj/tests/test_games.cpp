#include <doctest.h>

#include <algorithm>
#include <vector>

#include "coal/discrete.hpp"
#include "coal/errors.hpp"
#include "coal/games.hpp"
#include "coal/lp.hpp"
#include "coal/width.hpp"

using coal::CoalitionGame;
using coal::Graph;
using coal::ImplicitPathPowerGame;
using coal::Rational;
using coal::Thicket;
using coal::VertexSet;

namespace {

// All triples from {1..5} on K6: pairwise intersecting (3+3 > 5),
// minimum transversal size 3.
Thicket k6_triple_thicket() {
  Thicket t;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) t.sets.push_back(VertexSet{a, b, c});
  return t;
}

// Interval-stabbing oracle for the r = 1 path-power cover: minimal
// hits so that no t consecutive positions survive, by DP over the
// current survivor run length.
int oracle_interval_cover(int n, int t) {
  const int kInf = n + 1;
  std::vector<int> cost(t, kInf);  // cost[run] after processing a prefix
  cost[0] = 0;
  for (int pos = 0; pos < n; ++pos) {
    std::vector<int> next(t, kInf);
    for (int run = 0; run < t; ++run) {
      if (cost[run] == kInf) continue;
      next[0] = std::min(next[0], cost[run] + 1);  // hit this position
      if (run + 1 < t) next[run + 1] = std::min(next[run + 1], cost[run]);
    }
    cost = next;
  }
  return *std::min_element(cost.begin(), cost.end());
}

// Explicit enumeration of the implicit game's coalition list.
CoalitionGame materialize_pathpower(const ImplicitPathPowerGame& spec) {
  CoalitionGame game;
  game.graph = coal::generate(coal::GraphFamily::PathPower, spec.n, spec.r);
  for (const VertexSet& s :
       coal::enumerate_connected_sets(game.graph, spec.threshold(), spec.n))
    game.coalitions[s] = 1;
  return game;
}

}  // namespace

TEST_CASE("thicket game covering equals hitting size, packing is one") {
  Graph k6 = coal::generate(coal::GraphFamily::Clique, 6);
  Thicket t = k6_triple_thicket();
  REQUIRE(coal::validate_thicket(k6, t).empty());
  CoalitionGame game = coal::thicket_game(k6, t);
  CHECK(game.coalitions.size() == 10);
  CHECK(coal::integral_covering(game).cost == 3);
  CHECK(coal::integral_packing(game).value == 1);
}

TEST_CASE("row-column grid game shape and named optima") {
  CoalitionGame game = coal::grid_rowcol_game(3);
  REQUIRE(game.coalitions.size() == 3);
  for (const auto& [s, v] : game.coalitions) {
    CHECK(s.size() == 5);  // row of 3 plus column of 3 sharing one cell
    CHECK(v == 1);
  }
  CHECK(coal::integral_packing(game).value == 1);
  CHECK(coal::packing_lp(game).objective == Rational(3, 2));
  CHECK_THROWS_AS(coal::grid_rowcol_game(1), coal::InputError);
}

TEST_CASE("clique grid game mirrors the row-column structure") {
  CoalitionGame game = coal::clique_grid_game(9);
  CHECK(game.coalitions.size() == 3);
  for (const auto& [s, v] : game.coalitions) CHECK(s.size() == 5);
  CHECK(coal::packing_lp(game).objective == Rational(3, 2));
  CHECK_THROWS_AS(coal::clique_grid_game(8), coal::InputError);
}

TEST_CASE("clique half game counts and optima") {
  for (int n : {4, 5, 6, 7, 8}) {
    CoalitionGame game = coal::clique_half_game(n);
    int half = (n + 1) / 2;
    // Binomial(n, half) coalitions.
    long long expect = 1;
    for (int i = 1; i <= half; ++i) expect = expect * (n - half + i) / i;
    CHECK(static_cast<long long>(game.coalitions.size()) == expect);
    CHECK(coal::integral_covering(game).cost == n / 2 + 1);
    CHECK(coal::covering_lp(game).objective == Rational(n, half));
  }
}

TEST_CASE("minor thicket game through an identity grid model") {
  Graph grid = coal::generate(coal::GraphFamily::Grid, 3);
  coal::MinorModel m;
  m.grid_side = 3;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      m.branch_sets[{i, j}] = VertexSet{(i - 1) * 3 + (j - 1)};
  CoalitionGame game = coal::minor_thicket_game(grid, m);
  CoalitionGame direct = coal::grid_rowcol_game(3);
  CHECK(game.coalitions == direct.coalitions);
}

TEST_CASE("primal gap game meets the half-tau bounds") {
  Graph k6 = coal::generate(coal::GraphFamily::Clique, 6);
  Thicket t = k6_triple_thicket();
  coal::HittingSet x{VertexSet{1, 2, 3}};
  CoalitionGame game = coal::primal_gap_game(k6, t, x);
  CHECK_FALSE(game.coalitions.empty());
  CHECK(coal::covering_lp(game).objective <= Rational(2));
  CHECK(coal::integral_covering(game).cost >= 3 / 2 + 1);

  coal::HittingSet not_minimum{VertexSet{1, 2, 3, 4}};
  CHECK_THROWS_AS(coal::primal_gap_game(k6, t, not_minimum),
                  coal::InputError);
  coal::HittingSet misses{VertexSet{0, 1, 2}};  // 0 hits nothing
  CHECK_THROWS_AS(coal::primal_gap_game(k6, t, misses), coal::InputError);
}

TEST_CASE("lazy path power cover equals explicit enumeration") {
  std::vector<ImplicitPathPowerGame> specs = {
      {6, 1, 2}, {6, 2, 2}, {8, 2, 3}, {9, 3, 3},
      {10, 2, 4}, {12, 3, 4}, {12, 1, 5}, {11, 2, 3},
  };
  for (const auto& spec : specs) {
    int lazy = coal::pathpower_cover_number(spec);
    int explicit_cover =
        static_cast<int>(coal::integral_covering(materialize_pathpower(spec))
                             .cost);
    CHECK(lazy == explicit_cover);
    if (spec.r == 1)
      CHECK(lazy == oracle_interval_cover(spec.n, spec.threshold()));
  }
  CHECK(coal::pathpower_cover_number({27, 2, 3}) >= 4);
}

TEST_CASE("path power fractional upper bound is k") {
  CHECK(coal::pathpower_frac_upper({27, 2, 3}) == Rational(3));
  CHECK(coal::pathpower_frac_upper({12, 2, 4}) == Rational(4));
  CHECK_THROWS_AS(coal::pathpower_frac_upper({5, 2, 2}), coal::InputError);
}
