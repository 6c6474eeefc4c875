#include <doctest.h>

#include <optional>
#include <vector>

#include "coal/games.hpp"
#include "coal/lp.hpp"

using coal::CoalitionGame;
using coal::LinearConstraint;
using coal::LinearProgram;
using coal::LpStatus;
using coal::Rational;
using coal::Relation;

namespace {

// Independent optimum oracle: enumerate every basic point (intersection
// of num_vars hyperplanes drawn from the constraints-as-equalities and
// the axes), keep the feasible ones, and take the best objective. Valid
// for bounded feasible LPs, where an optimal vertex exists.
std::optional<Rational> oracle_lp_optimum(const LinearProgram& lp) {
  int n = lp.num_vars;
  int m = static_cast<int>(lp.constraints.size());
  std::vector<std::vector<Rational>> rows;  // hyperplane pool, [coeffs | rhs]
  for (const auto& c : lp.constraints) {
    std::vector<Rational> row = c.coeffs;
    row.push_back(c.rhs);
    rows.push_back(row);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row(n + 1, Rational(0));
    row[i] = 1;
    rows.push_back(row);
  }

  std::optional<Rational> best;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    // Solve the square system given by the picked hyperplanes.
    std::vector<std::vector<Rational>> a;
    for (int i : pick) a.push_back(rows[i]);
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) {
        singular = true;
        break;
      }
      std::swap(a[col], a[pivot]);
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col] / a[col][col];
        for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    if (!singular) {
      std::vector<Rational> x(n);
      bool feasible = true;
      for (int i = 0; i < n; ++i) {
        x[i] = a[i][n] / a[i][i];
        if (x[i] < 0) feasible = false;
      }
      for (int c = 0; c < m && feasible; ++c) {
        Rational lhs = 0;
        for (int i = 0; i < n; ++i) lhs += lp.constraints[c].coeffs[i] * x[i];
        switch (lp.constraints[c].relation) {
          case Relation::LessEq: feasible = lhs <= lp.constraints[c].rhs; break;
          case Relation::GreaterEq:
            feasible = lhs >= lp.constraints[c].rhs;
            break;
          case Relation::Equal: feasible = lhs == lp.constraints[c].rhs; break;
        }
      }
      if (feasible) {
        Rational obj = 0;
        for (int i = 0; i < n; ++i) obj += lp.objective[i] * x[i];
        if (!best || (lp.maximize ? obj > *best : obj < *best)) best = obj;
      }
    }
    // Next combination of n indices out of rows.size().
    int i = n - 1;
    while (i >= 0 &&
           pick[i] == static_cast<int>(rows.size()) - n + i)
      --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

LinearProgram make_lp(bool maximize, std::vector<Rational> obj,
                      std::vector<LinearConstraint> cons) {
  LinearProgram lp;
  lp.num_vars = static_cast<int>(obj.size());
  lp.maximize = maximize;
  lp.objective = std::move(obj);
  lp.constraints = std::move(cons);
  return lp;
}

}  // namespace

TEST_CASE("simplex solves a textbook maximization exactly") {
  LinearProgram lp = make_lp(
      true, {Rational(1), Rational(1)},
      {{{Rational(1), Rational(2)}, Relation::LessEq, Rational(4)},
       {{Rational(3), Rational(1)}, Relation::LessEq, Rational(6)}});
  auto sol = coal::solve_rational_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == Rational(14, 5));
  CHECK(sol.primal_values[0] == Rational(8, 5));
  CHECK(sol.primal_values[1] == Rational(6, 5));
  CHECK(sol.objective == *oracle_lp_optimum(lp));
}

TEST_CASE("simplex handles equality and minimization") {
  LinearProgram lp = make_lp(
      false, {Rational(2), Rational(3), Rational(1)},
      {{{Rational(1), Rational(1), Rational(1)}, Relation::Equal, Rational(5)},
       {{Rational(1), Rational(0), Rational(-1)}, Relation::GreaterEq,
        Rational(1)}});
  auto sol = coal::solve_rational_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == *oracle_lp_optimum(lp));
  CHECK(sol.objective == Rational(8));  // x = (3,0,2) -> 6+0+2
}

TEST_CASE("simplex reports infeasible and unbounded programs") {
  LinearProgram infeasible = make_lp(
      false, {Rational(1)},
      {{{Rational(1)}, Relation::LessEq, Rational(-1)}});
  CHECK(coal::solve_rational_lp(infeasible).status == LpStatus::Infeasible);

  LinearProgram unbounded = make_lp(
      true, {Rational(1)},
      {{{Rational(-1)}, Relation::LessEq, Rational(1)}});
  CHECK(coal::solve_rational_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("covering and packing LPs agree with the vertex oracle") {
  std::vector<CoalitionGame> games = {
      coal::grid_rowcol_game(2),
      coal::clique_half_game(4),
      coal::clique_half_game(5),
  };
  {
    CoalitionGame g;
    g.graph = coal::generate(coal::GraphFamily::Path, 5);
    g.coalitions[coal::VertexSet{0, 1}] = 2;
    g.coalitions[coal::VertexSet{1, 2, 3}] = 3;
    g.coalitions[coal::VertexSet{3, 4}] = 1;
    g.coalitions[coal::VertexSet{2}] = 1;
    games.push_back(g);
  }
  for (const CoalitionGame& game : games) {
    auto cover = coal::covering_lp(game);
    auto pack = coal::packing_lp(game);
    REQUIRE(cover.status == LpStatus::Optimal);
    REQUIRE(pack.status == LpStatus::Optimal);
    CHECK(cover.objective == pack.objective);  // strong duality

    // Independent oracle on the packing side (fewer variables).
    LinearProgram packing_lp;
    packing_lp.num_vars = static_cast<int>(game.coalitions.size());
    packing_lp.maximize = true;
    for (const auto& [s, v] : game.coalitions)
      packing_lp.objective.push_back(Rational(v));
    for (int i = 0; i < game.graph.num_vertices(); ++i) {
      LinearConstraint c;
      c.relation = Relation::LessEq;
      c.rhs = 1;
      for (const auto& [s, v] : game.coalitions)
        c.coeffs.push_back(Rational(s.contains(i) ? 1 : 0));
      packing_lp.constraints.push_back(c);
    }
    auto expected = oracle_lp_optimum(packing_lp);
    REQUIRE(expected.has_value());
    CHECK(pack.objective == *expected);

    // The covering duals form a feasible packing of matching value.
    Rational dual_value = 0;
    std::size_t idx = 0;
    std::vector<Rational> load(game.graph.num_vertices(), Rational(0));
    for (const auto& [s, v] : game.coalitions) {
      Rational y = cover.duals[idx++];
      CHECK(y >= 0);
      dual_value += y * v;
      for (int i : s.members()) load[i] += y;
    }
    for (const Rational& l : load) CHECK(l <= 1);
    CHECK(dual_value == cover.objective);
  }
}

TEST_CASE("known fractional covering optima") {
  CHECK(coal::covering_lp(coal::clique_half_game(4)).objective ==
        Rational(2));
  CHECK(coal::covering_lp(coal::clique_half_game(5)).objective ==
        Rational(5, 3));
  CHECK(coal::covering_lp(coal::clique_half_game(6)).objective ==
        Rational(2));
  // Row-column grid game: uniform 1/(2k-1) allocation is optimal.
  CHECK(coal::packing_lp(coal::grid_rowcol_game(3)).objective ==
        Rational(3, 2));
}
