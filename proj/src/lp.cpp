#include "coal/lp.hpp"

#include <stdexcept>
#include <string>

#include "coal/errors.hpp"

namespace coal {

namespace {

// Tableau simplex working on the row-standardized problem:
// minimize c.x, rows with rhs >= 0, initial basis = identity columns.
class SimplexTableau {
 public:
  SimplexTableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(rows, std::vector<Rational>(cols + 1)),
        basis_(rows, -1) {}

  Rational& at(int i, int j) { return cells_[i][j]; }
  Rational& rhs(int i) { return cells_[i][cols_]; }
  int basis(int i) const { return basis_[i]; }
  void set_basis(int i, int j) { basis_[i] = j; }

  void pivot(int row, int col) {
    Rational p = cells_[row][col];
    for (int j = 0; j <= cols_; ++j) cells_[row][j] /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      Rational factor = cells_[i][col];
      if (factor == 0) continue;
      for (int j = 0; j <= cols_; ++j)
        cells_[i][j] -= factor * cells_[row][j];
    }
    basis_[row] = col;
  }

  // Bland's rule: entering = lowest-index allowed column with negative
  // reduced cost; leaving = lowest basis index among minimal ratios.
  // Returns Optimal or Unbounded.
  LpStatus minimize(const std::vector<Rational>& cost,
                    const std::vector<char>& allowed) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < cols_ && entering < 0; ++j) {
        if (!allowed[j]) continue;
        Rational reduced = cost[j];
        for (int i = 0; i < rows_; ++i)
          if (cost[basis_[i]] != 0) reduced -= cost[basis_[i]] * cells_[i][j];
        if (reduced < 0) entering = j;
      }
      if (entering < 0) return LpStatus::Optimal;
      int leaving = -1;
      Rational best_ratio;
      for (int i = 0; i < rows_; ++i) {
        if (cells_[i][entering] <= 0) continue;
        Rational ratio = cells_[i][cols_] / cells_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational total = 0;
    for (int i = 0; i < rows_; ++i)
      if (cost[basis_[i]] != 0) total += cost[basis_[i]] * cells_[i][cols_];
    return total;
  }

  int rows_, cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<int> basis_;
};

// Exact post-hoc check: primal feasibility, dual sign and feasibility,
// and matching objectives. Together these certify optimality.
void verify_optimal(const LinearProgram& lp, const LpSolution& sol) {
  auto fail = [](const std::string& what) {
    throw std::logic_error("lp solution failed verification: " + what);
  };
  int m = static_cast<int>(lp.constraints.size());
  for (int j = 0; j < lp.num_vars; ++j)
    if (sol.primal_values[j] < 0) fail("negative primal value");
  Rational primal_obj = 0;
  for (int j = 0; j < lp.num_vars; ++j)
    primal_obj += lp.objective[j] * sol.primal_values[j];
  if (primal_obj != sol.objective) fail("objective mismatch");

  Rational dual_obj = 0;
  for (int i = 0; i < m; ++i) {
    const LinearConstraint& c = lp.constraints[i];
    Rational lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j)
      lhs += c.coeffs[j] * sol.primal_values[j];
    bool ok = c.relation == Relation::LessEq      ? lhs <= c.rhs
              : c.relation == Relation::GreaterEq ? lhs >= c.rhs
                                                  : lhs == c.rhs;
    if (!ok) fail("primal constraint violated");
    const Rational& y = sol.duals[i];
    // Sign convention: for a minimization, >= rows carry y >= 0 and
    // <= rows carry y <= 0; mirrored for maximization.
    if (c.relation == Relation::GreaterEq &&
        (lp.maximize ? y > 0 : y < 0))
      fail("dual sign");
    if (c.relation == Relation::LessEq && (lp.maximize ? y < 0 : y > 0))
      fail("dual sign");
    dual_obj += y * c.rhs;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    Rational col = 0;
    for (int i = 0; i < m; ++i) col += sol.duals[i] * lp.constraints[i].coeffs[j];
    if (lp.maximize ? col < lp.objective[j] : col > lp.objective[j])
      fail("dual constraint violated");
  }
  if (dual_obj != primal_obj) fail("strong duality mismatch");
}

}  // namespace

LpSolution solve_rational_lp(const LinearProgram& lp) {
  int n = lp.num_vars;
  int m = static_cast<int>(lp.constraints.size());
  if (static_cast<int>(lp.objective.size()) != n)
    throw InputError("objective length does not match variable count");
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != n)
      throw InputError("constraint length does not match variable count");

  // Internal form: minimize; rows normalized to rhs >= 0.
  std::vector<Rational> cost(n);
  for (int j = 0; j < n; ++j)
    cost[j] = lp.maximize ? -lp.objective[j] : lp.objective[j];
  std::vector<char> negated(m, 0);

  // Column layout: structural | slack/surplus | artificial.
  int extra = 0, artificials = 0;
  std::vector<Relation> row_rel(m);
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    row_rel[i] = c.relation;
    if (c.rhs < 0) {
      negated[i] = 1;
      if (c.relation == Relation::LessEq)
        row_rel[i] = Relation::GreaterEq;
      else if (c.relation == Relation::GreaterEq)
        row_rel[i] = Relation::LessEq;
    }
    if (row_rel[i] != Relation::Equal) ++extra;
    if (row_rel[i] != Relation::LessEq) ++artificials;
  }
  int cols = n + extra + artificials;
  SimplexTableau tab(m, cols);
  std::vector<Rational> phase1_cost(cols, 0), phase2_cost(cols, 0);
  std::vector<char> allowed(cols, 1), structural_or_logical(cols, 1);
  for (int j = 0; j < n; ++j) phase2_cost[j] = cost[j];

  std::vector<int> identity_col(m, -1);  // column whose tableau values are B^-1 e_i
  int next_extra = n, next_art = n + extra;
  for (int i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    for (int j = 0; j < n; ++j)
      tab.at(i, j) = negated[i] ? -c.coeffs[j] : c.coeffs[j];
    tab.rhs(i) = negated[i] ? -c.rhs : c.rhs;
    if (row_rel[i] == Relation::LessEq) {
      tab.at(i, next_extra) = 1;
      tab.set_basis(i, next_extra);
      identity_col[i] = next_extra;
      ++next_extra;
    } else {
      if (row_rel[i] == Relation::GreaterEq) tab.at(i, next_extra++) = -1;
      tab.at(i, next_art) = 1;
      tab.set_basis(i, next_art);
      identity_col[i] = next_art;
      phase1_cost[next_art] = 1;
      allowed[next_art] = 0;  // blocked once phase 1 finishes
      structural_or_logical[next_art] = 0;
      ++next_art;
    }
  }

  LpSolution sol;
  if (artificials > 0) {
    std::vector<char> phase1_allowed(cols, 1);
    LpStatus status = tab.minimize(phase1_cost, phase1_allowed);
    if (status != LpStatus::Optimal || tab.objective(phase1_cost) != 0) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }
    // Drive any basic artificial out on a nonzero non-artificial entry;
    // a fully zero row is redundant and keeps its artificial at zero.
    for (int i = 0; i < m; ++i) {
      if (structural_or_logical[tab.basis(i)]) continue;
      for (int j = 0; j < n + extra; ++j)
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
    }
  }

  LpStatus status = tab.minimize(phase2_cost, allowed);
  if (status == LpStatus::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.primal_values.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (tab.basis(i) < n) sol.primal_values[tab.basis(i)] = tab.rhs(i);
  Rational internal_obj = tab.objective(phase2_cost);
  sol.objective = lp.maximize ? -internal_obj : internal_obj;

  sol.duals.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational y = 0;
    for (int k = 0; k < m; ++k)
      if (phase2_cost[tab.basis(k)] != 0)
        y += phase2_cost[tab.basis(k)] * tab.at(k, identity_col[i]);
    if (negated[i]) y = -y;
    sol.duals[i] = lp.maximize ? -y : y;
  }

  verify_optimal(lp, sol);
  return sol;
}

LpSolution covering_lp(const CoalitionGame& game) {
  require_valid_game(game);
  int n = game.graph.num_vertices();
  LinearProgram lp;
  lp.num_vars = n;
  lp.maximize = false;
  lp.objective.assign(n, Rational(1));
  for (const auto& [s, v] : game.coalitions) {
    LinearConstraint c;
    c.coeffs.assign(n, Rational(0));
    for (int i : s.members()) c.coeffs[i] = 1;
    c.relation = Relation::GreaterEq;
    c.rhs = v;
    lp.constraints.push_back(std::move(c));
  }
  return solve_rational_lp(lp);
}

LpSolution packing_lp(const CoalitionGame& game) {
  require_valid_game(game);
  int n = game.graph.num_vertices();
  int vars = static_cast<int>(game.coalitions.size());
  LinearProgram lp;
  lp.num_vars = vars;
  lp.maximize = true;
  lp.objective.reserve(vars);
  for (const auto& [s, v] : game.coalitions) lp.objective.push_back(v);
  for (int i = 0; i < n; ++i) {
    LinearConstraint c;
    c.coeffs.assign(vars, Rational(0));
    int j = 0;
    for (const auto& [s, v] : game.coalitions) {
      if (s.contains(i)) c.coeffs[j] = 1;
      ++j;
    }
    c.relation = Relation::LessEq;
    c.rhs = 1;
    lp.constraints.push_back(std::move(c));
  }
  return solve_rational_lp(lp);
}

}  // namespace coal
