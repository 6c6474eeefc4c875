#ifndef COAL_LP_HPP
#define COAL_LP_HPP

#include <vector>

#include "coal/game.hpp"
#include "coal/rational.hpp"

namespace coal {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per variable, dense
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// Variables are implicitly non-negative.
struct LinearProgram {
  int num_vars = 0;
  bool maximize = false;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational objective;
  std::vector<Rational> primal_values;  // per variable
  std::vector<Rational> duals;          // per constraint
};

/// Exact two-phase primal simplex over rationals with Bland's
/// anti-cycling rule (lowest-index entering and leaving variable).
/// Optimal solutions are re-verified for primal and dual feasibility
/// and matching objectives before being returned.
LpSolution solve_rational_lp(const LinearProgram& lp);

/// min sum_i x_i subject to sum_{i in S} x_i >= v(S) for every listed
/// coalition; optimum is kappa^f. Duals give an optimal fractional
/// packing, one per coalition in the game's iteration order.
LpSolution covering_lp(const CoalitionGame& game);

/// max sum_S v(S) y_S subject to sum_{S : i in S} y_S <= 1 per vertex;
/// optimum is rho^f and equals covering_lp's objective exactly.
/// Variables follow the game's coalition iteration order.
LpSolution packing_lp(const CoalitionGame& game);

}  // namespace coal

#endif  // COAL_LP_HPP
