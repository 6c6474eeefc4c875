#include "coal/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "coal/errors.hpp"
#include "coal/lp.hpp"

namespace coal {

namespace {

struct BudgetCounter {
  long long remaining;
  void tick() {
    if (--remaining < 0) throw BudgetError("search node budget exceeded");
  }
};

// Greedy transversal, most-covering vertex first (tie: lowest index).
std::vector<int> greedy_hitting(const std::vector<std::uint64_t>& sets,
                                int n) {
  std::vector<int> chosen;
  std::vector<std::uint64_t> unhit = sets;
  while (!unhit.empty()) {
    int best = -1, best_count = -1;
    for (int v = 0; v < n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      int count = 0;
      for (std::uint64_t s : unhit)
        if (s & bit) ++count;
      if (count > best_count) {
        best = v;
        best_count = count;
      }
    }
    chosen.push_back(best);
    std::uint64_t bit = std::uint64_t{1} << best;
    std::erase_if(unhit, [bit](std::uint64_t s) { return (s & bit) != 0; });
  }
  return chosen;
}

// Count of pairwise disjoint unhit sets, smallest first; a valid lower
// bound on the remaining transversal size.
int disjoint_bound(const std::vector<std::uint64_t>& unhit) {
  std::vector<std::uint64_t> sorted = unhit;
  std::sort(sorted.begin(), sorted.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::uint64_t used = 0;
  int count = 0;
  for (std::uint64_t s : sorted)
    if ((s & used) == 0) {
      used |= s;
      ++count;
    }
  return count;
}

void hitting_search(const std::vector<std::uint64_t>& sets, int n,
                    std::uint64_t chosen, int chosen_size,
                    std::vector<int>& incumbent, BudgetCounter& budget) {
  budget.tick();
  std::vector<std::uint64_t> unhit;
  for (std::uint64_t s : sets)
    if ((s & chosen) == 0) unhit.push_back(s);
  if (unhit.empty()) {
    if (chosen_size < static_cast<int>(incumbent.size())) {
      incumbent.clear();
      for (int v = 0; v < n; ++v)
        if (chosen & (std::uint64_t{1} << v)) incumbent.push_back(v);
    }
    return;
  }
  if (chosen_size + disjoint_bound(unhit) >=
      static_cast<int>(incumbent.size()))
    return;
  std::uint64_t branch_set = unhit.front();
  for (std::uint64_t s : unhit)
    if (std::popcount(s) < std::popcount(branch_set) ||
        (std::popcount(s) == std::popcount(branch_set) && s < branch_set))
      branch_set = s;
  for (int v = 0; v < n; ++v)
    if (branch_set & (std::uint64_t{1} << v))
      hitting_search(sets, n, chosen | (std::uint64_t{1} << v),
                     chosen_size + 1, incumbent, budget);
}

}  // namespace

HittingSet min_hitting_set(const std::vector<VertexSet>& family, int n,
                           long long node_budget) {
  if (family.empty()) throw InputError("hitting set needs a non-empty family");
  if (n > 64) throw BudgetError("hitting set solver limited to n <= 64");
  std::vector<std::uint64_t> sets;
  for (const VertexSet& s : family) {
    if (s.empty()) throw InputError("hitting set family contains an empty set");
    if (s.max_vertex() >= n) throw InputError("family vertex out of range");
    sets.push_back(s.mask());
  }
  std::vector<int> incumbent = greedy_hitting(sets, n);
  BudgetCounter budget{node_budget};
  hitting_search(sets, n, 0, 0, incumbent, budget);
  return HittingSet{VertexSet(incumbent)};
}

namespace {

struct PackingInstance {
  std::vector<std::uint64_t> masks;
  std::vector<long long> values;
  std::vector<VertexSet> sets;
};

// f(mask) = best packing value using only vertices inside mask.
long long packing_value(const PackingInstance& inst, std::uint64_t mask,
                        std::vector<std::vector<int>>& by_vertex,
                        std::vector<long long>& memo, BudgetCounter& budget) {
  if (mask == 0) return 0;
  long long& slot = memo[mask];
  if (slot >= 0) return slot;
  budget.tick();
  int v = std::countr_zero(mask);
  long long best =
      packing_value(inst, mask & (mask - 1), by_vertex, memo, budget);
  for (int idx : by_vertex[v])
    if ((inst.masks[idx] & ~mask) == 0)
      best = std::max(best, inst.values[idx] +
                                packing_value(inst, mask & ~inst.masks[idx],
                                              by_vertex, memo, budget));
  slot = best;
  return best;
}

IntegralPacking packing_by_mask_dp(const PackingInstance& inst, int n,
                                   long long node_budget) {
  std::vector<std::vector<int>> by_vertex(n);
  for (int idx = 0; idx < static_cast<int>(inst.masks.size()); ++idx)
    for (int v = 0; v < n; ++v)
      if (inst.masks[idx] & (std::uint64_t{1} << v))
        by_vertex[v].push_back(idx);
  std::vector<long long> memo(std::uint64_t{1} << n, -1);
  BudgetCounter budget{node_budget};
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1;
  long long total = packing_value(inst, full, by_vertex, memo, budget);

  // Reconstruct deterministically: skip the lowest vertex when that
  // preserves the optimum, otherwise take the first optimal coalition.
  IntegralPacking result;
  result.value = total;
  std::uint64_t mask = full;
  long long need = total;
  while (mask != 0 && need > 0) {
    int v = std::countr_zero(mask);
    if (packing_value(inst, mask & (mask - 1), by_vertex, memo, budget) ==
        need) {
      mask &= mask - 1;
      continue;
    }
    for (int idx : by_vertex[v]) {
      if ((inst.masks[idx] & ~mask) != 0) continue;
      long long rest = need - inst.values[idx];
      if (rest >= 0 &&
          packing_value(inst, mask & ~inst.masks[idx], by_vertex, memo,
                        budget) == rest) {
        result.coalitions.push_back(inst.sets[idx]);
        mask &= ~inst.masks[idx];
        need = rest;
        break;
      }
    }
  }
  return result;
}

void packing_branch(const PackingInstance& inst, std::size_t idx,
                    std::uint64_t used, long long value,
                    std::vector<std::size_t>& chosen,
                    std::vector<long long>& suffix_value,
                    long long& best_value,
                    std::vector<std::size_t>& best_chosen,
                    BudgetCounter& budget) {
  budget.tick();
  if (value > best_value) {
    best_value = value;
    best_chosen = chosen;
  }
  if (idx >= inst.masks.size()) return;
  if (value + suffix_value[idx] <= best_value) return;
  if ((inst.masks[idx] & used) == 0) {
    chosen.push_back(idx);
    packing_branch(inst, idx + 1, used | inst.masks[idx],
                   value + inst.values[idx], chosen, suffix_value, best_value,
                   best_chosen, budget);
    chosen.pop_back();
  }
  packing_branch(inst, idx + 1, used, value, chosen, suffix_value, best_value,
                 best_chosen, budget);
}

}  // namespace

IntegralPacking integral_packing(const CoalitionGame& game,
                                 long long node_budget) {
  require_valid_game(game);
  int n = game.graph.num_vertices();
  if (n > 64) throw BudgetError("integral packing limited to n <= 64");
  PackingInstance inst;
  for (const auto& [s, v] : game.coalitions) {
    inst.masks.push_back(s.mask());
    inst.values.push_back(v);
    inst.sets.push_back(s);
  }
  if (inst.masks.empty()) return IntegralPacking{};
  if (n <= 20) return packing_by_mask_dp(inst, n, node_budget);

  std::vector<long long> suffix_value(inst.masks.size() + 1, 0);
  for (int i = static_cast<int>(inst.masks.size()) - 1; i >= 0; --i)
    suffix_value[i] = suffix_value[i + 1] + inst.values[i];
  long long best_value = 0;
  std::vector<std::size_t> chosen, best_chosen;
  BudgetCounter budget{node_budget};
  packing_branch(inst, 0, 0, 0, chosen, suffix_value, best_value, best_chosen,
                 budget);
  IntegralPacking result;
  result.value = best_value;
  for (std::size_t idx : best_chosen)
    result.coalitions.push_back(inst.sets[idx]);
  return result;
}

namespace {

// Branch and bound for the general integral cover: bound variables,
// solve the exact LP relaxation, branch on the lowest-index fractional
// vertex.
struct CoverSearch {
  const CoalitionGame& game;
  int n;
  long long best_cost;
  std::map<int, long long> best_allocation;
  BudgetCounter budget;

  LpSolution bounded_lp(const std::vector<long long>& lower,
                        const std::vector<std::optional<long long>>& upper) {
    LinearProgram lp;
    lp.num_vars = n;
    lp.objective.assign(n, Rational(1));
    for (const auto& [s, v] : game.coalitions) {
      LinearConstraint c;
      c.coeffs.assign(n, Rational(0));
      for (int i : s.members()) c.coeffs[i] = 1;
      c.relation = Relation::GreaterEq;
      c.rhs = v;
      lp.constraints.push_back(std::move(c));
    }
    for (int i = 0; i < n; ++i) {
      if (lower[i] > 0) {
        LinearConstraint c;
        c.coeffs.assign(n, Rational(0));
        c.coeffs[i] = 1;
        c.relation = Relation::GreaterEq;
        c.rhs = lower[i];
        lp.constraints.push_back(std::move(c));
      }
      if (upper[i]) {
        LinearConstraint c;
        c.coeffs.assign(n, Rational(0));
        c.coeffs[i] = 1;
        c.relation = Relation::LessEq;
        c.rhs = *upper[i];
        lp.constraints.push_back(std::move(c));
      }
    }
    return solve_rational_lp(lp);
  }

  void run(std::vector<long long> lower,
           std::vector<std::optional<long long>> upper) {
    budget.tick();
    LpSolution relax = bounded_lp(lower, upper);
    if (relax.status == LpStatus::Infeasible) return;
    Integer num = numerator(relax.objective), den = denominator(relax.objective);
    Integer lb_int = (num + den - 1) / den;  // ceil
    if (lb_int >= best_cost) return;

    int frac_var = -1;
    for (int i = 0; i < n && frac_var < 0; ++i)
      if (denominator(relax.primal_values[i]) != 1) frac_var = i;
    if (frac_var < 0) {
      long long cost = 0;
      std::map<int, long long> allocation;
      for (int i = 0; i < n; ++i) {
        long long x =
            static_cast<long long>(numerator(relax.primal_values[i]));
        if (x > 0) allocation[i] = x;
        cost += x;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_allocation = std::move(allocation);
      }
      return;
    }
    Integer fn = numerator(relax.primal_values[frac_var]);
    Integer fd = denominator(relax.primal_values[frac_var]);
    long long floor_val = static_cast<long long>(fn / fd);

    auto up_lower = lower;
    up_lower[frac_var] = std::max(lower[frac_var], floor_val + 1);
    run(up_lower, upper);

    auto down_upper = upper;
    down_upper[frac_var] = floor_val;
    run(lower, down_upper);
  }
};

}  // namespace

IntegralCover integral_covering(const CoalitionGame& game,
                                long long node_budget) {
  require_valid_game(game);
  int n = game.graph.num_vertices();
  if (game.coalitions.empty()) return IntegralCover{};

  if (game.is_simple()) {
    // 0/1 case: a minimum cover is exactly a minimum transversal.
    std::vector<VertexSet> family;
    for (const auto& [s, v] : game.coalitions) family.push_back(s);
    HittingSet hit = min_hitting_set(family, n, node_budget);
    IntegralCover cover;
    for (int v : hit.members.members()) cover.allocation[v] = 1;
    cover.cost = hit.size();
    return cover;
  }

  // Rounding up the LP optimum is always feasible; use it as incumbent.
  LpSolution relax = covering_lp(game);
  long long greedy_cost = 0;
  std::map<int, long long> greedy_alloc;
  for (int i = 0; i < n; ++i) {
    Integer num = numerator(relax.primal_values[i]);
    Integer den = denominator(relax.primal_values[i]);
    long long x = static_cast<long long>((num + den - 1) / den);
    if (x > 0) greedy_alloc[i] = x;
    greedy_cost += x;
  }

  CoverSearch search{game, n, greedy_cost + 1, {}, BudgetCounter{node_budget}};
  search.best_cost = greedy_cost;
  search.best_allocation = std::move(greedy_alloc);
  search.run(std::vector<long long>(n, 0),
             std::vector<std::optional<long long>>(n));
  IntegralCover cover;
  cover.allocation = std::move(search.best_allocation);
  cover.cost = search.best_cost;
  return cover;
}

}  // namespace coal
