#include "coal/games.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coal/errors.hpp"

namespace coal {

CoalitionGame thicket_game(const Graph& g, const Thicket& t) {
  auto violations = validate_thicket(g, t);
  if (!violations.empty())
    throw InputError("invalid thicket: " + violations.front());
  if (t.sets.empty()) throw InputError("thicket game needs at least one set");
  CoalitionGame game;
  game.graph = g;
  game.tag = "thicket";
  for (const VertexSet& s : t.sets) game.coalitions[s] = 1;
  require_valid_game(game);
  return game;
}

CoalitionGame grid_rowcol_game(int k) {
  if (k < 2) throw InputError("row-column game needs grid side >= 2");
  CoalitionGame game;
  game.graph = generate(GraphFamily::Grid, k);
  game.tag = "grid-rowcol(" + std::to_string(k) + ")";
  for (int i = 0; i < k; ++i) {
    std::vector<int> members;
    for (int col = 0; col < k; ++col) members.push_back(i * k + col);
    for (int row = 0; row < k; ++row)
      if (row != i) members.push_back(row * k + i);
    game.coalitions[VertexSet(members)] = 1;
  }
  require_valid_game(game);
  return game;
}

CoalitionGame minor_thicket_game(const Graph& g, const MinorModel& m) {
  auto violations = validate_minor_model(g, m);
  if (!violations.empty())
    throw InputError("invalid minor model: " + violations.front());
  CoalitionGame game;
  game.graph = g;
  game.tag = "minor-rowcol(" + std::to_string(m.grid_side) + ")";
  for (int i = 1; i <= m.grid_side; ++i) {
    VertexSet members;
    for (int j = 1; j <= m.grid_side; ++j) {
      members = members.set_union(m.branch_sets.at({i, j}));
      members = members.set_union(m.branch_sets.at({j, i}));
    }
    game.coalitions[members] = 1;
  }
  require_valid_game(game);
  return game;
}

CoalitionGame clique_grid_game(int n) {
  if (n < 4) throw InputError("clique grid game needs n >= 4");
  Integer side = isqrt_floor(n);
  if (side * side != n)
    throw InputError("clique grid game needs a perfect square, got " +
                     std::to_string(n));
  int s = static_cast<int>(side);
  CoalitionGame game;
  game.graph = generate(GraphFamily::Clique, n);
  game.tag = "clique-grid(" + std::to_string(n) + ")";
  for (int i = 0; i < s; ++i) {
    std::vector<int> members;
    for (int j = 0; j < s; ++j) members.push_back(i * s + j);
    for (int row = 0; row < s; ++row)
      if (row != i) members.push_back(row * s + i);
    game.coalitions[VertexSet(members)] = 1;
  }
  require_valid_game(game);
  return game;
}

CoalitionGame clique_half_game(int n) {
  if (n < 2 || n > 12)
    throw InputError("clique half-game needs 2 <= n <= 12");
  int half = (n + 1) / 2;
  CoalitionGame game;
  game.graph = generate(GraphFamily::Clique, n);
  game.tag = "clique-half(" + std::to_string(n) + ")";
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::uint64_t mask = (std::uint64_t{1} << half) - 1;
  while (mask <= full) {
    game.coalitions[VertexSet::from_mask(mask)] = 1;
    std::uint64_t low = mask & (~mask + 1);
    std::uint64_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  require_valid_game(game);
  return game;
}

CoalitionGame primal_gap_game(const Graph& g, const Thicket& t,
                              const HittingSet& x, long long node_budget) {
  auto violations = validate_thicket(g, t);
  if (!violations.empty())
    throw InputError("invalid thicket: " + violations.front());
  int p = static_cast<int>(t.sets.size());
  if (p == 0) throw InputError("primal gap game needs a non-empty thicket");
  if (p > 12)
    throw BudgetError("primal gap game limited to 12 thicket members");
  for (const VertexSet& s : t.sets)
    if (!s.intersects(x.members))
      throw InputError("hitting set misses thicket set " + s.to_string());
  int h = min_hitting_set(t.sets, g.num_vertices(), node_budget).size();
  if (x.size() != h)
    throw InputError("hitting set of size " + std::to_string(x.size()) +
                     " is not minimum (minimum is " + std::to_string(h) + ")");

  int threshold = (h + 1) / 2;
  CoalitionGame game;
  game.graph = g;
  game.tag = "primal-gap";
  // Distinct subfamily unions; a union of pairwise-intersecting
  // connected sets is connected, so each listed coalition is viable.
  std::map<VertexSet, char> unions;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << p); ++pick) {
    VertexSet s;
    for (int i = 0; i < p; ++i)
      if ((pick >> i) & 1) s = s.set_union(t.sets[i]);
    unions.emplace(std::move(s), 0);
  }
  for (const auto& [s, unused] : unions)
    if (s.set_intersection(x.members).size() >= threshold)
      game.coalitions[s] = 1;
  require_valid_game(game);
  return game;
}

namespace {

// The value-1 coalitions of the implicit game are the connected sets
// of P^r with >= threshold vertices. Survivors of a candidate hitting
// set split into blocks at every run of >= r consecutive removed path
// positions; the cover is feasible iff no block holds threshold
// survivors.
struct PathPowerSearch {
  int n, r, threshold;
  long long remaining;
  std::vector<char> hit;
  std::vector<char> forbidden;  // branch-exclusion, for duplicate-free search
  int chosen = 0;
  int best;

  void tick() {
    if (--remaining < 0) throw BudgetError("search node budget exceeded");
  }

  // First threshold survivors lying in one block; empty iff feasible.
  std::vector<int> first_violated_window() const {
    std::vector<int> window;
    int gap = 0;
    for (int v = 0; v < n; ++v) {
      if (hit[v]) {
        if (++gap >= r) {
          window.clear();
          gap = 0;
        }
        continue;
      }
      gap = 0;
      window.push_back(v);
      if (static_cast<int>(window.size()) == threshold) return window;
    }
    return {};
  }

  // Vertex-disjoint violated windows; each one needs its own new
  // hitting vertex, so their count is a valid lower bound increment.
  int disjoint_violations() const {
    int count = 0, gap = 0, run = 0;
    for (int v = 0; v < n; ++v) {
      if (hit[v]) {
        if (++gap >= r) run = 0;
        continue;
      }
      gap = 0;
      if (++run == threshold) {
        ++count;
        run = 0;
      }
    }
    return count;
  }

  void search() {
    tick();
    if (chosen + disjoint_violations() >= best) return;
    auto window = first_violated_window();
    if (window.empty()) {
      best = chosen;
      return;
    }
    // The window is itself a violated coalition, so every feasible
    // extension hits one of its vertices. Earlier branches forbid their
    // vertex in later ones, making the subtrees disjoint.
    std::vector<int> branched;
    for (int v : window) {
      if (forbidden[v]) continue;
      hit[v] = 1;
      ++chosen;
      search();
      --chosen;
      hit[v] = 0;
      forbidden[v] = 1;
      branched.push_back(v);
    }
    for (int v : branched) forbidden[v] = 0;
  }
};

}  // namespace

int pathpower_cover_number(const ImplicitPathPowerGame& spec,
                           long long node_budget) {
  require_valid_pathpower(spec);
  if (spec.n > 200)
    throw BudgetError("path power cover search limited to n <= 200");
  PathPowerSearch search{spec.n,     spec.r,
                         spec.threshold(), node_budget,
                         std::vector<char>(spec.n, 0),
                         std::vector<char>(spec.n, 0),
                         0,          spec.n};
  // Greedy incumbent: after threshold-1 survivors, remove the next r
  // consecutive vertices to close the block.
  {
    int run = 0;
    int v = 0;
    while (v < spec.n) {
      if (run == search.threshold - 1) {
        for (int j = 0; j < spec.r && v < spec.n; ++j, ++v)
          search.hit[v] = 1;
        run = 0;
      } else {
        ++run;
        ++v;
      }
    }
    if (!search.first_violated_window().empty())
      throw std::logic_error("greedy path power cover is infeasible");
    search.best = static_cast<int>(
        std::count(search.hit.begin(), search.hit.end(), 1));
    std::fill(search.hit.begin(), search.hit.end(), 0);
  }
  search.search();
  return search.best;
}

Rational pathpower_frac_upper(const ImplicitPathPowerGame& spec) {
  require_valid_pathpower(spec);
  // Uniform allocation k/n: a coalition with >= ceil(n/k) members
  // receives at least ceil(n/k) * k / n >= 1.
  Rational per_agent = Rational(spec.k) / spec.n;
  if (per_agent * spec.threshold() < 1)
    throw std::logic_error("uniform path power allocation is infeasible");
  return Rational(spec.k);
}

}  // namespace coal
