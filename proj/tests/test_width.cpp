#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "coal/errors.hpp"
#include "coal/width.hpp"

using coal::Graph;
using coal::Thicket;
using coal::VertexSet;
using coal::VineDecomposition;

namespace {

// Independent treewidth oracle: minimum over all elimination orderings
// of the maximum degree at elimination time, with explicit fill-in.
int oracle_treewidth(const Graph& g) {
  int n = g.num_vertices();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
    std::vector<char> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> nbrs;
      for (int u = 0; u < n; ++u)
        if (!gone[u] && adj[v][u]) nbrs.push_back(u);
      width = std::max<int>(width, static_cast<int>(nbrs.size()));
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
          adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = 1;
      gone[v] = 1;
      if (width >= best) break;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("thicket validation catches both failure modes") {
  Graph path = coal::generate(coal::GraphFamily::Path, 5);
  Thicket good{{VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{0, 1, 2, 3, 4}}};
  CHECK(coal::validate_thicket(path, good).empty());
  CHECK(coal::hitting_size(path, good) == 1);

  Thicket disconnected{{VertexSet{0, 2}}};
  CHECK_FALSE(coal::validate_thicket(path, disconnected).empty());

  // Adjacent but not intersecting members are rejected.
  Thicket disjoint{{VertexSet{0, 1}, VertexSet{2, 3}}};
  CHECK_FALSE(coal::validate_thicket(path, disjoint).empty());
}

TEST_CASE("thicket number on named families") {
  auto tau = [](const Graph& g) {
    auto [value, witness] = coal::thicket_number_exact(g, 9);
    REQUIRE(coal::validate_thicket(g, witness).empty());
    CHECK(coal::hitting_size(g, witness) == value);
    return value;
  };
  CHECK(tau(coal::generate(coal::GraphFamily::Path, 7)) == 1);
  CHECK(tau(coal::generate(coal::GraphFamily::Star, 5)) == 1);
  CHECK(tau(coal::generate(coal::GraphFamily::Clique, 4)) == 2);
  CHECK(tau(coal::generate(coal::GraphFamily::Clique, 5)) == 3);
  CHECK(tau(coal::generate(coal::GraphFamily::Grid, 3)) == 3);
  CHECK(tau(coal::generate(coal::GraphFamily::PathPower, 8, 2)) == 2);
  CHECK(tau(coal::generate(coal::GraphFamily::PathPower, 9, 3)) == 3);
}

TEST_CASE("vinewidth equals thicket number and witnesses validate") {
  std::vector<Graph> graphs = {
      coal::generate(coal::GraphFamily::Path, 6),
      coal::generate(coal::GraphFamily::Star, 4),
      coal::generate(coal::GraphFamily::Clique, 5),
      coal::generate(coal::GraphFamily::Grid, 3),
      coal::generate(coal::GraphFamily::PathPower, 7, 2),
      Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {4, 5}, {5, 3}}),
  };
  for (const Graph& g : graphs) {
    auto [nu, vine] = coal::vinewidth_exact(g, 9);
    auto [tau, thicket] = coal::thicket_number_exact(g, 9);
    CHECK(nu == tau);
    CHECK(coal::validate_vine(g, vine).empty());
    CHECK(vine.width() == nu);
  }
}

TEST_CASE("vine validation rejects broken decompositions") {
  Graph path = coal::generate(coal::GraphFamily::Path, 3);
  VineDecomposition d;
  d.num_nodes = 2;
  d.links = {{0, 1}};
  d.labels = {VertexSet{0}, VertexSet{2}};  // vertex 1 missing, labels far
  CHECK_FALSE(coal::validate_vine(path, d).empty());

  VineDecomposition cyclic;
  cyclic.num_nodes = 3;
  cyclic.links = {{0, 1}, {1, 2}, {2, 0}};
  cyclic.labels = {VertexSet{0}, VertexSet{1}, VertexSet{2}};
  CHECK_FALSE(coal::validate_vine(path, cyclic).empty());

  VineDecomposition ok;
  ok.num_nodes = 3;
  ok.links = {{0, 1}, {1, 2}};
  ok.labels = {VertexSet{0}, VertexSet{1}, VertexSet{2}};
  CHECK(coal::validate_vine(path, ok).empty());
  // The same tree fails the strict tree-decomposition edge condition.
  coal::TreeDecomposition strict;
  strict.num_nodes = ok.num_nodes;
  strict.links = ok.links;
  strict.labels = ok.labels;
  CHECK_FALSE(coal::validate_tree_decomposition(path, strict).empty());
}

TEST_CASE("treewidth matches the elimination-ordering oracle") {
  std::vector<Graph> graphs = {
      coal::generate(coal::GraphFamily::Path, 6),
      coal::generate(coal::GraphFamily::Star, 5),
      coal::generate(coal::GraphFamily::Clique, 6),
      coal::generate(coal::GraphFamily::Grid, 2),
      coal::generate(coal::GraphFamily::PathPower, 7, 2),
      Graph(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3},
                {5, 6}}),
  };
  for (const Graph& g : graphs)
    CHECK(coal::treewidth_exact(g) == oracle_treewidth(g));
  CHECK(coal::treewidth_exact(coal::generate(coal::GraphFamily::Grid, 3)) ==
        3);
}

TEST_CASE("canned decompositions validate at their stated width") {
  for (int k : {2, 3, 4}) {
    auto vine = coal::grid_column_vine(k);
    CHECK(coal::validate_vine(coal::generate(coal::GraphFamily::Grid, k), vine)
              .empty());
    CHECK(vine.width() == k);
  }
  for (int n : {4, 5, 6, 9}) {
    auto vine = coal::clique_half_vine(n);
    CHECK(coal::validate_vine(coal::generate(coal::GraphFamily::Clique, n),
                              vine)
              .empty());
    CHECK(vine.width() == (n + 1) / 2);
  }
  for (auto [n, r] : std::vector<std::pair<int, int>>{{6, 1}, {8, 2}, {9, 3}}) {
    auto vine = coal::path_power_block_vine(n, r);
    CHECK(coal::validate_vine(
              coal::generate(coal::GraphFamily::PathPower, n, r), vine)
              .empty());
    CHECK(vine.width() == r);
  }
  Graph star = coal::generate(coal::GraphFamily::Star, 4);
  auto vine = coal::trivial_vine(star);
  CHECK(coal::validate_vine(star, vine).empty());
  CHECK(vine.width() == 1);
}

TEST_CASE("vine to tree conversion and clique tightness") {
  for (int n : {4, 6}) {
    Graph g = coal::generate(coal::GraphFamily::Clique, n);
    auto [nu, vine] = coal::vinewidth_exact(g, n);
    auto tree = coal::vine_to_tree(vine);
    CHECK(coal::validate_tree_decomposition(g, tree).empty());
    CHECK(tree.width() <= 2 * nu - 1);
    CHECK(tree.width() == n - 1);  // clique treewidth, conversion is tight
  }
  Graph grid = coal::generate(coal::GraphFamily::Grid, 3);
  auto tree = coal::vine_to_tree(coal::grid_column_vine(3));
  CHECK(coal::validate_tree_decomposition(grid, tree).empty());
  CHECK(tree.width() <= 2 * 3 - 1);
}

TEST_CASE("internal node labels separate their subtrees") {
  Graph grid = coal::generate(coal::GraphFamily::Grid, 3);
  auto vine = coal::grid_column_vine(3);
  CHECK(coal::node_separator_check(grid, vine, 1));
  CHECK_THROWS_AS(coal::node_separator_check(grid, vine, 0),
                  coal::InputError);

  // Broken labeled tree: the middle label fails to separate an edge.
  Graph tri = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
  VineDecomposition bad;
  bad.num_nodes = 3;
  bad.links = {{0, 1}, {1, 2}};
  bad.labels = {VertexSet{0}, VertexSet{1}, VertexSet{2}};
  CHECK_FALSE(coal::node_separator_check(tri, bad, 1));
}

TEST_CASE("width searches respect budget and size caps") {
  Graph grid = coal::generate(coal::GraphFamily::Grid, 3);
  CHECK_THROWS_AS(coal::thicket_number_exact(grid, 4), coal::BudgetError);
  CHECK_THROWS_AS(coal::vinewidth_exact(grid, 9, 10), coal::BudgetError);
  CHECK_THROWS_AS(coal::thicket_number_exact(grid, 9, 10), coal::BudgetError);
}
