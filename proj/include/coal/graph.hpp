#ifndef COAL_GRAPH_HPP
#define COAL_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coal {

/// Canonical sorted set of vertex indices. Equality is structural.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);
  VertexSet(std::initializer_list<int> members);

  /// Builds from a bitmask (vertex i present iff bit i set); needs n <= 64.
  static VertexSet from_mask(std::uint64_t mask);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  bool intersects(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;
  /// Bitmask representation; all members must be < 64.
  std::uint64_t mask() const;
  int max_vertex() const { return members_.empty() ? -1 : members_.back(); }

  bool operator==(const VertexSet& other) const = default;
  /// Lexicographic on the sorted member list.
  auto operator<=>(const VertexSet& other) const = default;

  std::string to_string() const;

 private:
  std::vector<int> members_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction; no self-loops or duplicate edges.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on out-of-range endpoints, self-loops, or
  /// duplicate edges.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  /// Neighborhood of v as a bitmask; requires n <= 64.
  std::uint64_t neighbor_mask(int v) const;

  bool is_connected() const;

  /// Edge-list document: "n m" header then one "u v" line per edge,
  /// '#' comment lines allowed. Inverse of parse_graph.
  std::string to_edge_list() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> neighbor_masks_;  // valid only when n <= 64
};

/// Parses the edge-list format. Errors carry the offending line number.
Graph parse_graph(const std::string& text);

/// True iff the subgraph induced by s is connected. s must be non-empty
/// with valid indices; singletons are connected.
bool is_connected_induced(const Graph& g, const VertexSet& s);

/// All connected induced vertex sets with min_size <= |S| <= max_size,
/// each exactly once, in canonical (lexicographic) order.
std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int min_size,
                                                int max_size);

/// Minimum number of vertices meeting every a-b path, with terminals
/// uncut: equals |a & b| plus the maximum number of paths from a\b to
/// b\a in G - (a & b) that are pairwise disjoint on internal vertices.
/// Computed by unit-capacity vertex-split maximum flow.
int min_vertex_separator(const Graph& g, const VertexSet& a,
                         const VertexSet& b);

enum class GraphFamily { Path, Star, Clique, Grid, PathPower };

GraphFamily family_from_name(const std::string& name);

/// Named generators with fixed deterministic numbering:
///   path(n): vertices 0..n-1 along the path;
///   star(k): center 0, leaves 1..k;
///   clique(n);
///   grid(k): k x k, row-major (vertex = row*k + col);
///   path_power(n, r): path numbering, edges at path distance <= r
///                     (requires r < n).
Graph generate(GraphFamily family, int p1, int p2 = 0);

/// Grid-minor certificate: branch sets of a k x k grid inside a host
/// graph, keyed by (row, col) with 1-based coordinates.
struct MinorModel {
  int grid_side = 0;
  std::map<std::pair<int, int>, VertexSet> branch_sets;
};

/// Itemized violations (empty when the model is valid): missing or
/// empty branch sets, overlaps, disconnected branch sets, unrealized
/// grid edges.
std::vector<std::string> validate_minor_model(const Graph& g,
                                              const MinorModel& m);

}  // namespace coal

#endif  // COAL_GRAPH_HPP
