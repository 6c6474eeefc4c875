#include "coal/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <limits>
#include <sstream>

#include "coal/errors.hpp"

namespace coal {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::vector<int>(members)) {}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return VertexSet(std::move(out));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto it = members_.begin();
  auto jt = other.members_.begin();
  while (it != members_.end() && jt != other.members_.end()) {
    if (*it == *jt) return true;
    if (*it < *jt)
      ++it;
    else
      ++jt;
  }
  return false;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<int> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  std::vector<int> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return VertexSet(std::move(out));
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (int v : members_) {
    assert(v >= 0 && v < 64);
    m |= std::uint64_t{1} << v;
  }
  return m;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       "): vertex index out of range for n=" +
                       std::to_string(n));
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw InputError("duplicate edge (" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + ")");
    edges_.emplace_back(key.first, key.second);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  if (n <= 64) {
    neighbor_masks_.assign(n, 0);
    for (auto [u, v] : edges_) {
      neighbor_masks_[u] |= std::uint64_t{1} << v;
      neighbor_masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

const std::vector<int>& Graph::neighbors(int v) const {
  return adjacency_.at(v);
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::neighbor_mask(int v) const {
  assert(n_ <= 64);
  return neighbor_masks_.at(v);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
  }
  return count == n_;
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << " " << edges_.size() << "\n";
  for (auto [u, v] : edges_) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  auto fail = [&](const std::string& msg) {
    throw InputError("line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok)) {
          n = -1;  // blank line before the header
          continue;
        }
        fail("malformed header, expected \"n m\"");
      }
      if (n < 0 || m < 0) fail("negative count in header");
      std::string extra;
      if (fields >> extra) fail("trailing tokens after header");
      continue;
    }
    int u, v;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v)) fail("malformed edge line, expected \"u v\"");
    std::string extra;
    if (fields >> extra) fail("trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail("vertex index out of range for n=" + std::to_string(n));
    if (u == v) fail("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InputError("missing \"n m\" header");
  if (static_cast<int>(edges.size()) != m)
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  try {
    return Graph(n, edges);
  } catch (const InputError& e) {
    throw InputError(std::string("edge list: ") + e.what());
  }
}

bool is_connected_induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("empty coalition is not viable input");
  for (int v : s.members())
    if (v < 0 || v >= g.num_vertices())
      throw InputError("vertex " + std::to_string(v) + " out of range");
  std::set<int> inside(s.members().begin(), s.members().end());
  std::deque<int> queue{s.members().front()};
  std::set<int> seen{s.members().front()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (inside.count(w) && !seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
  }
  return seen.size() == inside.size();
}

namespace {

// Canonical-extension enumeration: the set grows from its minimum
// vertex; at each level the new candidates are the so-far-unseen
// neighbors, and choosing candidate i forbids candidates 0..i-1 in the
// whole subtree. Each connected set is produced exactly once.
void extend_connected(const Graph& g, std::uint64_t current,
                      std::uint64_t candidates, std::uint64_t forbidden,
                      int size, int anchor, int min_size, int max_size,
                      std::vector<VertexSet>& out) {
  if (size >= min_size) out.push_back(VertexSet::from_mask(current));
  if (size == max_size) return;
  std::uint64_t rest = candidates;
  while (rest != 0) {
    int v = std::countr_zero(rest);
    std::uint64_t bit = std::uint64_t{1} << v;
    rest &= rest - 1;
    std::uint64_t low_mask = bit - 1;  // vertices below the anchor excluded
    std::uint64_t new_forbidden = forbidden | (candidates & low_mask) | bit;
    std::uint64_t new_candidates =
        (candidates | g.neighbor_mask(v)) & ~new_forbidden & ~current &
        ~((std::uint64_t{1} << (anchor + 1)) - 1);
    extend_connected(g, current | bit, new_candidates, new_forbidden, size + 1,
                     anchor, min_size, max_size, out);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_connected_sets(const Graph& g, int min_size,
                                                int max_size) {
  int n = g.num_vertices();
  if (min_size < 1 || min_size > max_size || max_size > n)
    throw InputError("inconsistent size bounds [" + std::to_string(min_size) +
                     "," + std::to_string(max_size) + "] for n=" +
                     std::to_string(n));
  if (n > 64) throw BudgetError("connected-set enumeration limited to n <= 64");
  std::vector<VertexSet> out;
  for (int v = 0; v < n; ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    std::uint64_t above = ~((bit << 1) - 1);
    extend_connected(g, bit, g.neighbor_mask(v) & above, bit, 1, v, min_size,
                     max_size, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Edmonds-Karp on an explicit arc list; unit-ish integer capacities.
struct FlowNetwork {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNetwork(int nodes) : arcs(nodes) {}

  void add_arc(int from, int to, int cap) {
    arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
    arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
  }

  int max_flow(int source, int sink) {
    int total = 0;
    while (true) {
      std::vector<std::pair<int, int>> parent(arcs.size(), {-1, -1});
      std::deque<int> queue{source};
      parent[source] = {source, -1};
      while (!queue.empty() && parent[sink].first < 0) {
        int v = queue.front();
        queue.pop_front();
        for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
          const Arc& a = arcs[v][i];
          if (a.cap > 0 && parent[a.to].first < 0) {
            parent[a.to] = {v, i};
            queue.push_back(a.to);
          }
        }
      }
      if (parent[sink].first < 0) return total;
      int bottleneck = std::numeric_limits<int>::max();
      for (int v = sink; v != source;) {
        auto [p, i] = parent[v];
        bottleneck = std::min(bottleneck, arcs[p][i].cap);
        v = p;
      }
      for (int v = sink; v != source;) {
        auto [p, i] = parent[v];
        arcs[p][i].cap -= bottleneck;
        arcs[arcs[p][i].to][arcs[p][i].rev].cap += bottleneck;
        v = p;
      }
      total += bottleneck;
    }
  }
};

}  // namespace

int min_vertex_separator(const Graph& g, const VertexSet& a,
                         const VertexSet& b) {
  if (a.empty() || b.empty())
    throw InputError("separator terminals must be non-empty");
  for (int v : a.members())
    if (v < 0 || v >= g.num_vertices())
      throw InputError("terminal vertex out of range");
  for (int v : b.members())
    if (v < 0 || v >= g.num_vertices())
      throw InputError("terminal vertex out of range");

  VertexSet overlap = a.set_intersection(b);
  int n = g.num_vertices();
  std::vector<char> removed(n, 0), in_a(n, 0), in_b(n, 0);
  for (int v : overlap.members()) removed[v] = 1;
  for (int v : a.members()) in_a[v] = 1;
  for (int v : b.members()) in_b[v] = 1;

  // Nodes: source, sink, then v_in = 2 + 2v, v_out = 3 + 2v for
  // non-terminal vertices. Terminals are contracted into source/sink;
  // edge arcs carry capacity 1 so a direct a-b edge counts once.
  int source = 0, sink = 1;
  FlowNetwork net(2 + 2 * n);
  auto v_in = [](int v) { return 2 + 2 * v; };
  auto v_out = [](int v) { return 3 + 2 * v; };
  for (int v = 0; v < n; ++v)
    if (!removed[v] && !in_a[v] && !in_b[v]) net.add_arc(v_in(v), v_out(v), 1);

  auto tail = [&](int v) { return in_a[v] ? source : v_out(v); };
  auto head = [&](int v) { return in_b[v] ? sink : v_in(v); };
  for (auto [u, v] : g.edges()) {
    if (removed[u] || removed[v]) continue;
    bool u_term = in_a[u] || in_b[u];
    bool v_term = in_a[v] || in_b[v];
    if (u_term && v_term) {
      // Only a->b direct edges carry flow.
      if (in_a[u] && in_b[v]) net.add_arc(source, sink, 1);
      if (in_a[v] && in_b[u]) net.add_arc(source, sink, 1);
      continue;
    }
    if (u_term) {
      if (in_a[u]) net.add_arc(tail(u), v_in(v), 1);
      if (in_b[u]) net.add_arc(v_out(v), sink, 1);
      continue;
    }
    if (v_term) {
      if (in_a[v]) net.add_arc(tail(v), v_in(u), 1);
      if (in_b[v]) net.add_arc(v_out(u), sink, 1);
      continue;
    }
    net.add_arc(v_out(u), v_in(v), 1);
    net.add_arc(v_out(v), v_in(u), 1);
  }
  return overlap.size() + net.max_flow(source, sink);
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "path") return GraphFamily::Path;
  if (name == "star") return GraphFamily::Star;
  if (name == "clique") return GraphFamily::Clique;
  if (name == "grid") return GraphFamily::Grid;
  if (name == "path_power") return GraphFamily::PathPower;
  throw InputError("unknown graph family: " + name);
}

Graph generate(GraphFamily family, int p1, int p2) {
  if (p1 <= 0) throw InputError("graph family parameter must be positive");
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case GraphFamily::Path: {
      for (int v = 0; v + 1 < p1; ++v) edges.emplace_back(v, v + 1);
      return Graph(p1, edges);
    }
    case GraphFamily::Star: {
      for (int leaf = 1; leaf <= p1; ++leaf) edges.emplace_back(0, leaf);
      return Graph(p1 + 1, edges);
    }
    case GraphFamily::Clique: {
      for (int u = 0; u < p1; ++u)
        for (int v = u + 1; v < p1; ++v) edges.emplace_back(u, v);
      return Graph(p1, edges);
    }
    case GraphFamily::Grid: {
      int k = p1;
      auto id = [k](int row, int col) { return row * k + col; };
      for (int row = 0; row < k; ++row)
        for (int col = 0; col < k; ++col) {
          if (col + 1 < k) edges.emplace_back(id(row, col), id(row, col + 1));
          if (row + 1 < k) edges.emplace_back(id(row, col), id(row + 1, col));
        }
      return Graph(k * k, edges);
    }
    case GraphFamily::PathPower: {
      int n = p1, r = p2;
      if (r <= 0) throw InputError("path_power requires positive r");
      if (r >= n) throw InputError("path_power requires r < n");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v <= std::min(n - 1, u + r); ++v)
          edges.emplace_back(u, v);
      return Graph(n, edges);
    }
  }
  throw InputError("unknown graph family");
}

std::vector<std::string> validate_minor_model(const Graph& g,
                                              const MinorModel& m) {
  std::vector<std::string> violations;
  int k = m.grid_side;
  if (k <= 0) {
    violations.push_back("grid side must be positive");
    return violations;
  }
  auto cell_name = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::map<int, std::pair<int, int>> owner;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      auto it = m.branch_sets.find({i, j});
      if (it == m.branch_sets.end() || it->second.empty()) {
        violations.push_back("branch set " + cell_name(i, j) +
                             " missing or empty");
        continue;
      }
      const VertexSet& bs = it->second;
      bool in_range = true;
      for (int v : bs.members()) {
        if (v < 0 || v >= g.num_vertices()) {
          violations.push_back("branch set " + cell_name(i, j) +
                               " has out-of-range vertex " + std::to_string(v));
          in_range = false;
        }
        auto [prev, inserted] = owner.insert({v, {i, j}});
        if (!inserted)
          violations.push_back(
              "vertex " + std::to_string(v) + " in branch sets " +
              cell_name(prev->second.first, prev->second.second) + " and " +
              cell_name(i, j));
      }
      if (in_range && !is_connected_induced(g, bs))
        violations.push_back("branch set " + cell_name(i, j) +
                             " is disconnected");
    }
  for (auto [key, bs] : m.branch_sets)
    if (key.first < 1 || key.first > k || key.second < 1 || key.second > k)
      violations.push_back("branch set key " +
                           cell_name(key.first, key.second) +
                           " outside the grid");
  if (!violations.empty()) return violations;

  auto linked = [&](const VertexSet& x, const VertexSet& y) {
    for (int u : x.members())
      for (int v : y.members())
        if (g.adjacent(u, v)) return true;
    return false;
  };
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (j + 1 <= k && !linked(m.branch_sets.at({i, j}),
                                m.branch_sets.at({i, j + 1})))
        violations.push_back("no host edge realizes grid edge " +
                             cell_name(i, j) + "-" + cell_name(i, j + 1));
      if (i + 1 <= k && !linked(m.branch_sets.at({i, j}),
                                m.branch_sets.at({i + 1, j})))
        violations.push_back("no host edge realizes grid edge " +
                             cell_name(i, j) + "-" + cell_name(i + 1, j));
    }
  return violations;
}

}  // namespace coal
