#ifndef COAL_EXPERIMENTS_HPP
#define COAL_EXPERIMENTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coal/discrete.hpp"
#include "coal/game.hpp"
#include "coal/graph.hpp"

namespace coal {

/// Deterministic random stream. Sampling helpers avoid the standard
/// distribution classes, whose outputs differ across library
/// implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform over [lo, hi] inclusive (modulo draw; the tiny bias is
  /// irrelevant here and keeps results portable).
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// One representative per isomorphism class of connected graphs with
/// min_n <= n <= max_n, deduplicated by the minimum adjacency
/// bitstring over all vertex permutations; deterministic order.
/// Needs max_n <= 7.
std::vector<Graph> connected_graph_corpus(int min_n, int max_n);

/// Edge probability 1/2, resampled until connected.
Graph random_connected_graph(int n, RngStream& rng);

/// Uniform attachment: vertex v joins a uniformly chosen earlier vertex.
Graph random_tree(int n, RngStream& rng);

/// Samples up to max_coalitions distinct connected sets with values
/// uniform in [1, max_value]; max_value = 1 yields a simple game.
CoalitionGame random_game(const Graph& g, int max_coalitions,
                          long long max_value, RngStream& rng);

struct ExperimentRow {
  std::string id;
  std::vector<std::string> cells;
  bool pass = true;
  bool budget_exceeded = false;
};

struct ExperimentResult {
  std::string name;
  std::vector<std::string> columns;
  std::vector<ExperimentRow> rows;

  bool all_pass() const;
  bool any_budget_exceeded() const;
  std::string to_csv() const;
};

/// The twelve named experiments, one per acceptance criterion.
const std::vector<std::string>& experiment_names();

/// Runs one named experiment; throws InputError on an unknown name.
/// Rows that exhaust the node budget are marked and the run continues.
ExperimentResult run_experiment(const std::string& name, std::uint64_t seed,
                                long long node_budget);

}  // namespace coal

#endif  // COAL_EXPERIMENTS_HPP
