#ifndef COAL_IO_HPP
#define COAL_IO_HPP

#include <string>

#include <json.hpp>

#include "coal/game.hpp"
#include "coal/graph.hpp"
#include "coal/stability.hpp"
#include "coal/width.hpp"

namespace coal {

using Json = nlohmann::json;

/// Reads a whole file; throws InputError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Game document: {"graph": <inline edge list or file path>,
/// "coalitions": [{"members": [ints], "value": int}], "tag": string}.
/// A graph string containing a newline is treated as an inline edge
/// list, otherwise as a path relative to base_dir. Unknown fields are
/// rejected.
CoalitionGame game_from_json(const Json& doc, const std::string& base_dir);
Json game_to_json(const CoalitionGame& game);

/// Certificates are tagged documents: {"type": "thicket" | "vine" |
/// "tree", "graph": <as above>, ...payload}.
Json thicket_to_json(const Graph& g, const Thicket& t);
Json vine_to_json(const Graph& g, const VineDecomposition& d);
Json tree_to_json(const Graph& g, const TreeDecomposition& d);

struct LoadedCertificate {
  std::string type;
  Graph graph;
  Thicket thicket;         // when type == "thicket"
  VineDecomposition vine;  // when type == "vine"
  TreeDecomposition tree;  // when type == "tree"
};

LoadedCertificate certificate_from_json(const Json& doc,
                                        const std::string& base_dir);

Json allocation_to_json(const Allocation& a);
Json witness_to_json(const PackingWitness& w);
Json gap_report_to_json(const GapReport& r);

/// CSV with the same "p/q" strings as the structured form; header row
/// then one row per report.
std::string gap_reports_to_csv(const std::vector<std::string>& ids,
                               const std::vector<GapReport>& reports);

}  // namespace coal

#endif  // COAL_IO_HPP
