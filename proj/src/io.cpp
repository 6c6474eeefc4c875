#include "coal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coal/errors.hpp"
#include "coal/rational.hpp"

namespace coal {

namespace {

void require_keys(const Json& doc, const std::vector<std::string>& allowed,
                  const std::string& what) {
  if (!doc.is_object()) throw InputError(what + " must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw InputError("unknown field '" + key + "' in " + what);
  }
}

Graph graph_from_field(const Json& field, const std::string& base_dir) {
  if (!field.is_string())
    throw InputError("graph field must be a string");
  std::string text = field.get<std::string>();
  if (text.find('\n') != std::string::npos) return parse_graph(text);
  std::string path = text;
  if (!base_dir.empty() && !path.empty() && path.front() != '/')
    path = base_dir + "/" + path;
  return parse_graph(read_file(path));
}

VertexSet vertex_set_from_json(const Json& arr, const std::string& what) {
  if (!arr.is_array()) throw InputError(what + " must be an array");
  std::vector<int> members;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw InputError(what + " must contain integers");
    members.push_back(v.get<int>());
  }
  return VertexSet(members);
}

Json vertex_set_to_json(const VertexSet& s) {
  Json arr = Json::array();
  for (int v : s.members()) arr.push_back(v);
  return arr;
}

Json links_to_json(const LabeledTree& d) {
  Json links = Json::array();
  for (auto [a, b] : d.links) links.push_back(Json::array({a, b}));
  return links;
}

void labeled_tree_from_json(const Json& doc, LabeledTree& out) {
  out.num_nodes = doc.at("num_nodes").get<int>();
  for (const auto& link : doc.at("links")) {
    if (!link.is_array() || link.size() != 2)
      throw InputError("links must be pairs");
    out.links.emplace_back(link[0].get<int>(), link[1].get<int>());
  }
  for (const auto& label : doc.at("labels"))
    out.labels.push_back(vertex_set_from_json(label, "label"));
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

CoalitionGame game_from_json(const Json& doc, const std::string& base_dir) {
  require_keys(doc, {"graph", "coalitions", "tag"}, "game document");
  CoalitionGame game;
  game.graph = graph_from_field(doc.at("graph"), base_dir);
  if (doc.contains("tag")) game.tag = doc.at("tag").get<std::string>();
  if (!doc.contains("coalitions") || !doc.at("coalitions").is_array())
    throw InputError("game document needs a coalitions array");
  for (const auto& entry : doc.at("coalitions")) {
    require_keys(entry, {"members", "value"}, "coalition entry");
    VertexSet members =
        vertex_set_from_json(entry.at("members"), "coalition members");
    long long value = entry.at("value").get<long long>();
    if (game.coalitions.count(members))
      throw InputError("duplicate coalition " + members.to_string());
    game.coalitions[members] = value;
  }
  require_valid_game(game);
  return game;
}

Json game_to_json(const CoalitionGame& game) {
  Json doc;
  doc["graph"] = game.graph.to_edge_list();
  doc["tag"] = game.tag;
  Json coalitions = Json::array();
  for (const auto& [s, v] : game.coalitions) {
    Json entry;
    entry["members"] = vertex_set_to_json(s);
    entry["value"] = v;
    coalitions.push_back(entry);
  }
  doc["coalitions"] = coalitions;
  return doc;
}

Json thicket_to_json(const Graph& g, const Thicket& t) {
  Json doc;
  doc["type"] = "thicket";
  doc["graph"] = g.to_edge_list();
  Json sets = Json::array();
  for (const VertexSet& s : t.sets) sets.push_back(vertex_set_to_json(s));
  doc["sets"] = sets;
  return doc;
}

Json vine_to_json(const Graph& g, const VineDecomposition& d) {
  Json doc;
  doc["type"] = "vine";
  doc["graph"] = g.to_edge_list();
  doc["num_nodes"] = d.num_nodes;
  doc["links"] = links_to_json(d);
  Json labels = Json::array();
  for (const VertexSet& l : d.labels) labels.push_back(vertex_set_to_json(l));
  doc["labels"] = labels;
  return doc;
}

Json tree_to_json(const Graph& g, const TreeDecomposition& d) {
  Json doc;
  doc["type"] = "tree";
  doc["graph"] = g.to_edge_list();
  doc["num_nodes"] = d.num_nodes;
  doc["links"] = links_to_json(d);
  Json labels = Json::array();
  for (const VertexSet& l : d.labels) labels.push_back(vertex_set_to_json(l));
  doc["labels"] = labels;
  return doc;
}

LoadedCertificate certificate_from_json(const Json& doc,
                                        const std::string& base_dir) {
  LoadedCertificate cert;
  if (!doc.is_object() || !doc.contains("type"))
    throw InputError("certificate needs a type field");
  cert.type = doc.at("type").get<std::string>();
  if (cert.type == "thicket") {
    require_keys(doc, {"type", "graph", "sets"}, "thicket certificate");
    cert.graph = graph_from_field(doc.at("graph"), base_dir);
    for (const auto& s : doc.at("sets"))
      cert.thicket.sets.push_back(vertex_set_from_json(s, "thicket set"));
  } else if (cert.type == "vine" || cert.type == "tree") {
    require_keys(doc, {"type", "graph", "num_nodes", "links", "labels"},
                 "decomposition certificate");
    cert.graph = graph_from_field(doc.at("graph"), base_dir);
    if (cert.type == "vine")
      labeled_tree_from_json(doc, cert.vine);
    else
      labeled_tree_from_json(doc, cert.tree);
  } else {
    throw InputError("unknown certificate type: " + cert.type);
  }
  return cert;
}

Json allocation_to_json(const Allocation& a) {
  Json doc;
  Json values = Json::object();
  for (const auto& [i, r] : a.values) values[std::to_string(i)] = to_string(r);
  doc["values"] = values;
  doc["cost"] = to_string(a.cost);
  return doc;
}

Json witness_to_json(const PackingWitness& w) {
  Json doc;
  Json coalitions = Json::array();
  for (const VertexSet& s : w.coalitions)
    coalitions.push_back(vertex_set_to_json(s));
  doc["coalitions"] = coalitions;
  doc["value"] = w.value;
  return doc;
}

Json gap_report_to_json(const GapReport& r) {
  Json doc;
  doc["kappa"] = to_string(r.kappa);
  doc["kappa_f"] = to_string(r.kappa_f);
  doc["rho"] = to_string(r.rho);
  doc["rho_f"] = to_string(r.rho_f);
  doc["ratio_pc"] = to_string(r.ratio_pc);
  doc["gap_primal"] = to_string(r.gap_primal);
  doc["gap_dual"] = to_string(r.gap_dual);
  doc["alpha_star"] = to_string(r.alpha_star);
  if (r.tau >= 0) {
    doc["tau"] = r.tau;
    doc["failed_bounds"] = r.failed_bounds;
  }
  return doc;
}

std::string gap_reports_to_csv(const std::vector<std::string>& ids,
                               const std::vector<GapReport>& reports) {
  std::ostringstream out;
  out << "instance,kappa,kappa_f,rho,rho_f,ratio_pc,gap_primal,gap_dual,"
         "alpha_star,tau,failed_bounds\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const GapReport& r = reports[i];
    out << ids[i] << ',' << to_string(r.kappa) << ',' << to_string(r.kappa_f)
        << ',' << to_string(r.rho) << ',' << to_string(r.rho_f) << ','
        << to_string(r.ratio_pc) << ',' << to_string(r.gap_primal) << ','
        << to_string(r.gap_dual) << ',' << to_string(r.alpha_star) << ',';
    if (r.tau >= 0) out << r.tau;
    out << ',';
    for (std::size_t j = 0; j < r.failed_bounds.size(); ++j)
      out << (j ? ";" : "") << r.failed_bounds[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace coal
