#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coal/errors.hpp"
#include "coal/experiments.hpp"
#include "coal/games.hpp"
#include "coal/io.hpp"
#include "coal/lp.hpp"
#include "coal/stability.hpp"
#include "coal/vc.hpp"
#include "coal/width.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    coal::write_file(out_path, content);
}

std::string base_dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".")
                                    : path.substr(0, slash);
}

int cmd_params(const std::string& graph_file, long long budget, int max_n,
               const std::string& out, const std::string& format) {
  coal::Graph g = coal::parse_graph(coal::read_file(graph_file));
  auto [tau, thicket] = coal::thicket_number_exact(g, max_n, budget);
  auto [nu, vine] = coal::vinewidth_exact(g, max_n, budget);
  int omega = coal::treewidth_exact(g, std::max(max_n, 12));
  int vc = coal::vc_dimension_exact(g, std::max(max_n, 12), budget).first;
  if (tau != nu)
    throw std::logic_error("internal consistency failure: tau != nu");
  if (format == "csv") {
    std::string csv = "instance,tau,nu,omega,vc\n" + graph_file + "," +
                      std::to_string(tau) + "," + std::to_string(nu) + "," +
                      std::to_string(omega) + "," + std::to_string(vc) + "\n";
    emit(csv, out);
  } else {
    coal::Json doc;
    doc["tau"] = tau;
    doc["nu"] = nu;
    doc["omega"] = omega;
    doc["vc"] = vc;
    doc["thicket"] = coal::thicket_to_json(g, thicket);
    doc["vine"] = coal::vine_to_json(g, vine);
    emit(doc.dump(2) + "\n", out);
  }
  return kExitPass;
}

int cmd_gaps(const std::string& game_file, long long budget, int assert_tau,
             const std::string& out, const std::string& format) {
  coal::Json doc = coal::Json::parse(coal::read_file(game_file));
  coal::CoalitionGame game =
      coal::game_from_json(doc, base_dir_of(game_file));
  coal::GapReport report = coal::gap_report(game, assert_tau, budget);
  std::string id = game.tag.empty() ? game_file : game.tag;
  if (format == "csv")
    emit(coal::gap_reports_to_csv({id}, {report}), out);
  else
    emit(coal::gap_report_to_json(report).dump(2) + "\n", out);
  return report.failed_bounds.empty() ? kExitPass : kExitAssertionFailure;
}

int cmd_allocate(const std::string& game_file, const std::string& method,
                 const std::string& vine_file, long long budget, int max_n,
                 const std::string& out, const std::string& format) {
  coal::Json doc = coal::Json::parse(coal::read_file(game_file));
  coal::CoalitionGame game =
      coal::game_from_json(doc, base_dir_of(game_file));
  coal::Json result;
  if (method == "sqrt") {
    coal::Allocation a = coal::sqrt_allocation(game);
    result["method"] = "sqrt";
    result["allocation"] = coal::allocation_to_json(a);
  } else {
    coal::VineDecomposition vine;
    if (!vine_file.empty()) {
      coal::LoadedCertificate cert = coal::certificate_from_json(
          coal::Json::parse(coal::read_file(vine_file)),
          base_dir_of(vine_file));
      if (cert.type != "vine")
        throw coal::InputError("allocate needs a vine certificate");
      vine = cert.vine;
    } else {
      vine = coal::vinewidth_exact(game.graph, max_n, budget).second;
    }
    coal::VineAllocationResult r = coal::vine_allocation(game, vine);
    result["method"] = "vine";
    result["width"] = r.padded.width();
    result["allocation"] = coal::allocation_to_json(r.allocation);
    result["witness"] = coal::witness_to_json(r.witness);
  }
  if (format == "csv")
    throw coal::InputError("allocate supports only json output");
  emit(result.dump(2) + "\n", out);
  return kExitPass;
}

int cmd_generate(const std::string& kind, const std::string& name, int p1,
                 int p2, const std::string& out) {
  if (kind == "graph") {
    coal::Graph g = coal::generate(coal::family_from_name(name), p1, p2);
    emit(g.to_edge_list(), out);
    return kExitPass;
  }
  if (kind == "game") {
    coal::CoalitionGame game;
    if (name == "grid-rowcol")
      game = coal::grid_rowcol_game(p1);
    else if (name == "clique-half")
      game = coal::clique_half_game(p1);
    else if (name == "clique-grid")
      game = coal::clique_grid_game(p1);
    else
      throw coal::InputError("unknown game generator: " + name);
    emit(coal::game_to_json(game).dump(2) + "\n", out);
    return kExitPass;
  }
  throw coal::InputError("generate kind must be 'graph' or 'game'");
}

int cmd_reproduce(const std::string& name, std::uint64_t seed,
                  long long budget, const std::string& out,
                  const std::string& format) {
  coal::ExperimentResult result = coal::run_experiment(name, seed, budget);
  if (format == "csv") {
    emit(result.to_csv(), out);
  } else {
    coal::Json doc;
    doc["experiment"] = result.name;
    doc["columns"] = result.columns;
    coal::Json rows = coal::Json::array();
    for (const auto& row : result.rows) {
      coal::Json r;
      r["instance"] = row.id;
      r["cells"] = row.cells;
      r["pass"] = row.pass;
      if (row.budget_exceeded) r["budget_exceeded"] = true;
      rows.push_back(r);
    }
    doc["rows"] = rows;
    doc["all_pass"] = result.all_pass();
    emit(doc.dump(2) + "\n", out);
  }
  if (result.any_budget_exceeded()) return kExitBudgetExceeded;
  return result.all_pass() ? kExitPass : kExitAssertionFailure;
}

int cmd_verify_cert(const std::string& cert_file) {
  coal::LoadedCertificate cert = coal::certificate_from_json(
      coal::Json::parse(coal::read_file(cert_file)), base_dir_of(cert_file));
  std::vector<std::string> violations;
  if (cert.type == "thicket")
    violations = coal::validate_thicket(cert.graph, cert.thicket);
  else if (cert.type == "vine")
    violations = coal::validate_vine(cert.graph, cert.vine);
  else
    violations = coal::validate_tree_decomposition(cert.graph, cert.tree);
  if (violations.empty()) {
    std::cout << "valid " << cert.type << " certificate\n";
    return kExitPass;
  }
  for (const auto& v : violations) std::cout << "violation: " << v << "\n";
  return kExitAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laboratory for cooperative games on interaction graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  long long budget = coal::kDefaultNodeBudget;
  std::uint64_t seed = 1;
  std::string out, format = "json";
  app.add_option("--budget-nodes", budget, "search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string graph_file;
  int max_n = 9;
  auto* params = app.add_subcommand("params", "graph width parameters");
  params->add_option("graph", graph_file, "edge-list file")->required();
  params->add_option("--max-n", max_n, "size cap for exact searches");

  std::string game_file;
  int assert_tau = -1;
  auto* gaps = app.add_subcommand("gaps", "covering/packing gap report");
  gaps->add_option("game", game_file, "game document")->required();
  gaps->add_option("--assert-tau", assert_tau,
                   "check the tau sandwich bounds");

  std::string alloc_game, alloc_method = "vine", vine_file;
  auto* allocate = app.add_subcommand("allocate", "allocation algorithms");
  allocate->add_option("game", alloc_game, "game document")->required();
  allocate->add_option("--method", alloc_method, "vine or sqrt")
      ->check(CLI::IsMember({"vine", "sqrt"}));
  allocate->add_option("--vine", vine_file, "vine certificate file");
  allocate->add_option("--max-n", max_n, "size cap for the vine search");

  std::string gen_kind, gen_name;
  int gen_p1 = 0, gen_p2 = 0;
  auto* generate = app.add_subcommand("generate", "graph and game generators");
  generate->add_option("kind", gen_kind, "'graph' or 'game'")->required();
  generate->add_option("name", gen_name, "family or game name")->required();
  generate->add_option("p1", gen_p1, "first parameter")->required();
  generate->add_option("p2", gen_p2, "second parameter");

  std::string experiment;
  auto* reproduce = app.add_subcommand("reproduce", "run a named experiment");
  reproduce->add_option("experiment", experiment,
                        "experiment name (see list)")
      ->required();

  std::string cert_file;
  auto* verify = app.add_subcommand("verify-cert", "validate a certificate");
  verify->add_option("certificate", cert_file, "certificate document")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (params->parsed())
      return cmd_params(graph_file, budget, max_n, out, format);
    if (gaps->parsed())
      return cmd_gaps(game_file, budget, assert_tau, out, format);
    if (allocate->parsed())
      return cmd_allocate(alloc_game, alloc_method, vine_file, budget, max_n,
                          out, format);
    if (generate->parsed())
      return cmd_generate(gen_kind, gen_name, gen_p1, gen_p2, out);
    if (reproduce->parsed())
      return cmd_reproduce(experiment, seed, budget, out, format);
    if (verify->parsed()) return cmd_verify_cert(cert_file);
  } catch (const coal::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudgetExceeded;
  } catch (const coal::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const coal::Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertionFailure;
  }
  return kExitInputError;
}
