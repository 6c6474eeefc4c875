// Acceptance harness: runs the twelve named experiments, one per
// release criterion, and prints a single pass/fail line for each.
// Exit status is zero only when every criterion passes.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "coal/experiments.hpp"

namespace {

struct Criterion {
  const char* experiment;
  const char* summary;
};

const std::vector<Criterion> kCriteria = {
    {"minmax", "thicket number equals vinewidth on the whole corpus"},
    {"strong-duality", "fractional covering equals fractional packing"},
    {"sandwich", "kappa/rho <= tau, with equality on thicket games"},
    {"dual-grid", "grid row-column games reach dual gap k/2"},
    {"primal-clique", "clique half-games and the random primal gap bound"},
    {"primal-gap", "half-tau primal gap construction"},
    {"path-power", "path power thicket numbers and lazy covering"},
    {"allocation", "vine and sqrt allocations within their cost bounds"},
    {"vc-dimension", "VC-dimension bounds and star shattering"},
    {"trees-balanced", "exact balance of all four optima on trees"},
    {"separators", "decomposition labels separate, hitting sets connect"},
    {"conversion", "vine-to-tree conversion width and clique tightness"},
};

}  // namespace

int main() {
  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const Criterion& c = kCriteria[i];
    bool pass = false;
    std::string note;
    try {
      auto result = coal::run_experiment(c.experiment, 1, 10'000'000);
      pass = result.all_pass() && !result.any_budget_exceeded();
      if (!pass) {
        int failed = 0;
        for (const auto& row : result.rows)
          if (!row.pass || row.budget_exceeded) ++failed;
        note = " (" + std::to_string(failed) + " of " +
               std::to_string(result.rows.size()) + " rows failed)";
      }
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    all_pass &= pass;
    std::printf("criterion %2zu %-14s %s: %s%s\n", i + 1, c.experiment,
                c.summary, pass ? "PASS" : "FAIL", note.c_str());
  }
  return all_pass ? 0 : 1;
}
