#include "coal/vc.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "coal/errors.hpp"

namespace coal {

namespace {

struct BudgetCounter {
  long long remaining;
  void tick(long long amount = 1) {
    remaining -= amount;
    if (remaining < 0) throw BudgetError("search node budget exceeded");
  }
};

// For each distinct trace family_mask & x_mask, the first connected set
// attaining it (family in canonical order). Returns true iff every one
// of the 2^|x| traces appears.
bool collect_traces(const std::vector<std::uint64_t>& family,
                    std::uint64_t x_mask, int x_size,
                    std::vector<std::uint64_t>& first_realizer,
                    std::vector<char>& seen) {
  std::size_t want = std::size_t{1} << x_size;
  first_realizer.assign(want, 0);
  seen.assign(want, 0);
  // Compress a trace mask to a dense index over x's bit positions.
  std::size_t found = 0;
  for (std::uint64_t r : family) {
    std::uint64_t trace = r & x_mask;
    std::size_t index = 0;
    std::uint64_t scan = x_mask;
    int pos = 0;
    while (scan != 0) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if ((trace >> v) & 1) index |= std::size_t{1} << pos;
      ++pos;
    }
    if (!seen[index]) {
      seen[index] = 1;
      first_realizer[index] = r;
      if (++found == want) return true;
    }
  }
  return found == want;
}

VertexSet expand_trace(std::uint64_t x_mask, std::size_t index) {
  std::vector<int> members;
  std::uint64_t scan = x_mask;
  int pos = 0;
  while (scan != 0) {
    int v = std::countr_zero(scan);
    scan &= scan - 1;
    if ((index >> pos) & 1) members.push_back(v);
    ++pos;
  }
  return VertexSet(members);
}

ShatterResult shatter_from_family(const std::vector<std::uint64_t>& family,
                                  const VertexSet& x) {
  ShatterResult result;
  std::uint64_t x_mask = x.mask();
  int k = x.size();
  std::vector<std::uint64_t> first_realizer;
  std::vector<char> seen;
  bool all = collect_traces(family, x_mask, k, first_realizer, seen);
  if (!all) {
    for (std::size_t index = 0; index < seen.size(); ++index)
      if (!seen[index]) {
        result.failing_subset = expand_trace(x_mask, index);
        break;
      }
    return result;
  }
  result.shattered = true;
  result.witness.shattered_set = x;
  for (std::size_t index = 0; index < seen.size(); ++index)
    result.witness.realizers[expand_trace(x_mask, index)] =
        VertexSet::from_mask(first_realizer[index]);
  return result;
}

std::vector<std::uint64_t> connected_family_masks(const Graph& g) {
  std::vector<std::uint64_t> family;
  if (g.num_vertices() == 0) return family;
  for (const VertexSet& s :
       enumerate_connected_sets(g, 1, g.num_vertices()))
    family.push_back(s.mask());
  return family;
}

}  // namespace

ShatterResult is_shattered(const Graph& g, const VertexSet& x,
                           long long node_budget) {
  if (x.empty()) throw InputError("shattering candidate must be non-empty");
  if (x.max_vertex() >= g.num_vertices())
    throw InputError("shattering candidate has out-of-range vertices");
  if (x.size() > 20)
    throw BudgetError("shattering check limited to 20 vertices");
  BudgetCounter budget{node_budget};
  auto family = connected_family_masks(g);
  budget.tick(static_cast<long long>(family.size()) + (1LL << x.size()));
  return shatter_from_family(family, x);
}

std::pair<int, ShatterWitness> vc_dimension_exact(const Graph& g, int max_n,
                                                  long long node_budget) {
  int n = g.num_vertices();
  if (n > max_n)
    throw BudgetError("vc dimension: n=" + std::to_string(n) +
                      " exceeds budget max_n=" + std::to_string(max_n));
  if (n == 0) return {0, ShatterWitness{}};
  if (n > 25) throw BudgetError("vc dimension search limited to n <= 25");
  BudgetCounter budget{node_budget};
  auto family = connected_family_masks(g);

  // Which vertices admit a private realizer (trace exactly {v}) against
  // a candidate can only be checked per candidate; the cheap global
  // filter is that v must lie in some connected set at all, which is
  // always true. Candidates are scanned largest-first for early exit.
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> first_realizer;
  std::vector<char> seen;
  for (int size = n; size >= 1; --size) {
    for (std::uint64_t x_mask = 0;; ) {
      // Next subset of the given size in increasing mask order.
      if (x_mask == 0) {
        x_mask = (std::uint64_t{1} << size) - 1;
      } else {
        std::uint64_t low = x_mask & (~x_mask + 1);
        std::uint64_t ripple = x_mask + low;
        x_mask = ripple | (((x_mask ^ ripple) >> 2) / low);
      }
      if (x_mask > full) break;
      budget.tick(static_cast<long long>(family.size()));
      // Private-realizer screen: every vertex of the candidate needs a
      // connected set whose trace is exactly that singleton.
      bool screened = true;
      std::uint64_t needed = x_mask;
      for (std::uint64_t r : family) {
        std::uint64_t trace = r & x_mask;
        if (std::has_single_bit(trace)) needed &= ~trace;
        if (needed == 0) break;
      }
      if (needed != 0) screened = false;
      if (!screened) continue;
      if (!collect_traces(family, x_mask, size, first_realizer, seen))
        continue;
      return {size,
              shatter_from_family(family, VertexSet::from_mask(x_mask))
                  .witness};
    }
  }
  // No non-empty set is shattered; the empty set always is (any
  // connected set realizes its only subset).
  ShatterWitness witness;
  witness.realizers[VertexSet{}] = VertexSet::from_mask(family.front());
  return {0, witness};
}

}  // namespace coal
