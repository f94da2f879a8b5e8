#include "coxeter/inverse.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "coxeter/error.hpp"
#include "coxeter/kernels.hpp"
#include "coxeter/paklabel.hpp"
#include "region_factory.hpp"

namespace coxeter {

namespace {

using FundamentalTable = std::map<Label, RegionSig>;

// Built once per (n, m) under the lock, read-only afterwards.
std::shared_ptr<const FundamentalTable> fundamental_table(int n, int m,
                                                          const EnumerationOptions& options) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const FundamentalTable>> cache;

  const std::lock_guard lock(mutex);
  if (auto it = cache.find({n, m}); it != cache.end()) return it->second;

  const CoxeterSpec spec(n, m, m);
  const auto window = kernels::fundamental_window(spec);
  auto found = options.execution == Execution::serial
                   ? kernels::bfs_serial(spec, window, options.region_cap)
                   : kernels::bfs_parallel(spec, window, options.region_cap);
  auto table = std::make_shared<FundamentalTable>();
  for (auto& entry : found) {
    table->emplace(Label(std::move(entry.label)), detail::RegionFactory::make(spec, std::move(entry.t)));
  }
  cache.emplace(std::pair{n, m}, table);
  return table;
}

}  // namespace

LabelInverse invert_label(const Label& b, int m) {
  if (!is_m_catalan(b, m)) {
    throw NotALabel(b.str() + " is not an m-Catalan function for m = " + std::to_string(m));
  }
  auto center = center_vector(b, m);
  auto a = increasing_from_center(center);
  const auto entry = min_center_index(b, m);

  std::vector<int> table(entry.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = b.values()[i] - entry[i] - 1;
  if (!InversionTable::in_box(table)) {
    throw InternalError("b - p(b) - 1 left the inversion-table box for " + b.str());
  }
  InversionTable inversions(std::move(table));
  auto pi = from_inversion_table(inversions);
  if (orbit_label(pi, a) != b) {
    throw InternalError("inverse of " + b.str() + " failed to round-trip");
  }
  return {std::move(pi), std::move(a), std::move(center), std::move(inversions)};
}

RegionSig region_of_label(const Label& b, int m, const EnumerationOptions& options) {
  const auto inverse = invert_label(b, m);
  const auto table = fundamental_table(b.size(), m, options);
  const auto it = table->find(inverse.a);
  if (it == table->end()) {
    throw InternalError("no fundamental-chamber region carries label " + inverse.a.str());
  }
  auto region = apply_permutation(it->second, inverse.pi);
  if (label_of_region(region) != b) {
    throw InternalError("region recovered for " + b.str() + " carries a different label");
  }
  return region;
}

std::set<Label> fiber_of_center(const CenterVector& z) {
  const auto a = increasing_from_center(z);
  std::set<Label> out;
  for (const auto& pi : all_permutations(z.n)) out.insert(orbit_label(pi, a));
  return out;
}

}  // namespace coxeter
