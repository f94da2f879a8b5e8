#include "coxeter/paklabel.hpp"

#include <algorithm>

#include "coxeter/arrangement.hpp"
#include "coxeter/error.hpp"
#include "coxeter/kernels.hpp"
#include "region_factory.hpp"

namespace coxeter {

Label label_of_region(const RegionSig& sig) {
  std::vector<int> label(static_cast<std::size_t>(sig.spec().n()), 1);
  for (const auto& h : hyperplanes(sig.spec())) {
    // The region is strictly on the far side of x_i - x_j = m from R0.
    if (sig.interval(h.i, h.j) >= h.m) {
      ++label[static_cast<std::size_t>(h.increment_target() - 1)];
    }
  }
  return Label(std::move(label));
}

std::vector<LabeledRegion> labeled_regions(const CoxeterSpec& spec,
                                           const EnumerationOptions& options) {
  if (const auto expected = formula_region_count(spec); expected && *expected > options.region_cap) {
    throw ResourceLimit("expected " + std::to_string(*expected) + " regions, above the cap of " +
                        std::to_string(options.region_cap));
  }
  const auto window = kernels::full_window(spec);
  auto found = options.execution == Execution::serial
                   ? kernels::bfs_serial(spec, window, options.region_cap)
                   : kernels::bfs_parallel(spec, window, options.region_cap);
  std::vector<LabeledRegion> out;
  out.reserve(found.size());
  for (auto& entry : found) {
    out.push_back({detail::RegionFactory::make(spec, std::move(entry.t)), Label(std::move(entry.label))});
  }
  return out;
}

std::map<RegionSig, Label> label_map_bfs(const CoxeterSpec& spec,
                                         const EnumerationOptions& options) {
  std::map<RegionSig, Label> out;
  for (auto& entry : labeled_regions(spec, options)) {
    out.emplace_hint(out.end(), std::move(entry.region), std::move(entry.label));
  }
  return out;
}

std::vector<LabelCollision> label_collisions(const std::vector<LabeledRegion>& regions) {
  std::map<Label, std::vector<RegionSig>> by_label;
  for (const auto& entry : regions) by_label[entry.label].push_back(entry.region);
  std::vector<LabelCollision> out;
  for (auto& [label, sigs] : by_label) {
    if (sigs.size() < 2) continue;
    std::sort(sigs.begin(), sigs.end());
    out.push_back({label, std::move(sigs)});
  }
  return out;
}

CensusRecord census(const CoxeterSpec& spec, const EnumerationOptions& options) {
  const auto regions = labeled_regions(spec, options);
  CensusRecord record{spec, 0, 0, 0, 0, 0, std::nullopt, {}};
  record.regions = regions.size();
  std::vector<Label> labels;
  labels.reserve(regions.size());
  for (const auto& entry : regions) {
    labels.push_back(entry.label);
    if (in_fundamental_chamber(entry.region)) ++record.fundamental_regions;
    if (is_relatively_bounded(entry.region)) ++record.relatively_bounded;
  }
  std::sort(labels.begin(), labels.end());
  record.distinct_labels =
      static_cast<std::uint64_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
  record.fuss_catalan = fuss_catalan(spec.n(), spec.k());
  record.formula_regions = formula_region_count(spec);
  record.collisions = label_collisions(regions);
  return record;
}

}  // namespace coxeter
