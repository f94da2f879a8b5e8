#pragma once

#include <map>
#include <optional>
#include <vector>

#include "coxeter/label.hpp"
#include "coxeter/regions.hpp"

namespace coxeter {

// Pak-Stanley label from the separating-hyperplane count:
//   lambda_j = 1 + #{ normalized hyperplanes x_i - x_j = m of the arrangement
//                     with x_i - x_j > m on the region }.
Label label_of_region(const RegionSig& sig);

// Labels every region by walking from R0 (labeled 1) and incrementing the
// target coordinate of each crossed hyperplane. Throws InternalError if two
// walks disagree and ResourceLimit above the region cap.
std::map<RegionSig, Label> label_map_bfs(const CoxeterSpec& spec,
                                         const EnumerationOptions& options = {});

struct LabeledRegion {
  RegionSig region;
  Label label;
};

// Every region with its label, canonically ordered by region.
std::vector<LabeledRegion> labeled_regions(const CoxeterSpec& spec,
                                           const EnumerationOptions& options = {});

struct LabelCollision {
  Label label;
  std::vector<RegionSig> regions;  // two or more, canonical order
};

// Labels carried by more than one region, ordered by label.
std::vector<LabelCollision> label_collisions(const std::vector<LabeledRegion>& regions);

struct CensusRecord {
  CoxeterSpec spec;
  std::uint64_t regions = 0;
  std::uint64_t distinct_labels = 0;
  std::uint64_t fundamental_regions = 0;
  std::uint64_t relatively_bounded = 0;
  std::uint64_t fuss_catalan = 0;              // F(n, k)
  std::optional<std::uint64_t> formula_regions;  // n!F(n,k) or (kn+1)^(n-1)
  std::vector<LabelCollision> collisions;

  bool bijective() const { return regions == distinct_labels; }
};

CensusRecord census(const CoxeterSpec& spec, const EnumerationOptions& options = {});

}  // namespace coxeter
