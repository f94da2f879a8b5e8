#pragma once

#include "coxeter/regions.hpp"

namespace coxeter::detail {

// Builds RegionSigs from tuples already known to be feasible.
class RegionFactory {
 public:
  static RegionSig make(const CoxeterSpec& spec, std::vector<int> t) {
    return RegionSig(RegionSig::Trusted{}, spec, std::move(t));
  }
};

}  // namespace coxeter::detail
