#pragma once

#include <set>

#include "coxeter/center.hpp"
#include "coxeter/label.hpp"
#include "coxeter/permtools.hpp"
#include "coxeter/regions.hpp"

namespace coxeter {

struct LabelInverse {
  Permutation pi;        // chamber of the region
  Label a;               // label of its fundamental-chamber preimage
  CenterVector center;   // z(b), shared by the whole orbit
  InversionTable table;  // I(pi) = b - p(b) - 1
};

// Recovers (pi, a) from an m-Catalan function b so that b = I(pi) + a ∘ pi^-1.
// Pure arithmetic on centers. Throws NotALabel when b is not m-Catalan.
LabelInverse invert_label(const Label& b, int m);

// The region of the m-Catalan arrangement of dimension |b| whose label is b.
// Fundamental-chamber regions are looked up in a per-(n, m) table built once
// by a chamber-restricted search; the result is pi applied to that region.
RegionSig region_of_label(const Label& b, int m, const EnumerationOptions& options = {});

// All n! labels whose center vector is z.
std::set<Label> fiber_of_center(const CenterVector& z);

}  // namespace coxeter
