#pragma once

// Enumeration kernels. Each exists as a serial reference and an OpenMP
// version; both return identical, canonically sorted results.

#include <cstdint>
#include <span>
#include <vector>

#include "coxeter/arrangement.hpp"

namespace coxeter::kernels {

// Interval tuple plus its Pak-Stanley label (raw vectors, 0-based storage).
struct TupleLabel {
  std::vector<int> t;
  std::vector<int> label;

  friend bool operator==(const TupleLabel&, const TupleLabel&) = default;
};

// Range of interval indices the search may visit, the same for every pair.
// Full arrangement: [-l-1, k]; fundamental chamber: [0, k].
struct IntervalWindow {
  int lo;
  int hi;
};

IntervalWindow full_window(const CoxeterSpec& spec);
IntervalWindow fundamental_window(const CoxeterSpec& spec);

// Strict difference-constraint feasibility (no range checks).
bool feasible_unchecked(const CoxeterSpec& spec, std::span<const int> t);

// As above, also returning shortest-path potentials of the scaled constraint
// graph; potentials[v] / (n+1) is a point strictly inside the region.
bool feasible_potentials(const CoxeterSpec& spec, std::span<const int> t,
                         std::vector<std::int64_t>& potentials);

// Index of the label coordinate that changes when pair (i,j), i < j, moves
// from interval `from` to interval `to` = from +- 1, and the sign of the
// change (+1 away from R0, -1 towards it).
struct Crossing {
  int target;
  int delta;
};
Crossing crossing(int i, int j, int from, int to);

// Breadth-first facet-crossing search from R0 within `window`, carrying
// labels. Every traversed edge is checked for label consistency (throws
// InternalError otherwise); throws ResourceLimit once more than `cap`
// regions are found. Output sorted by t.
std::vector<TupleLabel> bfs_serial(const CoxeterSpec& spec, IntervalWindow window,
                                   std::uint64_t cap);
std::vector<TupleLabel> bfs_parallel(const CoxeterSpec& spec, IntervalWindow window,
                                     std::uint64_t cap);

// All feasible tuples of the full window, sorted. No labels.
std::vector<std::vector<int>> exhaustive_serial(const CoxeterSpec& spec);
std::vector<std::vector<int>> exhaustive_parallel(const CoxeterSpec& spec);

// Closed-form labels of a batch of tuples.
std::vector<std::vector<int>> label_batch_serial(const CoxeterSpec& spec,
                                                 const std::vector<std::vector<int>>& tuples);
std::vector<std::vector<int>> label_batch_parallel(const CoxeterSpec& spec,
                                                   const std::vector<std::vector<int>>& tuples);

// Every b in [1..max_entry]^n with z_{(i-1)m}(b) >= i for all i, in
// lexicographic order.
std::vector<std::vector<int>> catalan_box_serial(int n, int m, int max_entry);
std::vector<std::vector<int>> catalan_box_parallel(int n, int m, int max_entry);

}  // namespace coxeter::kernels
