#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "coxeter/arrangement.hpp"
#include "coxeter/permtools.hpp"

namespace coxeter {

namespace detail {
class RegionFactory;
}

using Rational = boost::rational<std::int64_t>;

// A region of a (k,l)-Coxeter arrangement, encoded by one interval index per
// pair i < j: x_i - x_j lies in (t, t+1). The index ranges over [-l-1, k];
// t = -l-1 stands for (-inf, -l) and t = k for (k, +inf).
//
// Every RegionSig handed out by the library is feasible (nonempty).
class RegionSig {
 public:
  // t is given in canonical pair order (see CoxeterSpec::pair_index). Throws
  // InvalidArgument on a wrong length, an out-of-range index, or an empty
  // region.
  RegionSig(const CoxeterSpec& spec, std::vector<int> t);

  // R0: every difference x_i - x_j (i < j) in (0, 1).
  static RegionSig base(const CoxeterSpec& spec);

  const CoxeterSpec& spec() const { return spec_; }
  const std::vector<int>& intervals() const { return t_; }

  // Interval index of x_i - x_j for any i != j; for i > j this is -t(j,i)-1.
  int interval(int i, int j) const;

  // Number of pairs whose interval index is one of the two sentinels.
  int unbounded_pair_count() const;

  friend auto operator<=>(const RegionSig&, const RegionSig&) = default;

 private:
  friend class detail::RegionFactory;
  struct Trusted {};
  RegionSig(Trusted, const CoxeterSpec& spec, std::vector<int> t)
      : spec_(spec), t_(std::move(t)) {}

  CoxeterSpec spec_;
  std::vector<int> t_;
};

struct RationalPoint {
  std::vector<Rational> coordinates;
};

// Decides whether the open polyhedron t(i,j) < x_i - x_j < t(i,j)+1 is
// nonempty. Exact: strict bounds x_a - x_b < c become edges b -> a of weight
// (n+1)c - 1 and the system is satisfiable iff that graph has no negative
// cycle (Bellman-Ford). Throws InvalidArgument on a malformed tuple.
bool is_feasible(const CoxeterSpec& spec, std::span<const int> t);

// Exact point strictly inside the region, normalized to x_n = 0.
RationalPoint representative_point(const RegionSig& sig);

// t(i,j) = clamp(floor(x_i - x_j), -l-1, k). Throws OnBoundary when some
// difference equals a hyperplane offset, InvalidArgument on a size mismatch.
RegionSig region_of_point(const CoxeterSpec& spec, const RationalPoint& point);

// Bounded modulo the line x_1 = ... = x_n: the digraph of finite upper
// bounds is strongly connected.
bool is_relatively_bounded(const RegionSig& sig);

// The pi with x_{pi_1} > ... > x_{pi_n} on the region.
Permutation chamber_of(const RegionSig& sig);

// True when every t(i,j) >= 0, i.e. the region lies in the chamber of the
// identity.
bool in_fundamental_chamber(const RegionSig& sig);

// Region pi(R) where pi acts by (pi P)_{pi(i)} = x_i. Only defined for
// k == l; throws UnsupportedAction otherwise.
RegionSig apply_permutation(const RegionSig& sig, const Permutation& pi);

// Regions reachable by a single +-1 change of one interval index.
std::vector<RegionSig> neighbors(const RegionSig& sig);

enum class Execution { serial, parallel };

struct EnumerationOptions {
  std::uint64_t region_cap = 1'000'000;
  std::uint64_t tuple_cap = 10'000'000;
  Execution execution = Execution::parallel;
};

// All regions, canonically sorted, found by breadth-first facet crossing from
// R0. Throws ResourceLimit when the region count exceeds options.region_cap.
std::vector<RegionSig> enumerate_regions(const CoxeterSpec& spec,
                                         const EnumerationOptions& options = {});

// Same set by trying all (k+l+2)^C(n,2) interval tuples. Throws ResourceLimit
// when the tuple count exceeds options.tuple_cap.
std::vector<RegionSig> enumerate_regions_exhaustive(const CoxeterSpec& spec,
                                                    const EnumerationOptions& options = {});

// (k+l+2)^C(n,2), saturating at UINT64_MAX.
std::uint64_t tuple_count(const CoxeterSpec& spec);

}  // namespace coxeter
