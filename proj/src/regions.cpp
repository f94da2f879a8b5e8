#include "coxeter/regions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coxeter/error.hpp"
#include "coxeter/kernels.hpp"
#include "region_factory.hpp"

namespace coxeter {

namespace {

void validate_tuple(const CoxeterSpec& spec, std::span<const int> t) {
  if (static_cast<int>(t.size()) != spec.pair_count()) {
    throw InvalidArgument("interval tuple has " + std::to_string(t.size()) + " entries, expected " +
                          std::to_string(spec.pair_count()));
  }
  for (int v : t) {
    if (v < spec.min_interval() || v > spec.max_interval()) {
      throw InvalidArgument("interval index " + std::to_string(v) + " outside [" +
                            std::to_string(spec.min_interval()) + ", " +
                            std::to_string(spec.max_interval()) + "]");
    }
  }
}

std::int64_t floor_of(const Rational& r) {
  const auto num = r.numerator();
  const auto den = r.denominator();  // always positive
  return num >= 0 ? num / den : -((-num + den - 1) / den);
}

}  // namespace

RegionSig::RegionSig(const CoxeterSpec& spec, std::vector<int> t) : spec_(spec), t_(std::move(t)) {
  validate_tuple(spec_, t_);
  if (!kernels::feasible_unchecked(spec_, t_)) {
    throw InvalidArgument("interval tuple describes an empty region");
  }
}

RegionSig RegionSig::base(const CoxeterSpec& spec) {
  return RegionSig(Trusted{}, spec, std::vector<int>(static_cast<std::size_t>(spec.pair_count()), 0));
}

int RegionSig::interval(int i, int j) const {
  if (i < j) return t_[static_cast<std::size_t>(spec_.pair_index(i, j))];
  if (i > j) return -t_[static_cast<std::size_t>(spec_.pair_index(j, i))] - 1;
  throw InvalidArgument("interval(i, j) needs i != j");
}

int RegionSig::unbounded_pair_count() const {
  return static_cast<int>(std::count_if(t_.begin(), t_.end(), [this](int v) {
    return v == spec_.min_interval() || v == spec_.max_interval();
  }));
}

bool is_feasible(const CoxeterSpec& spec, std::span<const int> t) {
  validate_tuple(spec, t);
  return kernels::feasible_unchecked(spec, t);
}

RationalPoint representative_point(const RegionSig& sig) {
  const auto& spec = sig.spec();
  std::vector<std::int64_t> potentials;
  if (!kernels::feasible_potentials(spec, sig.intervals(), potentials)) {
    throw InternalError("representative_point called on an empty region");
  }
  const std::int64_t scale = spec.n() + 1;
  const auto anchor = potentials.back();
  RationalPoint out;
  for (auto v : potentials) out.coordinates.emplace_back(v - anchor, scale);
  return out;
}

RegionSig region_of_point(const CoxeterSpec& spec, const RationalPoint& point) {
  if (static_cast<int>(point.coordinates.size()) != spec.n()) {
    throw InvalidArgument("point has " + std::to_string(point.coordinates.size()) +
                          " coordinates, expected " + std::to_string(spec.n()));
  }
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(spec.pair_count()));
  for (int i = 1; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) {
      const Rational diff = point.coordinates[static_cast<std::size_t>(i - 1)] -
                            point.coordinates[static_cast<std::size_t>(j - 1)];
      if (diff.denominator() == 1 && diff.numerator() >= -spec.l() &&
          diff.numerator() <= spec.k()) {
        throw OnBoundary("point lies on the hyperplane x_" + std::to_string(i) + " - x_" +
                         std::to_string(j) + " = " + std::to_string(diff.numerator()));
      }
      const auto f = std::clamp<std::int64_t>(floor_of(diff), spec.min_interval(),
                                              spec.max_interval());
      t.push_back(static_cast<int>(f));
    }
  }
  return detail::RegionFactory::make(spec, std::move(t));
}

bool is_relatively_bounded(const RegionSig& sig) {
  const auto& spec = sig.spec();
  const int n = spec.n();
  // reach[a][b]: a finite upper bound on x_b - x_a is implied.
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int v = 0; v < n; ++v) reach[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int t = sig.interval(i, j);
      const auto a = static_cast<std::size_t>(i - 1);
      const auto b = static_cast<std::size_t>(j - 1);
      if (t > spec.min_interval()) reach[a][b] = true;  // x_j - x_i < -t
      if (t < spec.max_interval()) reach[b][a] = true;  // x_i - x_j < t + 1
    }
  }
  for (std::size_t via = 0; via < reach.size(); ++via) {
    for (std::size_t a = 0; a < reach.size(); ++a) {
      if (!reach[a][via]) continue;
      for (std::size_t b = 0; b < reach.size(); ++b) {
        if (reach[via][b]) reach[a][b] = true;
      }
    }
  }
  for (const auto& row : reach) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

Permutation chamber_of(const RegionSig& sig) {
  std::vector<int> order(static_cast<std::size_t>(sig.spec().n()));
  std::iota(order.begin(), order.end(), 1);
  // For i < j, x_i > x_j exactly when t(i,j) >= 0.
  std::sort(order.begin(), order.end(), [&sig](int a, int b) { return a != b && sig.interval(a, b) >= 0; });
  return Permutation(std::move(order));
}

bool in_fundamental_chamber(const RegionSig& sig) {
  const auto& t = sig.intervals();
  return std::all_of(t.begin(), t.end(), [](int v) { return v >= 0; });
}

RegionSig apply_permutation(const RegionSig& sig, const Permutation& pi) {
  const auto& spec = sig.spec();
  if (!spec.is_catalan()) {
    throw UnsupportedAction("the symmetric group acts on regions only when k == l");
  }
  if (pi.size() != spec.n()) throw InvalidArgument("permutation size differs from n");
  std::vector<int> t(sig.intervals().size());
  for (int i = 1; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) {
      // y_{pi(i)} - y_{pi(j)} = x_i - x_j.
      const int value = sig.interval(i, j);
      const int a = pi.at(i);
      const int b = pi.at(j);
      if (a < b) {
        t[static_cast<std::size_t>(spec.pair_index(a, b))] = value;
      } else {
        t[static_cast<std::size_t>(spec.pair_index(b, a))] = -value - 1;
      }
    }
  }
  return detail::RegionFactory::make(spec, std::move(t));
}

std::vector<RegionSig> neighbors(const RegionSig& sig) {
  const auto& spec = sig.spec();
  std::vector<RegionSig> out;
  for (std::size_t p = 0; p < sig.intervals().size(); ++p) {
    for (int step : {-1, 1}) {
      auto t = sig.intervals();
      t[p] += step;
      if (t[p] < spec.min_interval() || t[p] > spec.max_interval()) continue;
      if (kernels::feasible_unchecked(spec, t)) {
        out.push_back(detail::RegionFactory::make(spec, std::move(t)));
      }
    }
  }
  return out;
}

std::uint64_t tuple_count(const CoxeterSpec& spec) {
  std::uint64_t result = 1;
  const auto base = static_cast<std::uint64_t>(spec.k() + spec.l() + 2);
  for (int e = 0; e < spec.pair_count(); ++e) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

std::vector<RegionSig> enumerate_regions(const CoxeterSpec& spec,
                                         const EnumerationOptions& options) {
  if (const auto expected = formula_region_count(spec); expected && *expected > options.region_cap) {
    throw ResourceLimit("expected " + std::to_string(*expected) + " regions, above the cap of " +
                        std::to_string(options.region_cap));
  }
  const auto window = kernels::full_window(spec);
  auto found = options.execution == Execution::serial
                   ? kernels::bfs_serial(spec, window, options.region_cap)
                   : kernels::bfs_parallel(spec, window, options.region_cap);
  std::vector<RegionSig> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(detail::RegionFactory::make(spec, std::move(entry.t)));
  return out;
}

std::vector<RegionSig> enumerate_regions_exhaustive(const CoxeterSpec& spec,
                                                    const EnumerationOptions& options) {
  const auto total = tuple_count(spec);
  if (total > options.tuple_cap) {
    throw ResourceLimit("exhaustive enumeration needs " + std::to_string(total) +
                        " tuples, above the cap of " + std::to_string(options.tuple_cap));
  }
  auto found = options.execution == Execution::serial ? kernels::exhaustive_serial(spec)
                                                      : kernels::exhaustive_parallel(spec);
  std::vector<RegionSig> out;
  out.reserve(found.size());
  for (auto& t : found) out.push_back(detail::RegionFactory::make(spec, std::move(t)));
  return out;
}

}  // namespace coxeter
