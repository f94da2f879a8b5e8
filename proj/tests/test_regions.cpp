#include "doctest.h"

#include <map>
#include <set>

#include "coxeter/error.hpp"
#include "coxeter/paklabel.hpp"
#include "coxeter/regions.hpp"
#include "oracles.hpp"

using namespace coxeter;

namespace {

RationalPoint point(std::initializer_list<Rational> xs) { return RationalPoint{xs}; }

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// Region of spec(3,2,2) carrying a given label, found by scanning all regions.
RegionSig region_labeled(const CoxeterSpec& spec, const Label& label) {
  for (const auto& [sig, l] : label_map_bfs(spec)) {
    if (l == label) return sig;
  }
  FAIL("no region labeled " << label.str());
  return RegionSig::base(spec);
}

}  // namespace

TEST_CASE("feasibility") {
  const CoxeterSpec catalan(3, 1, 1);
  CHECK(is_feasible(catalan, std::vector<int>{0, 0, 0}));
  CHECK_FALSE(is_feasible(catalan, std::vector<int>{1, 0, 1}));
  // Pair order (1,2), (1,3), (2,3).
  CHECK(is_feasible(CoxeterSpec(3, 2, 2), std::vector<int>{0, 2, 1}));
  CHECK_THROWS_AS(is_feasible(catalan, std::vector<int>{0, 0, 2}), InvalidArgument);
  CHECK_THROWS_AS(is_feasible(catalan, std::vector<int>{0, -3, 0}), InvalidArgument);
  CHECK_THROWS_AS(is_feasible(catalan, std::vector<int>{0, 0}), InvalidArgument);
  CHECK_THROWS_AS(RegionSig(catalan, {1, 0, 1}), InvalidArgument);
}

TEST_CASE("points and regions") {
  const CoxeterSpec spec(3, 2, 2);
  CHECK(region_of_point(spec, point({q(0), q(-2, 5), q(-9, 10)})) == RegionSig::base(spec));
  const auto witness = region_of_point(spec, point({q(5, 2), q(9, 5), q(0)}));
  CHECK(witness.intervals() == std::vector<int>{0, 2, 1});
  CHECK(witness.interval(2, 1) == -1);
  CHECK_THROWS_AS(region_of_point(spec, point({q(1), q(0), q(0, 1) + q(1, 2)})), OnBoundary);
  CHECK_THROWS_AS(region_of_point(spec, point({q(1), q(0)})), InvalidArgument);

  const auto shi = CoxeterSpec(3, 2, 0);
  const auto p = region_of_point(shi, point({q(4, 5), q(23, 10), q(0)}));
  const auto r = region_of_point(shi, point({q(6, 5), q(17, 10), q(0)}));
  CHECK(p != r);
  CHECK(p.interval(1, 2) == r.interval(1, 2));

  const RegionSig far(CoxeterSpec(3, 1, 1), {-2, 0, 1});
  const auto x = representative_point(far).coordinates;
  CHECK(x[1] - x[0] > q(1));
}

TEST_CASE("representative points round-trip on every region") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        const CoxeterSpec spec(n, k, l);
        for (const auto& sig : enumerate_regions(spec)) {
          const auto p = representative_point(sig);
          CHECK(p.coordinates.back() == q(0));
          CHECK(region_of_point(spec, p) == sig);
        }
      }
    }
  }
}

TEST_CASE("region counts") {
  const std::map<std::tuple<int, int, int>, std::size_t> expected = {
      {{3, 2, 2}, 72}, {{3, 1, 1}, 30}, {{3, 2, 0}, 31},   {{3, 1, 0}, 16},
      {{3, 2, 1}, 49}, {{4, 1, 1}, 336}, {{4, 2, 2}, 1320}, {{2, 1, 1}, 4}};
  for (const auto& [key, count] : expected) {
    const auto [n, k, l] = key;
    CHECK(enumerate_regions(CoxeterSpec(n, k, l)).size() == count);
  }
  CHECK(enumerate_regions(CoxeterSpec(1, 3, 2)).size() == 1);
}

TEST_CASE("breadth-first and exhaustive enumeration agree") {
  for (int k = 1; k <= 2; ++k) {
    for (int l = 0; l <= 2; ++l) {
      const CoxeterSpec spec(3, k, l);
      CHECK(enumerate_regions(spec) == enumerate_regions_exhaustive(spec));
    }
  }
  const CoxeterSpec spec(4, 1, 1);
  CHECK(enumerate_regions(spec) == enumerate_regions_exhaustive(spec));
}

TEST_CASE("resource caps") {
  EnumerationOptions tight;
  tight.region_cap = 10;
  CHECK_THROWS_AS(enumerate_regions(CoxeterSpec(3, 2, 2), tight), ResourceLimit);
  // No closed formula for this one, so the search itself has to stop.
  CHECK_THROWS_AS(enumerate_regions(CoxeterSpec(3, 2, 0), tight), ResourceLimit);
  tight.tuple_cap = 100;
  CHECK_THROWS_AS(enumerate_regions_exhaustive(CoxeterSpec(3, 2, 2), tight), ResourceLimit);
  CHECK(tuple_count(CoxeterSpec(3, 2, 2)) == 216);
  CHECK(tuple_count(CoxeterSpec(40, 5, 5)) == UINT64_MAX);
}

TEST_CASE("relative boundedness matches the recession-cone test") {
  const CoxeterSpec spec(3, 2, 2);
  CHECK(is_relatively_bounded(RegionSig::base(spec)));
  CHECK(is_relatively_bounded(region_labeled(spec, Label{2, 5, 1})));
  CHECK_FALSE(is_relatively_bounded(region_labeled(spec, Label{4, 5, 1})));

  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (int l = 0; l <= 2; ++l) {
        for (const auto& sig : enumerate_regions(CoxeterSpec(n, k, l))) {
          CHECK(is_relatively_bounded(sig) == oracle::bounded_by_recession_cone(sig));
          if (sig.unbounded_pair_count() == 0) CHECK(is_relatively_bounded(sig));
        }
      }
    }
  }
}

TEST_CASE("chambers") {
  const CoxeterSpec spec(3, 1, 1);
  CHECK(chamber_of(RegionSig::base(spec)).is_identity());
  CHECK(chamber_of(RegionSig(spec, {-1, 0, 0})) == Permutation{2, 1, 3});
  CHECK(chamber_of(region_labeled(CoxeterSpec(3, 2, 2), Label{3, 6, 1})) == Permutation{3, 1, 2});

  for (const auto& sig : enumerate_regions(CoxeterSpec(4, 2, 1))) {
    const auto pi = chamber_of(sig);
    const auto x = representative_point(sig).coordinates;
    for (int p = 1; p < 4; ++p) {
      CHECK(x[static_cast<std::size_t>(pi.at(p) - 1)] > x[static_cast<std::size_t>(pi.at(p + 1) - 1)]);
    }
    CHECK(in_fundamental_chamber(sig) == pi.is_identity());
  }
}

TEST_CASE("symmetric group action") {
  const CoxeterSpec spec(3, 2, 2);
  CHECK_THROWS_AS(apply_permutation(RegionSig::base(CoxeterSpec(3, 2, 1)), Permutation{2, 1, 3}),
                  UnsupportedAction);
  const auto r125 = region_labeled(spec, Label{1, 2, 5});
  CHECK(apply_permutation(r125, Permutation{3, 1, 2}) == region_labeled(spec, Label{3, 6, 1}));
  const auto r124 = region_labeled(spec, Label{1, 2, 4});
  CHECK(apply_permutation(r124, Permutation{1, 3, 2}) == region_labeled(spec, Label{1, 5, 2}));

  for (int m = 1; m <= 2; ++m) {
    const CoxeterSpec s(4, m, m);
    const auto perms = all_permutations(4);
    for (const auto& sig : enumerate_regions(s)) {
      CHECK(apply_permutation(sig, Permutation::identity(4)) == sig);
      std::set<RegionSig> orbit;
      for (const auto& pi : perms) {
        const auto image = apply_permutation(sig, pi);
        orbit.insert(image);
        // pi moves the chamber of sig to pi ∘ chamber.
        CHECK(chamber_of(image) == compose(pi, chamber_of(sig)));
        for (const auto& sigma : perms) {
          if (sigma.at(1) != 2) continue;  // a slice keeps this quick
          CHECK(apply_permutation(image, sigma) ==
                apply_permutation(sig, compose(sigma, pi)));
        }
      }
      CHECK(orbit.size() == perms.size());
    }
  }
}

TEST_CASE("adjacency is symmetric and differs in one pair by one step") {
  for (const auto& spec : {CoxeterSpec(3, 2, 0), CoxeterSpec(4, 1, 1), CoxeterSpec(3, 1, 2)}) {
    const auto regions = enumerate_regions(spec);
    const std::set<RegionSig> all(regions.begin(), regions.end());
    for (const auto& sig : regions) {
      for (const auto& nb : neighbors(sig)) {
        CHECK(all.count(nb) == 1);
        const auto around = neighbors(nb);
        CHECK(std::find(around.begin(), around.end(), sig) != around.end());
        int changed = 0;
        for (std::size_t p = 0; p < sig.intervals().size(); ++p) {
          const int d = sig.intervals()[p] - nb.intervals()[p];
          if (d != 0) {
            ++changed;
            CHECK((d == 1 || d == -1));
          }
        }
        CHECK(changed == 1);
      }
    }
  }
}
