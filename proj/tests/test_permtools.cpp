#include "doctest.h"

#include <algorithm>
#include <set>

#include "coxeter/error.hpp"
#include "coxeter/permtools.hpp"

using namespace coxeter;

namespace {

// I_i counted straight from the definition.
std::vector<int> naive_inversion_table(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q < p; ++q) {
      if (pi.at(q) > pi.at(p)) ++table[static_cast<std::size_t>(pi.at(p) - 1)];
    }
  }
  return table;
}

Permutation word_product(int n, const std::vector<int>& word) {
  auto pi = Permutation::identity(n);
  for (int s : word) pi = compose(pi, Permutation::adjacent_transposition(n, s));
  return pi;
}

std::vector<Label> weakly_increasing_labels(int n, int max_entry) {
  std::vector<Label> out;
  std::vector<int> a(static_cast<std::size_t>(n), 1);
  auto rec = [&](auto&& self, int i, int lo) -> void {
    if (i == n) {
      out.emplace_back(a);
      return;
    }
    for (int v = lo; v <= max_entry; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
  const Permutation pi{2, 3, 1};
  CHECK(pi.inverse() == Permutation{3, 1, 2});
  CHECK(compose(pi, pi.inverse()).is_identity());
  CHECK(pi.inversion_count() == 2);
  CHECK(pi.reversed() == Permutation{1, 3, 2});
  CHECK(Permutation::adjacent_transposition(4, 2) == Permutation{1, 3, 2, 4});
  CHECK(compose(std::vector<int>{1, 2, 5}, pi) == std::vector<int>{2, 5, 1});
  CHECK(compose(Label{1, 2, 5}, pi) == Label{2, 5, 1});
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("inversion tables") {
  CHECK(inversion_table(Permutation::identity(4)) == InversionTable{0, 0, 0, 0});
  CHECK(inversion_table(Permutation{3, 1, 2}) == InversionTable{1, 1, 0});
  CHECK(inversion_table(Permutation{2, 3, 1}) == InversionTable{2, 0, 0});
  CHECK(from_inversion_table(InversionTable{2, 0, 0}) == Permutation{2, 3, 1});
  CHECK(from_inversion_table(InversionTable{2, 5, 2, 2, 0, 1, 1, 0}) ==
        Permutation{5, 8, 1, 3, 4, 6, 2, 7});
  CHECK(from_inversion_table(InversionTable{0, 0, 0}).is_identity());
  CHECK_THROWS_AS(InversionTable({0, 2, 0}), InvalidArgument);
  CHECK_THROWS_AS(InversionTable({0, 0, 1}), InvalidArgument);

  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& pi : all_permutations(n)) {
      const auto table = inversion_table(pi);
      CHECK(table.values() == naive_inversion_table(pi));
      CHECK(InversionTable::in_box(table.values()));
      CHECK(from_inversion_table(table) == pi);
      seen.insert(table.values());
    }
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
    CHECK(seen.size() == factorial);
  }
}

TEST_CASE("ld and lu") {
  const auto id = ld_lu(std::vector<int>{1, 2, 3, 4});
  CHECK(id.ld == std::vector<int>{0, 1, 2, 3});
  CHECK(id.lu == std::vector<int>{0, 0, 0, 0});
  const auto p = ld_lu(std::vector<int>{2, 3, 1});
  CHECK(p.ld == std::vector<int>{0, 1, 0});
  CHECK(p.lu == std::vector<int>{0, 0, 2});
  const auto flat = ld_lu(std::vector<int>{4, 4, 4});
  CHECK(flat.ld == std::vector<int>{0, 0, 0});
  CHECK(flat.lu == std::vector<int>{0, 0, 0});

  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto lu = ld_lu(pi.one_line()).lu;
      CHECK(compose(lu, pi.inverse()) == inversion_table(pi).values());
    }
  }
}

TEST_CASE("chamber extremes") {
  const auto id = chamber_extremes(Permutation::identity(3), CoxeterSpec(3, 2, 2));
  CHECK(id.mu == Label{1, 1, 1});
  CHECK(id.maximum == Label{1, 3, 5});
  CHECK(chamber_extremes(Permutation{2, 3, 1}, CoxeterSpec(3, 2, 2)).maximum == Label{7, 1, 3});
  CHECK(chamber_extremes(Permutation::identity(3), CoxeterSpec(3, 1, 0)).maximum ==
        Label{1, 2, 3});
  for (const auto& pi : all_permutations(4)) {
    std::vector<int> expected = inversion_table(pi).values();
    for (auto& v : expected) ++v;
    CHECK(chamber_extremes(pi, CoxeterSpec(4, 1, 1)).mu == Label(expected));
  }
}

TEST_CASE("orbit labels") {
  CHECK(orbit_label(Permutation{3, 1, 2}, Label{1, 2, 5}) == Label{3, 6, 1});
  CHECK(orbit_label(Permutation{1, 3, 2}, Label{1, 2, 4}) == Label{1, 5, 2});
  CHECK(orbit_label(Permutation::identity(3), Label{1, 3, 4}) == Label{1, 3, 4});
  CHECK_THROWS_AS(orbit_label(Permutation{2, 1}, Label{2, 1}), InvalidArgument);
  CHECK_THROWS_AS(orbit_label(Permutation{2, 1, 3}, Label{1, 1}), InvalidArgument);
}

TEST_CASE("adjacent steps") {
  CHECK(adjacent_step(Label{1, 2, 4}, 2) == Label{1, 5, 2});
  CHECK(adjacent_step(Label{1, 5, 2}, 2) == Label{1, 2, 4});
  CHECK(adjacent_step(Label{1, 1, 1}, 1) == Label{2, 1, 1});
  CHECK_THROWS_AS(adjacent_step(Label{1, 1, 1}, 3), InvalidArgument);

  for (const auto& b : weakly_increasing_labels(4, 6)) {
    for (int i = 1; i <= 3; ++i) CHECK(adjacent_step(adjacent_step(b, i), i) == b);
  }
}

TEST_CASE("reduced words") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto word = reduced_word(pi);
      CHECK(static_cast<int>(word.size()) == pi.inversion_count());
      CHECK(word_product(n, word) == pi);
      const auto words = all_reduced_words(pi);
      CHECK(std::find(words.begin(), words.end(), word) != words.end());
      const std::set<std::vector<int>> distinct(words.begin(), words.end());
      CHECK(distinct.size() == words.size());
      for (const auto& w : words) CHECK(word_product(n, w) == pi);
    }
  }
  // The longest element of S_4 has 16 reduced words.
  CHECK(all_reduced_words(Permutation{4, 3, 2, 1}).size() == 16);
}

TEST_CASE("walking a reduced word reproduces the orbit formula") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 2; ++m) {
      std::vector<Label> labels;
      for (const auto& a : weakly_increasing_labels(n, 1 + m * (n - 1))) {
        bool fundamental = true;
        for (int i = 1; i <= n; ++i) fundamental = fundamental && a.at(i) <= 1 + m * (i - 1);
        if (fundamental) labels.push_back(a);
      }
      int mismatches = 0;
      for (const auto& pi : all_permutations(n)) {
        for (const auto& word : all_reduced_words(pi)) {
          for (const auto& a : labels) {
            Label b = a;
            for (auto it = word.rbegin(); it != word.rend(); ++it) b = adjacent_step(b, *it);
            if (b != orbit_label(pi, a)) ++mismatches;
          }
        }
      }
      CHECK(mismatches == 0);
    }
  }
}
