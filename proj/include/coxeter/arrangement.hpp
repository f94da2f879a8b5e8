#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace coxeter {

// The n-dimensional (k,l)-Coxeter arrangement: hyperplanes x_i - x_j = a for
// 1 <= i < j <= n and a in [-l, k]. Shi is (m, m-1), m-Catalan is (m, m).
class CoxeterSpec {
 public:
  // Throws InvalidArgument unless n >= 1, k >= 1, l >= 0.
  CoxeterSpec(int n, int k, int l);

  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }

  int pair_count() const { return n_ * (n_ - 1) / 2; }
  std::int64_t hyperplane_count() const {
    return static_cast<std::int64_t>(l_ + k_ + 1) * pair_count();
  }

  bool is_catalan() const { return k_ == l_; }
  bool is_shi() const { return k_ == l_ + 1; }
  // Throws UnsupportedAction when k != l.
  int m() const;

  // Interval indices of a pair range over [min_interval(), max_interval()];
  // the two ends are the unbounded slabs.
  int min_interval() const { return -l_ - 1; }
  int max_interval() const { return k_; }

  // Position of the unordered pair {i < j} (1-based) in the canonical pair
  // order (1,2),(1,3),...,(1,n),(2,3),...
  int pair_index(int i, int j) const;

  friend auto operator<=>(const CoxeterSpec&, const CoxeterSpec&) = default;

 private:
  int n_;
  int k_;
  int l_;
};

// Hyperplane x_i - x_j = m in normalized form: m >= 0, and i > j when m == 0.
// Crossing it away from R0 increases coordinate j of the Pak-Stanley label.
struct Hyperplane {
  int i = 0;
  int j = 0;
  int m = 0;

  int increment_target() const { return j; }
  bool belongs_to(const CoxeterSpec& spec) const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Canonical ordering: (min(i,j), max(i,j), m, i > j).
bool hyperplane_less(const Hyperplane& lhs, const Hyperplane& rhs);

// Normalized form of x_i - x_j = a. Throws InvalidArgument when i == j.
Hyperplane normalize(int i, int j, int a);

// All (l+k+1)·C(n,2) hyperplanes, normalized and canonically ordered.
std::vector<Hyperplane> hyperplanes(const CoxeterSpec& spec);

std::uint64_t binomial(int n, int r);

// F(n,m) = C(mn+n, mn) / (mn+1).
std::uint64_t fuss_catalan(int n, int m);

// n!·F(n,k) when k == l, (kn+1)^(n-1) when k == l+1, nothing otherwise.
std::optional<std::uint64_t> formula_region_count(const CoxeterSpec& spec);

}  // namespace coxeter
