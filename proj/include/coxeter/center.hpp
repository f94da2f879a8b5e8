#pragma once

#include <vector>

#include "coxeter/label.hpp"

namespace coxeter {

// Centers of a vector a in N^n.
//
// The p-center Z_p(a) is the largest set x_1 > x_2 > ... > x_q of indices
// with a_{x_j} <= p + j for every j (empty for p < 0). Centers are nested,
// Z_0 ⊆ Z_1 ⊆ ..., and z_p = |Z_p|. The center vector of order m collects
// z_0, ..., z_{m(n-1)}.
struct CenterVector {
  int m = 0;
  int n = 0;
  std::vector<int> z;                 // z_0 .. z_{m(n-1)}
  std::vector<std::vector<int>> levels;  // Z_0 .. Z_{m(n-1)}, ascending; may be empty

  int last_level() const { return m * (n - 1); }
  bool complete() const { return !z.empty() && z.back() == n; }

  friend bool operator==(const CenterVector& lhs, const CenterVector& rhs) {
    return lhs.m == rhs.m && lhs.n == rhs.n && lhs.z == rhs.z;
  }
};

// Center vector from z alone (levels left empty). Throws InvalidArgument
// when m < 1, n < 1, z has the wrong length, leaves [0, n] or decreases.
CenterVector center_from_z(int m, int n, std::vector<int> z);

// Z_p(a), ascending. Greedy: scan i = n..1 and keep i whenever
// a_i <= p + (kept so far) + 1.
std::vector<int> p_center(const Label& a, int p);

CenterVector center_vector(const Label& a, int m);

// p(a)_i = the level at which i enters the center. Throws NotALabel when
// some index is still outside Z_{m(n-1)}.
std::vector<int> min_center_index(const Label& a, int m);

// z_{(i-1)m}(a) >= i for all i.
bool is_m_catalan(const Label& a, int m);

// z_{(i-1)m-1}(a) >= i for all i in [2, n].
bool is_prime_m_catalan(const Label& a, int m);

// Sorted rearrangement satisfies b_i <= m(i-1) + 1.
bool is_m_parking(const Label& a, int m);

// The unique weakly increasing a with center z:
//   a_i = min{ j in [1, m(n-1)+1] : z_{j-1} >= i }.
// Throws NotALabel when z does not end at n.
Label increasing_from_center(const CenterVector& z);

}  // namespace coxeter
