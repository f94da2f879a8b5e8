#include "coxeter/arrangement.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "coxeter/error.hpp"

namespace coxeter {

CoxeterSpec::CoxeterSpec(int n, int k, int l) : n_(n), k_(k), l_(l) {
  if (n < 1 || k < 1 || l < 0) {
    throw InvalidArgument("invalid arrangement parameters (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                          "): need n >= 1, k >= 1, l >= 0");
  }
}

int CoxeterSpec::m() const {
  if (!is_catalan()) {
    throw UnsupportedAction("m is only defined for k == l");
  }
  return k_;
}

int CoxeterSpec::pair_index(int i, int j) const {
  if (i < 1 || j > n_ || i >= j) {
    throw InvalidArgument("pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not an ordered pair i < j in [1.." + std::to_string(n_) + "]");
  }
  // Pairs (a, *) for a < i come first: (n-1) + (n-2) + ... + (n-i+1).
  const int before = (i - 1) * n_ - (i - 1) * i / 2;
  return before + (j - i - 1);
}

bool Hyperplane::belongs_to(const CoxeterSpec& spec) const {
  if (i < 1 || j < 1 || i > spec.n() || j > spec.n() || i == j) return false;
  if (i < j) return m >= 1 && m <= spec.k();
  return m == 0 || (m >= 1 && m <= spec.l());
}

bool hyperplane_less(const Hyperplane& lhs, const Hyperplane& rhs) {
  auto key = [](const Hyperplane& h) {
    return std::tuple(std::min(h.i, h.j), std::max(h.i, h.j), h.m, h.i > h.j);
  };
  return key(lhs) < key(rhs);
}

Hyperplane normalize(int i, int j, int a) {
  if (i == j) {
    throw InvalidArgument("hyperplane x_i - x_j needs i != j (got i = j = " + std::to_string(i) +
                          ")");
  }
  if (a > 0) return {i, j, a};
  if (a < 0) return {j, i, -a};
  return {std::max(i, j), std::min(i, j), 0};
}

std::vector<Hyperplane> hyperplanes(const CoxeterSpec& spec) {
  std::vector<Hyperplane> out;
  out.reserve(static_cast<std::size_t>(spec.hyperplane_count()));
  for (int i = 1; i <= spec.n(); ++i) {
    for (int j = i + 1; j <= spec.n(); ++j) {
      for (int a = -spec.l(); a <= spec.k(); ++a) {
        out.push_back(normalize(i, j, a));
      }
    }
  }
  std::sort(out.begin(), out.end(), hyperplane_less);
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 0; i < r; ++i) {
    // result * (n - i) is divisible by (i + 1) at every step.
    result = result * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return result;
}

std::uint64_t fuss_catalan(int n, int m) {
  return binomial(m * n + n, m * n) / static_cast<std::uint64_t>(m * n + 1);
}

std::optional<std::uint64_t> formula_region_count(const CoxeterSpec& spec) {
  const int n = spec.n();
  if (spec.is_catalan()) {
    std::uint64_t factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
    return factorial * fuss_catalan(n, spec.k());
  }
  if (spec.is_shi()) {
    std::uint64_t result = 1;
    for (int i = 1; i < n; ++i) result *= static_cast<std::uint64_t>(spec.k() * n + 1);
    return result;
  }
  return std::nullopt;
}

}  // namespace coxeter
