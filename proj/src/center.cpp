#include "coxeter/center.hpp"

#include <algorithm>
#include <string>

#include "coxeter/error.hpp"

namespace coxeter {

namespace {

void require_order(int m) {
  if (m < 1) throw InvalidArgument("order m must be >= 1 (got " + std::to_string(m) + ")");
}

int center_size(const Label& a, int p) { return static_cast<int>(p_center(a, p).size()); }

}  // namespace

CenterVector center_from_z(int m, int n, std::vector<int> z) {
  require_order(m);
  if (n < 1) throw InvalidArgument("dimension n must be >= 1");
  if (static_cast<int>(z.size()) != m * (n - 1) + 1) {
    throw InvalidArgument("center vector of order " + std::to_string(m) + " in dimension " +
                          std::to_string(n) + " needs " + std::to_string(m * (n - 1) + 1) +
                          " entries");
  }
  for (std::size_t p = 0; p < z.size(); ++p) {
    if (z[p] < 0 || z[p] > n || (p > 0 && z[p] < z[p - 1])) {
      throw InvalidArgument("center vector must be weakly increasing with entries in [0, n]");
    }
  }
  return {m, n, std::move(z), {}};
}

std::vector<int> p_center(const Label& a, int p) {
  std::vector<int> kept;
  if (p < 0) return kept;
  for (int i = a.size(); i >= 1; --i) {
    if (a.at(i) <= p + static_cast<int>(kept.size()) + 1) kept.push_back(i);
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

CenterVector center_vector(const Label& a, int m) {
  require_order(m);
  CenterVector out{m, a.size(), {}, {}};
  for (int p = 0; p <= out.last_level(); ++p) {
    out.levels.push_back(p_center(a, p));
    out.z.push_back(static_cast<int>(out.levels.back().size()));
  }
  return out;
}

std::vector<int> min_center_index(const Label& a, int m) {
  const auto center = center_vector(a, m);
  std::vector<int> entry(static_cast<std::size_t>(a.size()), -1);
  for (int p = 0; p <= center.last_level(); ++p) {
    for (int i : center.levels[static_cast<std::size_t>(p)]) {
      auto& slot = entry[static_cast<std::size_t>(i - 1)];
      if (slot < 0) slot = p;
    }
  }
  if (std::find(entry.begin(), entry.end(), -1) != entry.end()) {
    throw NotALabel(a.str() + " does not fill its center by level " +
                    std::to_string(center.last_level()));
  }
  return entry;
}

bool is_m_catalan(const Label& a, int m) {
  require_order(m);
  for (int i = 1; i <= a.size(); ++i) {
    if (center_size(a, (i - 1) * m) < i) return false;
  }
  return true;
}

bool is_prime_m_catalan(const Label& a, int m) {
  require_order(m);
  for (int i = 2; i <= a.size(); ++i) {
    if (center_size(a, (i - 1) * m - 1) < i) return false;
  }
  return true;
}

bool is_m_parking(const Label& a, int m) {
  require_order(m);
  auto sorted = a.values();
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > m * static_cast<int>(i) + 1) return false;
  }
  return true;
}

Label increasing_from_center(const CenterVector& z) {
  const auto checked = center_from_z(z.m, z.n, z.z);
  if (!checked.complete()) {
    throw NotALabel("center vector does not end at n = " + std::to_string(z.n) +
                    "; it has no preimage");
  }
  std::vector<int> a;
  for (int i = 1; i <= z.n; ++i) {
    int j = 1;
    while (checked.z[static_cast<std::size_t>(j - 1)] < i) ++j;
    a.push_back(j);
  }
  return Label(std::move(a));
}

}  // namespace coxeter
