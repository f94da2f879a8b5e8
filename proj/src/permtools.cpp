#include "coxeter/permtools.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coxeter/error.hpp"

namespace coxeter {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const auto n = one_line_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a permutation of [1.." + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) {
    throw InvalidArgument("adjacent transposition position " + std::to_string(i) +
                          " outside [1," + std::to_string(n - 1) + "]");
  }
  auto v = identity(n).one_line_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t pos = 0; pos < one_line_.size(); ++pos) {
    inv[static_cast<std::size_t>(one_line_[pos] - 1)] = static_cast<int>(pos + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<int>(one_line_.rbegin(), one_line_.rend()));
}

bool Permutation::is_identity() const {
  for (std::size_t pos = 0; pos < one_line_.size(); ++pos) {
    if (one_line_[pos] != static_cast<int>(pos + 1)) return false;
  }
  return true;
}

int Permutation::inversion_count() const {
  int count = 0;
  for (std::size_t a = 0; a < one_line_.size(); ++a) {
    for (std::size_t b = a + 1; b < one_line_.size(); ++b) {
      if (one_line_[a] > one_line_[b]) ++count;
    }
  }
  return count;
}

Permutation compose(const Permutation& pi, const Permutation& sigma) {
  if (pi.size() != sigma.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> out(static_cast<std::size_t>(pi.size()));
  for (int i = 1; i <= pi.size(); ++i) out[static_cast<std::size_t>(i - 1)] = pi.at(sigma.at(i));
  return Permutation(std::move(out));
}

std::vector<int> compose(std::span<const int> a, const Permutation& pi) {
  if (static_cast<int>(a.size()) != pi.size()) {
    throw InvalidArgument("composing a vector with a permutation of different size");
  }
  std::vector<int> out(a.size());
  for (int i = 1; i <= pi.size(); ++i) {
    out[static_cast<std::size_t>(i - 1)] = a[static_cast<std::size_t>(pi.at(i) - 1)];
  }
  return out;
}

Label compose(const Label& a, const Permutation& pi) {
  return Label(compose(std::span<const int>(a.values()), pi));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto v = Permutation::identity(n).one_line();
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

InversionTable::InversionTable(std::vector<int> values) : values_(std::move(values)) {
  if (!in_box(values_)) {
    throw InvalidArgument("inversion table outside the box [0,n-1] x ... x {0}");
  }
}

bool InversionTable::in_box(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  for (int i = 1; i <= n; ++i) {
    const int v = values[static_cast<std::size_t>(i - 1)];
    if (v < 0 || v > n - i) return false;
  }
  return true;
}

InversionTable inversion_table(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int value = pi.at(pos);
    for (int before = 1; before < pos; ++before) {
      if (pi.at(before) > value) ++table[static_cast<std::size_t>(value - 1)];
    }
  }
  return InversionTable(std::move(table));
}

Permutation from_inversion_table(const InversionTable& table) {
  std::vector<int> placed;
  placed.reserve(static_cast<std::size_t>(table.size()));
  for (int value = table.size(); value >= 1; --value) {
    placed.insert(placed.begin() + table.at(value), value);
  }
  return Permutation(std::move(placed));
}

LdLu ld_lu(std::span<const int> a) {
  LdLu out{std::vector<int>(a.size(), 0), std::vector<int>(a.size(), 0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] < a[i]) ++out.ld[i];
      if (a[j] > a[i]) ++out.lu[i];
    }
  }
  return out;
}

ChamberExtremes chamber_extremes(const Permutation& pi, const CoxeterSpec& spec) {
  if (pi.size() != spec.n()) throw InvalidArgument("permutation size differs from n");
  const auto table = inversion_table(pi);
  const auto stats = ld_lu(pi.one_line());
  const auto inv = pi.inverse();
  const auto ld_back = compose(std::span<const int>(stats.ld), inv);
  const auto lu_back = compose(std::span<const int>(stats.lu), inv);

  std::vector<int> mu(table.values());
  for (int& v : mu) v += 1;
  std::vector<int> maximum(mu);
  for (std::size_t i = 0; i < maximum.size(); ++i) {
    maximum[i] += spec.k() * ld_back[i] + spec.l() * lu_back[i];
  }
  return {Label(std::move(mu)), Label(std::move(maximum))};
}

Label orbit_label(const Permutation& pi, const Label& a) {
  if (pi.size() != a.size()) throw InvalidArgument("permutation and label sizes differ");
  if (!a.is_weakly_increasing()) {
    throw InvalidArgument("orbit_label expects a weakly increasing (fundamental) label, got " +
                          a.str());
  }
  const auto table = inversion_table(pi);
  auto out = compose(std::span<const int>(a.values()), pi.inverse());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += table.values()[i];
  return Label(std::move(out));
}

Label adjacent_step(const Label& b, int i) {
  const int n = b.size();
  auto swapped = compose(b, Permutation::adjacent_transposition(n, i)).values();
  if (b.at(i) <= b.at(i + 1)) {
    swapped[static_cast<std::size_t>(i - 1)] += 1;
  } else {
    swapped[static_cast<std::size_t>(i)] -= 1;
  }
  return Label(std::move(swapped));
}

namespace {

// Values i with i+1 placed before i: left-multiplying by tau_i removes one
// inversion.
std::vector<int> left_descents(const Permutation& pi) {
  const auto inv = pi.inverse();
  std::vector<int> out;
  for (int i = 1; i < pi.size(); ++i) {
    if (inv.at(i + 1) < inv.at(i)) out.push_back(i);
  }
  return out;
}

Permutation swap_values(const Permutation& pi, int i) {
  return compose(Permutation::adjacent_transposition(pi.size(), i), pi);
}

void collect_words(const Permutation& pi, std::vector<int>& prefix,
                   std::vector<std::vector<int>>& out) {
  if (pi.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i : left_descents(pi)) {
    prefix.push_back(i);
    collect_words(swap_values(pi, i), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<int> reduced_word(const Permutation& pi) {
  std::vector<int> word;
  Permutation current = pi;
  while (!current.is_identity()) {
    const int i = left_descents(current).front();
    word.push_back(i);
    current = swap_values(current, i);
  }
  return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& pi) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(pi, prefix, out);
  return out;
}

}  // namespace coxeter
