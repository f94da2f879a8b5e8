#pragma once

#include <span>
#include <vector>

#include "coxeter/arrangement.hpp"
#include "coxeter/label.hpp"

namespace coxeter {

// A permutation of [1..n] in one-line form (pi_1, ..., pi_n).
//
// Composition convention, used everywhere in this library:
//   (a ∘ pi)_i = a_{pi(i)}      for vectors a,
//   (pi ∘ sigma)(i) = pi(sigma(i)).
// With it the orbit formula reads b = I(pi) + a ∘ pi^{-1}; for instance
// 125 ∘ (2,3,1) = 251.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless one_line is a bijection on [1..n].
  explicit Permutation(std::vector<int> one_line);
  Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

  static Permutation identity(int n);
  // tau_i = (i, i+1), 1 <= i <= n-1.
  static Permutation adjacent_transposition(int n, int i);

  int size() const { return static_cast<int>(one_line_.size()); }
  // pi(i), 1-based.
  int at(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const { return one_line_; }

  Permutation inverse() const;
  Permutation reversed() const;
  bool is_identity() const;
  int inversion_count() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// (pi ∘ sigma)(i) = pi(sigma(i)).
Permutation compose(const Permutation& pi, const Permutation& sigma);

// (a ∘ pi)_i = a_{pi(i)}.
std::vector<int> compose(std::span<const int> a, const Permutation& pi);
Label compose(const Label& a, const Permutation& pi);

// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// Inversion table: I_i = #{values greater than i placed before i}.
// Always lies in the box [0,n-1] x [0,n-2] x ... x {0}.
class InversionTable {
 public:
  InversionTable() = default;
  // Throws InvalidArgument when some I_i falls outside [0, n-i].
  explicit InversionTable(std::vector<int> values);
  InversionTable(std::initializer_list<int> values) : InversionTable(std::vector<int>(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }

  static bool in_box(std::span<const int> values);

  friend bool operator==(const InversionTable&, const InversionTable&) = default;

 private:
  std::vector<int> values_;
};

InversionTable inversion_table(const Permutation& pi);

// Inserts n, n-1, ..., 1, putting value i at position I_i among the values
// already placed.
Permutation from_inversion_table(const InversionTable& table);

struct LdLu {
  std::vector<int> ld;  // earlier strictly smaller entries
  std::vector<int> lu;  // earlier strictly larger entries
};

LdLu ld_lu(std::span<const int> a);

struct ChamberExtremes {
  Label mu;       // 1 + I(pi), the unique minimal label of the chamber
  Label maximum;  // mu + k (ld(pi) ∘ pi^-1) + l (lu(pi) ∘ pi^-1)
};

ChamberExtremes chamber_extremes(const Permutation& pi, const CoxeterSpec& spec);

// Label of pi(R) where R is the fundamental-chamber region labeled a, in an
// arrangement with k == l: I(pi) + a ∘ pi^-1. Throws InvalidArgument when a is
// not weakly increasing or sizes differ.
Label orbit_label(const Permutation& pi, const Label& a);

// Label of the region tau_i ∘ pi (R), given the label b of pi(R):
//   b ∘ tau_i + e_i       if b_i <= b_{i+1}
//   b ∘ tau_i - e_{i+1}   otherwise.
// Positions are 1 <= i <= n-1.
Label adjacent_step(const Label& b, int i);

// Positions s_1, ..., s_r with pi = tau_{s_1} ∘ ... ∘ tau_{s_r}, r = inv(pi).
// Applying adjacent_step with s_r first and s_1 last walks from the identity
// chamber to the chamber of pi.
std::vector<int> reduced_word(const Permutation& pi);

// Every reduced word of pi, in the same convention as reduced_word().
std::vector<std::vector<int>> all_reduced_words(const Permutation& pi);

}  // namespace coxeter
