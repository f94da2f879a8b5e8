#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxeter {

// A Pak-Stanley label: a vector in N^n with every entry >= 1.
// Coordinates are addressed 1-based through at(); values() exposes the raw
// 0-based storage.
class Label {
 public:
  Label() = default;
  // Throws InvalidArgument on an empty vector or an entry < 1.
  explicit Label(std::vector<int> values);
  Label(std::initializer_list<int> values) : Label(std::vector<int>(values)) {}

  static Label ones(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const { return values_; }

  Label plus_unit(int j) const;
  Label reversed() const;
  bool is_weakly_increasing() const;
  // Componentwise order.
  bool le(const Label& other) const;

  // "124" when every entry is a single digit, "3,10,1" otherwise.
  std::string str() const;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::vector<int> values_;
};

// Accepts "6,1,2" or the compact digit form "612". Throws InvalidArgument.
Label parse_label(std::string_view text);

}  // namespace coxeter
