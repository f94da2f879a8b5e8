#include "coxeter/label.hpp"

#include <algorithm>
#include <charconv>

#include "coxeter/error.hpp"

namespace coxeter {

Label::Label(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("a label needs at least one coordinate");
  for (int v : values_) {
    if (v < 1) throw InvalidArgument("label entries must be >= 1 (got " + std::to_string(v) + ")");
  }
}

Label Label::ones(int n) {
  return Label(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Label Label::plus_unit(int j) const {
  auto v = values_;
  v.at(static_cast<std::size_t>(j - 1)) += 1;
  return Label(std::move(v));
}

Label Label::reversed() const {
  return Label(std::vector<int>(values_.rbegin(), values_.rend()));
}

bool Label::is_weakly_increasing() const {
  return std::is_sorted(values_.begin(), values_.end());
}

bool Label::le(const Label& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

std::string Label::str() const {
  const bool compact = std::all_of(values_.begin(), values_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

Label parse_label(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidArgument("cannot parse label '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto stop = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, stop - start);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw InvalidArgument("cannot parse label '" + std::string(text) + "'");
      }
      values.push_back(v);
      start = stop + 1;
    }
  }
  return Label(std::move(values));
}

}  // namespace coxeter
