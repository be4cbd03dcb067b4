#ifndef DAGREL_FINSET_HPP
#define DAGREL_FINSET_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dagrel/core/diagram.hpp"

namespace dagrel {

// A finite set of distinct string labels in canonical (sorted) order.
class FinSet {
 public:
  FinSet() = default;

  explicit FinSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 1; i < labels_.size(); ++i) {
      if (labels_[i - 1] == labels_[i]) {
        throw validation_error("FinSet: duplicate label \"" + labels_[i] + "\"");
      }
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
  }

  int index_of(const std::string& label) const {
    auto idx = find(label);
    if (!idx) throw validation_error("FinSet: unknown label \"" + label + "\"");
    return *idx;
  }

  bool operator==(const FinSet&) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (i) s += ",";
      s += labels_[i];
    }
    return s + "}";
  }

  // {1, 2, ..., n} with zero-padded labels so numeric and lexicographic
  // orders agree.
  static FinSet segment(int n);

 private:
  std::vector<std::string> labels_;
};

// Canonical label for an apex element representing the pair (a, b).
// '\\' and '|' are escaped so distinct pairs never collide.
std::string pair_label(const std::string& a, const std::string& b);

}  // namespace dagrel

#endif
