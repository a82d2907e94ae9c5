#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

namespace zetaform {

/// Polylogarithm index (s_1, ..., s_l), all entries >= 1. The empty index is
/// allowed and denotes the free-term slot.
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> s) : entries(std::move(s)) {}

  int depth() const { return static_cast<int>(entries.size()); }
  int weight() const { return std::accumulate(entries.begin(), entries.end(), 0); }
  bool empty() const { return entries.empty(); }

  bool operator==(const MultiIndex& o) const { return entries == o.entries; }

  /// Canonical ordering: by depth, then lexicographic.
  bool operator<(const MultiIndex& o) const {
    if (depth() != o.depth()) return depth() < o.depth();
    return entries < o.entries;
  }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries[i]);
    }
    return s + ")";
  }
};

}  // namespace zetaform
