#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mellin {

/// Exponent vector (i_1, ..., i_n) with non-negative entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : entries_(n, 0) {}
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

  static MultiIndex unit(std::size_t n, std::size_t j, int value = 1) {
    MultiIndex e(n);
    e[j] = value;
    return e;
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  int& operator[](std::size_t j) { return entries_[j]; }
  const std::vector<int>& entries() const { return entries_; }

  int degree() const {
    int total = 0;
    for (int e : entries_) total += e;
    return total;
  }

  bool is_zero() const { return degree() == 0 && all_nonnegative(); }
  bool all_nonnegative() const {
    for (int e : entries_)
      if (e < 0) return false;
    return true;
  }

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;

  /// Componentwise reduction into {0, ..., m-1}.
  MultiIndex mod(int m) const;

  /// Sum of i_j * other_j.
  long dot(const MultiIndex& other) const;
  long dot(const std::vector<int>& weights) const;

  /// "(2,1)".
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Total degree first, then lexicographic. Used for series term maps so that
/// printouts read 1 + x1 + x2 + x1^2 + ...
struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    return a < b;
  }
};

/// Parses "2,1" or "(2,1)".
MultiIndex parse_multi_index(const std::string& text);

}  // namespace mellin
