#pragma once

#include <utility>
#include <vector>

#include "zetaform/rational.hpp"

namespace zetaform {

/// Exact truncated power series: coefficients of z^lowest .. z^{lowest+len-1}.
/// Decompositions must ultimately cancel every negative power; callers assert
/// that via assert_no_negative_powers / nonnegative_part.
class SeriesWindow {
 public:
  SeriesWindow() = default;
  /// Zero window covering z^0..z^order.
  explicit SeriesWindow(long order) : lowest_(0), c_(order + 1, Rat(0)) {}
  SeriesWindow(long lowest, std::vector<Rat> coeffs)
      : lowest_(lowest), c_(std::move(coeffs)) {}

  long lowest() const { return lowest_; }
  long highest() const { return lowest_ + static_cast<long>(c_.size()) - 1; }
  long order() const { return highest(); }

  Rat coeff(long power) const {
    long i = power - lowest_;
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rat(0);
  }
  void add_coeff(long power, const Rat& v);

  SeriesWindow& operator+=(const SeriesWindow& o);
  SeriesWindow scaled(const Rat& s) const;
  /// Multiplies by z^k (k may be negative).
  SeriesWindow shifted(long k) const;

  bool has_negative_powers() const;
  void assert_no_negative_powers() const;
  /// Restricts to z^0..z^order, requiring all negative coefficients to be zero.
  SeriesWindow nonnegative_part(long order) const;

 private:
  long lowest_ = 0;
  std::vector<Rat> c_;
};

/// Exact comparison over the overlap z^0..z^min(order); returns the first
/// mismatching power, or -1 when equal.
std::pair<bool, long> series_equal(const SeriesWindow& a, const SeriesWindow& b);

}  // namespace zetaform
