#include "zetaform/series_window.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetaform {

void SeriesWindow::add_coeff(long power, const Rat& v) {
  if (c_.empty()) {
    lowest_ = power;
    c_.push_back(v);
    return;
  }
  if (power < lowest_) {
    c_.insert(c_.begin(), lowest_ - power, Rat(0));
    lowest_ = power;
  } else if (power > highest()) {
    c_.resize(power - lowest_ + 1, Rat(0));
  }
  c_[power - lowest_] += v;
}

SeriesWindow& SeriesWindow::operator+=(const SeriesWindow& o) {
  for (long p = o.lowest(); p <= o.highest(); ++p) add_coeff(p, o.coeff(p));
  return *this;
}

SeriesWindow SeriesWindow::scaled(const Rat& s) const {
  SeriesWindow r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

SeriesWindow SeriesWindow::shifted(long k) const {
  SeriesWindow r = *this;
  r.lowest_ += k;
  return r;
}

bool SeriesWindow::has_negative_powers() const {
  for (long p = lowest_; p < 0 && p <= highest(); ++p)
    if (coeff(p) != 0) return true;
  return false;
}

void SeriesWindow::assert_no_negative_powers() const {
  if (has_negative_powers())
    throw std::logic_error("SeriesWindow: uncancelled negative powers of z");
}

SeriesWindow SeriesWindow::nonnegative_part(long order) const {
  assert_no_negative_powers();
  std::vector<Rat> out(order + 1, Rat(0));
  for (long p = 0; p <= order; ++p) out[p] = coeff(p);
  return SeriesWindow(0, std::move(out));
}

std::pair<bool, long> series_equal(const SeriesWindow& a, const SeriesWindow& b) {
  const long lo = std::min(a.lowest(), b.lowest());
  const long hi = std::min(a.highest(), b.highest());
  for (long p = lo; p <= hi; ++p)
    if (a.coeff(p) != b.coeff(p)) return {false, p};
  return {true, -1};
}

}  // namespace zetaform
