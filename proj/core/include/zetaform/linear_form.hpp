#pragma once

#include <map>

#include "zetaform/multi_index.hpp"
#include "zetaform/polynomial.hpp"

namespace zetaform {

/// Linear form sum_s P_s(w) * Le_s(z) + free(w), with w = 1/z. Polynomials are
/// in w; zero polynomials are never stored.
class LinearForm {
 public:
  LinearForm() = default;

  const std::map<MultiIndex, Polynomial>& terms() const { return terms_; }
  const Polynomial& free_term() const { return free_; }

  Polynomial coefficient(const MultiIndex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Polynomial() : it->second;
  }

  void add_term(const MultiIndex& s, const Polynomial& p) {
    if (s.empty()) {
      free_ += p;
      return;
    }
    auto [it, inserted] = terms_.try_emplace(s, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }

  void add_free(const Polynomial& p) { free_ += p; }

  LinearForm& operator+=(const LinearForm& o) {
    for (const auto& [s, p] : o.terms_) add_term(s, p);
    free_ += o.free_;
    return *this;
  }

  /// Scales every polynomial (including the free term) by q(w).
  LinearForm scaled(const Polynomial& q) const {
    LinearForm r;
    for (const auto& [s, p] : terms_) r.add_term(s, p * q);
    r.free_ = free_ * q;
    return r;
  }

  LinearForm scaled(const Rat& c) const { return scaled(Polynomial(c)); }

  /// Maximum coefficient height over all stored polynomials and the free term.
  Rat max_height() const {
    Rat h = free_.height();
    for (const auto& [s, p] : terms_) h = std::max(h, p.height());
    return h;
  }

  bool operator==(const LinearForm& o) const {
    return terms_ == o.terms_ && free_ == o.free_;
  }

 private:
  std::map<MultiIndex, Polynomial> terms_;
  Polynomial free_;
};

}  // namespace zetaform
