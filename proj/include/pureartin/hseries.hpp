#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pureartin/quad.hpp"

namespace pureartin {

/// Power series in h over ℚ(√2), truncated after h^K.
class HSeries {
 public:
  /// Zero series of order 0; assign before use.
  HSeries() : HSeries(0) {}
  explicit HSeries(int order);
  HSeries(int order, const QuadElem& constant);
  /// Coefficients h^0 … h^K; K = coeffs.size() − 1.
  static HSeries from_coeffs(std::vector<QuadElem> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QuadElem& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<QuadElem>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// Lowest degree with a nonzero coefficient; nullopt for the zero series.
  std::optional<int> valuation() const;

  HSeries operator-() const;
  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const HSeries& o) { return *this = *this * o; }
  friend HSeries operator+(HSeries x, const HSeries& y) { return x += y; }
  friend HSeries operator-(HSeries x, const HSeries& y) { return x -= y; }
  /// Truncated product: terms of degree > K are discarded.
  friend HSeries operator*(const HSeries& x, const HSeries& y);
  friend bool operator==(const HSeries& x, const HSeries& y);

  std::string to_string() const;

 private:
  void check_order(const HSeries& o) const;

  std::vector<QuadElem> coeffs_;
};

}  // namespace pureartin
