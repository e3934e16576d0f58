#pragma once

#include <compare>
#include <string>

#include "pureartin/rational.hpp"

namespace pureartin {

/// Element a + b·√d of ℚ(√d), d ∈ {2, 5}.
///
/// √2 carries the image of t under q ↦ e^h, t ↦ e^{√2 h}; √5 is used only
/// for H3/H4 root coordinates. Arithmetic between different discriminants
/// throws InvalidInput.
class QuadElem {
 public:
  explicit QuadElem(int disc = 2);
  QuadElem(int disc, Rational a, Rational b = Rational(0));

  int disc() const { return disc_; }
  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  /// Sign of the real number a + b√d.
  int sign() const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator*=(const Rational& r);
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator*(QuadElem x, const Rational& r) { return x *= r; }

  /// Multiplicative inverse via the conjugate; throws NotInvertible on zero.
  QuadElem inverse() const;
  QuadElem conjugate() const { return QuadElem(disc_, a_, -b_); }

  /// Component-wise equality; comparing different discriminants throws.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

  std::string to_string() const;

 private:
  void check_same(const QuadElem& o) const;

  int disc_;
  Rational a_;
  Rational b_;
};

/// Exact comparison as real numbers.
std::strong_ordering compare_real(const QuadElem& x, const QuadElem& y);

/// Total order on (d, a, b) for use as map keys.
struct QuadStructuralLess {
  bool operator()(const QuadElem& x, const QuadElem& y) const;
};

}  // namespace pureartin
