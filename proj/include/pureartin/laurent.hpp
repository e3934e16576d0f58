#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pureartin/rational.hpp"

namespace pureartin {

/// Exponent pair of a monomial q^q_exp t^t_exp. Both exponents may be
/// negative: generator inverses need t^{-1}.
struct Monomial {
  int q_exp = 0;
  int t_exp = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const {
    return {q_exp + o.q_exp, t_exp + o.t_exp};
  }
};

/// Laurent polynomial in q, t with rational coefficients.
///
/// Terms are kept sorted by (q_exp, t_exp) with no zero coefficients, so two
/// values are equal iff their term lists are equal.
class LaurentQT {
 public:
  using Term = std::pair<Monomial, Rational>;

  LaurentQT() = default;
  LaurentQT(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentQT(int c) : LaurentQT(Rational(c)) {}  // NOLINT
  static LaurentQT monomial(const Rational& c, int q_exp, int t_exp);
  static LaurentQT q() { return monomial(1, 1, 0); }
  static LaurentQT t() { return monomial(1, 0, 1); }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentQT from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// A single term c·q^a·t^b with c ≠ 0, i.e. a unit of the Laurent ring.
  bool is_unit() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  LaurentQT operator-() const;
  LaurentQT& operator+=(const LaurentQT& o);
  LaurentQT& operator-=(const LaurentQT& o);
  LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }
  friend LaurentQT operator+(LaurentQT x, const LaurentQT& y) { return x += y; }
  friend LaurentQT operator-(LaurentQT x, const LaurentQT& y) { return x -= y; }
  friend LaurentQT operator*(const LaurentQT& x, const LaurentQT& y);
  friend bool operator==(const LaurentQT&, const LaurentQT&) = default;

  /// Value at q = t = 1.
  Rational eval_at_one() const;

  /// Inverse of a unit; std::nullopt when not a single monomial.
  std::optional<LaurentQT> unit_inverse() const;

  /// Exact quotient x / d when d divides x in the Laurent ring.
  static std::optional<LaurentQT> exact_divide(const LaurentQT& x,
                                               const LaurentQT& d);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace pureartin
