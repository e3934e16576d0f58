#pragma once

#include <string>

#include "pureartin/hseries.hpp"
#include "pureartin/laurent.hpp"
#include "pureartin/quad.hpp"
#include "pureartin/sparse_matrix.hpp"

namespace pureartin {

using MatrixL = SparseMatrix<LaurentQT>;
using MatrixH = SparseMatrix<HSeries>;
using MatrixQ = SparseMatrix<QuadElem>;
using MatrixR = SparseMatrix<Rational>;

inline constexpr int kDefaultOrder = 8;

/// The embedding q ↦ e^h, t ↦ e^{√2 h}, truncated after h^K.
HSeries iota_substitute(const LaurentQT& p, int order);
MatrixH iota_substitute(const MatrixL& m, int order);

/// Entry-wise h^0 coefficient.
MatrixQ reduce_mod_h(const MatrixH& m);

/// Entry-wise value at q = t = 1.
MatrixR specialize_at_one(const MatrixL& m);

MatrixH identity_h(std::size_t n, int order);
MatrixL identity_l(std::size_t n);

/// Result of h_valuation: the lowest h-degree present in m − I, or
/// "above K" when m ≡ I modulo h^{K+1}.
class HValuation {
 public:
  static HValuation exact(int value, int order) { return {value, order, false}; }
  static HValuation above(int order) { return {order + 1, order, true}; }

  bool above_order() const { return above_; }
  /// The valuation; for above_order() this is K + 1, a lower bound.
  int value() const { return value_; }
  int order() const { return order_; }
  /// Largest certified lower bound for the true valuation.
  int lower_bound() const { return value_; }

  std::string to_string() const {
    return above_ ? std::string("ABOVE_K") : std::to_string(value_);
  }
  friend bool operator==(const HValuation&, const HValuation&) = default;

 private:
  HValuation(int v, int k, bool a) : value_(v), order_(k), above_(a) {}
  int value_;
  int order_;
  bool above_;
};

/// Minimal h-degree appearing in m − I. Requires a square matrix.
HValuation h_valuation(const MatrixH& m);

/// Exact inverse over the Laurent ring. Throws NotInvertible if the
/// determinant is zero or not a unit monomial.
MatrixL invert_exact(const MatrixL& m);

/// Inverse modulo h^{K+1}; needs an invertible h^0 part.
MatrixH invert_truncated(const MatrixH& m);

/// Dense inverse over ℚ(√d).
MatrixQ invert_quad(const MatrixQ& m);

}  // namespace pureartin
