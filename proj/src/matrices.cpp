#include "pureartin/matrices.hpp"

#include <map>
#include <vector>

#include "pureartin/errors.hpp"

namespace pureartin {

namespace {

// Taylor coefficients of e^{(a + b√2) h} up to h^K.
std::vector<QuadElem> exp_coeffs(const Monomial& m, int order) {
  const QuadElem rate(2, Rational(m.q_exp), Rational(m.t_exp));
  std::vector<QuadElem> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  out.emplace_back(2, Rational(1));
  for (int k = 1; k <= order; ++k) {
    QuadElem next = out.back() * rate;
    next *= Rational(1, k);
    out.push_back(std::move(next));
  }
  return out;
}

HSeries iota_cached(const LaurentQT& p, int order,
                    std::map<Monomial, std::vector<QuadElem>>& cache) {
  std::vector<QuadElem> acc(static_cast<std::size_t>(order) + 1, QuadElem(2));
  for (const auto& [mono, c] : p.terms()) {
    auto it = cache.find(mono);
    if (it == cache.end()) it = cache.emplace(mono, exp_coeffs(mono, order)).first;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += it->second[k] * c;
  }
  return HSeries::from_coeffs(std::move(acc));
}

using DenseL = std::vector<std::vector<LaurentQT>>;

DenseL augmented(const MatrixL& m) {
  const std::size_t n = m.rows();
  DenseL a(n, std::vector<LaurentQT>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
    a[i][n + i] = LaurentQT(1);
  }
  return a;
}

std::size_t row_weight(const std::vector<LaurentQT>& row) {
  std::size_t w = 0;
  for (const auto& x : row) w += x.size();
  return w;
}

// Gauss–Jordan using only unit pivots, so every step stays inside the
// Laurent ring. Returns false if some column has no unit pivot left.
bool unit_pivot_jordan(DenseL& a) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    std::size_t best_w = 0;
    for (std::size_t r = c; r < n; ++r) {
      if (!a[r][c].is_unit()) continue;
      const std::size_t w = row_weight(a[r]);
      if (best == n || w < best_w) {
        best = r;
        best_w = w;
      }
    }
    if (best == n) return false;
    std::swap(a[c], a[best]);
    const LaurentQT inv = *a[c][c].unit_inverse();
    for (auto& x : a[c])
      if (!x.is_zero()) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const LaurentQT f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
    }
  }
  return true;
}

// Fraction-free Gauss–Jordan (Bareiss): each update divides exactly by the
// previous pivot; on completion the left block is d·I and the right block
// is d·m^{-1}, where d = ±det(m) is the returned final pivot.
LaurentQT bareiss_jordan(DenseL& a) {
  const std::size_t n = a.size();
  LaurentQT prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (best == n || a[r][k].size() < a[best][k].size()) best = r;
    }
    if (best == n) throw NotInvertible("matrix is singular");
    std::swap(a[k], a[best]);
    const LaurentQT pivot = a[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const LaurentQT f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        LaurentQT num = pivot * a[i][j] - f * a[k][j];
        auto q = LaurentQT::exact_divide(num, prev);
        if (!q) throw NotInvertible("inexact division during elimination");
        a[i][j] = std::move(*q);
      }
    }
    prev = pivot;
  }
  return prev;
}

}  // namespace

HSeries iota_substitute(const LaurentQT& p, int order) {
  if (order < 0) throw InvalidInput("truncation order must be >= 0");
  std::map<Monomial, std::vector<QuadElem>> cache;
  return iota_cached(p, order, cache);
}

MatrixH iota_substitute(const MatrixL& m, int order) {
  if (order < 0) throw InvalidInput("truncation order must be >= 0");
  std::map<Monomial, std::vector<QuadElem>> cache;
  return m.map([&](const LaurentQT& p) { return iota_cached(p, order, cache); });
}

MatrixQ reduce_mod_h(const MatrixH& m) {
  return m.map([](const HSeries& s) { return s.coeff(0); });
}

MatrixR specialize_at_one(const MatrixL& m) {
  return m.map([](const LaurentQT& p) { return p.eval_at_one(); });
}

MatrixH identity_h(std::size_t n, int order) {
  return MatrixH::identity(n, HSeries(order, QuadElem(2, Rational(1))));
}

MatrixL identity_l(std::size_t n) { return MatrixL::identity(n, LaurentQT(1)); }

HValuation h_valuation(const MatrixH& m) {
  if (!m.is_square()) throw InvalidInput("h_valuation needs a square matrix, got " + m.shape());
  int order = -1;
  int best = -1;
  auto consider = [&](const HSeries& s) {
    if (auto v = s.valuation(); v && (best < 0 || *v < best)) best = *v;
  };
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool diag_seen = false;
    for (const auto& [j, s] : m.row(i)) {
      order = s.order();
      if (j == i) {
        diag_seen = true;
        consider(s - HSeries(s.order(), QuadElem(2, Rational(1))));
      } else {
        consider(s);
      }
    }
    if (!diag_seen) best = 0;  // m − I has −1 on the diagonal
  }
  if (order < 0) {
    // No stored entries: m = 0, and m − I = −I unless the matrix is empty.
    return m.rows() == 0 ? HValuation::above(0) : HValuation::exact(0, 0);
  }
  if (best < 0) return HValuation::above(order);
  return HValuation::exact(best, order);
}

MatrixL invert_exact(const MatrixL& m) {
  if (!m.is_square()) throw NotInvertible("cannot invert non-square " + m.shape());
  const std::size_t n = m.rows();
  DenseL a = augmented(m);
  if (!unit_pivot_jordan(a)) {
    a = augmented(m);
    const LaurentQT det = bareiss_jordan(a);
    auto inv_det = det.unit_inverse();
    if (!inv_det) throw NotInvertible("determinant " + det.to_string() + " is not a unit");
    for (auto& row : a)
      for (std::size_t j = n; j < 2 * n; ++j)
        if (!row[j].is_zero()) row[j] = row[j] * *inv_det;
  }
  MatrixL inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][n + j].is_zero()) inv.push_back_unchecked(i, j, std::move(a[i][n + j]));
  if (!(m * inv == identity_l(n)))
    throw NotInvertible("exact inverse failed verification");
  return inv;
}

MatrixQ invert_quad(const MatrixQ& m) {
  if (!m.is_square()) throw NotInvertible("cannot invert non-square " + m.shape());
  const std::size_t n = m.rows();
  int disc = 2;
  for (std::size_t i = 0; i < n && disc == 2; ++i)
    if (!m.row(i).empty()) disc = m.row(i).front().second.disc();
  std::vector<std::vector<QuadElem>> a(n, std::vector<QuadElem>(2 * n, QuadElem(disc)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, v] : m.row(i)) a[i][j] = v;
    a[i][n + i] = QuadElem(disc, Rational(1));
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw NotInvertible("h^0 part is singular");
    std::swap(a[c], a[p]);
    const QuadElem inv = a[c][c].inverse();
    for (auto& x : a[c])
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const QuadElem f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!a[c][j].is_zero()) a[r][j] -= f * a[c][j];
    }
  }
  MatrixQ out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][n + j].is_zero()) out.push_back_unchecked(i, j, a[i][n + j]);
  return out;
}

MatrixH invert_truncated(const MatrixH& m) {
  if (!m.is_square()) throw NotInvertible("cannot invert non-square " + m.shape());
  const std::size_t n = m.rows();
  int order = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!m.row(i).empty()) order = m.row(i).front().second.order();
  const MatrixQ p_inv = invert_quad(reduce_mod_h(m));
  const MatrixH p_inv_h = p_inv.map([order](const QuadElem& c) { return HSeries(order, c); });
  const MatrixH id = identity_h(n, order);
  // m = P(I − X) with X ≡ 0 mod h, so m^{-1} = (I + X + … + X^K) P^{-1}.
  const MatrixH x = id - p_inv_h * m;
  MatrixH s = id;
  for (int k = 0; k < order; ++k) s = id + x * s;
  return s * p_inv_h;
}

}  // namespace pureartin
