#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pureartin/errors.hpp"
#include "pureartin/rational.hpp"

namespace pureartin {

namespace detail {
inline bool entry_is_zero(const Rational& r) { return sgn(r) == 0; }
template <class T>
bool entry_is_zero(const T& x) {
  return x.is_zero();
}
}  // namespace detail

/// Row-major sparse matrix over a ring T.
///
/// Rows are sorted by column and never hold zero entries; products and sums
/// purge cancellations, so equality is structural.
template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n, const T& one) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, one);
    return m;
  }

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  const std::vector<Entry>& row(std::size_t i) const { return data_.at(i); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  const T* find(std::size_t i, std::size_t j) const {
    const auto& r = data_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it == r.end() || it->first != j) return nullptr;
    return &it->second;
  }

  T get(std::size_t i, std::size_t j, const T& zero) const {
    const T* p = find(i, j);
    return p ? *p : zero;
  }

  /// Overwrites entry (i, j); a zero value removes it.
  void set(std::size_t i, std::size_t j, T value) {
    check_index(i, j);
    auto& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    const bool present = it != r.end() && it->first == j;
    if (detail::entry_is_zero(value)) {
      if (present) r.erase(it);
    } else if (present) {
      it->second = std::move(value);
    } else {
      r.emplace(it, j, std::move(value));
    }
  }

  void add_to(std::size_t i, std::size_t j, const T& value) {
    if (const T* p = find(i, j)) set(i, j, *p + value);
    else set(i, j, value);
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    SparseMatrix<U> out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) {
        U u = f(v);
        if (!detail::entry_is_zero(u)) out.push_back_unchecked(i, j, std::move(u));
      }
    return out;
  }

  SparseMatrix transpose() const {
    SparseMatrix out(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : data_[i]) out.data_[j].emplace_back(i, v);
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows())
      throw InvalidInput("non-conformable matrix product " + a.shape() + " * " + b.shape());
    SparseMatrix out(a.rows(), b.cols_);
    std::vector<std::optional<T>> acc(b.cols_);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      touched.clear();
      for (const auto& [k, x] : a.data_[i]) {
        for (const auto& [j, y] : b.data_[k]) {
          if (!acc[j]) {
            acc[j] = x * y;
            touched.push_back(j);
          } else {
            *acc[j] += x * y;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& row = out.data_[i];
      row.reserve(touched.size());
      for (std::size_t j : touched) {
        if (!detail::entry_is_zero(*acc[j])) row.emplace_back(j, std::move(*acc[j]));
        acc[j].reset();
      }
    }
    return out;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, false);
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return combine(a, b, true);
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& ra = a.data_[i];
      const auto& rb = b.data_[i];
      if (ra.size() != rb.size()) return false;
      for (std::size_t k = 0; k < ra.size(); ++k)
        if (ra[k].first != rb[k].first || !(ra[k].second == rb[k].second)) return false;
    }
    return true;
  }

  std::string shape() const {
    return std::to_string(rows()) + "x" + std::to_string(cols_);
  }

  /// Appends (i, j) assuming j exceeds every column already in row i.
  void push_back_unchecked(std::size_t i, std::size_t j, T value) {
    data_[i].emplace_back(j, std::move(value));
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows() || j >= cols_)
      throw InvalidInput("matrix index (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range for " + shape());
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_)
      throw InvalidInput("non-conformable matrix sum " + a.shape() + " and " + b.shape());
    SparseMatrix out(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& ra = a.data_[i];
      const auto& rb = b.data_[i];
      auto& ro = out.data_[i];
      std::size_t x = 0, y = 0;
      while (x < ra.size() || y < rb.size()) {
        if (y == rb.size() || (x < ra.size() && ra[x].first < rb[y].first)) {
          ro.push_back(ra[x++]);
        } else if (x == ra.size() || rb[y].first < ra[x].first) {
          ro.emplace_back(rb[y].first, subtract ? T(-rb[y].second) : rb[y].second);
          ++y;
        } else {
          T v = subtract ? T(ra[x].second - rb[y].second) : T(ra[x].second + rb[y].second);
          if (!detail::entry_is_zero(v)) ro.emplace_back(ra[x].first, std::move(v));
          ++x;
          ++y;
        }
      }
    }
    return out;
  }

  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace pureartin
