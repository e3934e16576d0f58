#include "pureartin/hseries.hpp"

#include <sstream>

#include "pureartin/errors.hpp"

namespace pureartin {

HSeries::HSeries(int order) {
  if (order < 0) throw InvalidInput("truncation order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, QuadElem(2));
}

HSeries::HSeries(int order, const QuadElem& constant) : HSeries(order) {
  if (constant.disc() != 2) throw InvalidInput("h-series coefficients live in Q(sqrt 2)");
  coeffs_[0] = constant;
}

HSeries HSeries::from_coeffs(std::vector<QuadElem> coeffs) {
  if (coeffs.empty()) throw InvalidInput("h-series needs at least one coefficient");
  for (const auto& c : coeffs)
    if (c.disc() != 2) throw InvalidInput("h-series coefficients live in Q(sqrt 2)");
  HSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

void HSeries::check_order(const HSeries& o) const {
  if (order() != o.order())
    throw InvalidInput("mismatched truncation orders " + std::to_string(order()) +
                       " and " + std::to_string(o.order()));
}

bool HSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool HSeries::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

std::optional<int> HSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  return std::nullopt;
}

HSeries HSeries::operator-() const {
  HSeries s = *this;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

HSeries operator*(const HSeries& x, const HSeries& y) {
  x.check_order(y);
  const std::size_t n = x.coeffs_.size();
  HSeries out(x.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (y.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const HSeries& x, const HSeries& y) {
  x.check_order(y);
  return x.coeffs_ == y.coeffs_;
}

std::string HSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool compound = sgn(coeffs_[k].radical_part()) != 0 &&
                          sgn(coeffs_[k].rational_part()) != 0;
    if (k == 0) {
      os << coeffs_[k].to_string();
      continue;
    }
    if (compound) os << "(" << coeffs_[k].to_string() << ")";
    else if (!coeffs_[k].is_one()) os << coeffs_[k].to_string();
    os << (coeffs_[k].is_one() && !compound ? "" : "*") << "h";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(h^" << coeffs_.size() << ")";
  return os.str();
}

}  // namespace pureartin
