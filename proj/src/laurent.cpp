#include "pureartin/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace pureartin {

namespace {

void normalize(std::vector<LaurentQT::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first) c += terms[j++].second;
    if (sgn(c) != 0) terms[out++] = {terms[i].first, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

// Merge of two sorted term lists with sign on the second operand.
std::vector<LaurentQT::Term> merge(const std::vector<LaurentQT::Term>& a,
                                   const std::vector<LaurentQT::Term>& b,
                                   bool negate_b) {
  std::vector<LaurentQT::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, negate_b ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (sgn(c) != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentQT::LaurentQT(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

LaurentQT LaurentQT::monomial(const Rational& c, int q_exp, int t_exp) {
  LaurentQT p;
  if (sgn(c) != 0) p.terms_.emplace_back(Monomial{q_exp, t_exp}, c);
  return p;
}

LaurentQT LaurentQT::from_terms(std::vector<Term> terms) {
  normalize(terms);
  LaurentQT p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentQT::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Monomial{} && terms_[0].second == 1;
}

LaurentQT LaurentQT::operator-() const {
  LaurentQT p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentQT operator*(const LaurentQT& x, const LaurentQT& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<LaurentQT::Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) prod.emplace_back(mx * my, cx * cy);
  if (x.terms_.size() == 1 || y.terms_.size() == 1) {
    // Monomial times polynomial keeps the order and cannot cancel.
    LaurentQT p;
    p.terms_ = std::move(prod);
    return p;
  }
  return LaurentQT::from_terms(std::move(prod));
}

Rational LaurentQT::eval_at_one() const {
  Rational s = 0;
  for (const auto& term : terms_) s += term.second;
  return s;
}

std::optional<LaurentQT> LaurentQT::unit_inverse() const {
  if (!is_unit()) return std::nullopt;
  const auto& [m, c] = terms_[0];
  return monomial(1 / c, -m.q_exp, -m.t_exp);
}

std::optional<LaurentQT> LaurentQT::exact_divide(const LaurentQT& x, const LaurentQT& d) {
  if (d.is_zero()) return std::nullopt;
  if (x.is_zero()) return LaurentQT{};
  if (auto inv = d.unit_inverse()) return x * *inv;
  // Division with respect to the (q, t) lexicographic order. If d | x the
  // quotient's terms lie between lead(x)/lead(d) and trail(x)/trail(d); a
  // candidate term below that floor means the division is not exact.
  const auto& d_lead = d.terms_.back();
  const Monomial floor{x.terms_.front().first.q_exp - d.terms_.front().first.q_exp,
                       x.terms_.front().first.t_exp - d.terms_.front().first.t_exp};
  // Per-variable degree windows keep the candidate set finite.
  auto t_range = [](const LaurentQT& p) {
    int lo = p.terms_.front().first.t_exp, hi = lo;
    for (const auto& term : p.terms_) {
      lo = std::min(lo, term.first.t_exp);
      hi = std::max(hi, term.first.t_exp);
    }
    return std::pair{lo, hi};
  };
  const auto [xt_lo, xt_hi] = t_range(x);
  const auto [dt_lo, dt_hi] = t_range(d);
  const int q_hi = x.terms_.back().first.q_exp - d_lead.first.q_exp;
  LaurentQT rem = x;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const auto& r_lead = rem.terms_.back();
    Monomial m{r_lead.first.q_exp - d_lead.first.q_exp,
               r_lead.first.t_exp - d_lead.first.t_exp};
    if (m < floor || m.q_exp > q_hi || m.t_exp < xt_lo - dt_lo ||
        m.t_exp > xt_hi - dt_hi)
      return std::nullopt;
    Rational c = r_lead.second / d_lead.second;
    LaurentQT step = monomial(c, m.q_exp, m.t_exp);
    rem -= step * d;
    quot.emplace_back(m, std::move(c));
  }
  return from_terms(std::move(quot));
}

std::string LaurentQT::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool bare = (m.q_exp == 0 && m.t_exp == 0);
    if (a != 1 || bare) {
      os << a.get_str();
      if (!bare) os << "*";
    }
    bool need_star = false;
    if (m.q_exp != 0) {
      os << "q";
      if (m.q_exp != 1) os << "^" << m.q_exp;
      need_star = true;
    }
    if (m.t_exp != 0) {
      if (need_star) os << "*";
      os << "t";
      if (m.t_exp != 1) os << "^" << m.t_exp;
    }
  }
  return os.str();
}

}  // namespace pureartin
