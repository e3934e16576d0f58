#include "pureartin/quad.hpp"

#include "pureartin/errors.hpp"

namespace pureartin {

QuadElem::QuadElem(int disc) : QuadElem(disc, Rational(0), Rational(0)) {}

QuadElem::QuadElem(int disc, Rational a, Rational b)
    : disc_(disc), a_(std::move(a)), b_(std::move(b)) {
  if (disc_ != 2 && disc_ != 5)
    throw InvalidInput("quadratic field discriminant must be 2 or 5, got " +
                       std::to_string(disc_));
}

void QuadElem::check_same(const QuadElem& o) const {
  if (disc_ != o.disc_)
    throw InvalidInput("mixed discriminants: Q(sqrt " + std::to_string(disc_) +
                       ") and Q(sqrt " + std::to_string(o.disc_) + ")");
}

int QuadElem::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b√d have opposite signs: compare a² with d·b².
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * disc_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // a² = d·b² has no solution with a, b ≠ 0
  return c > 0 ? sa : sb;
}

QuadElem QuadElem::operator-() const { return QuadElem(disc_, -a_, -b_); }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_same(o);
  if (sgn(o.b_) == 0) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + b_ * o.b_ * disc_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator*=(const Rational& r) {
  a_ *= r;
  b_ *= r;
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero in Q(sqrt d)");
  const Rational norm = a_ * a_ - b_ * b_ * disc_;
  return QuadElem(disc_, a_ / norm, -b_ / norm);
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  x.check_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadElem::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string rad = "sqrt" + std::to_string(disc_);
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? " + " : " - ");
  else if (sgn(b_) < 0) out = "-";
  Rational ab = abs(b_);
  if (ab != 1) out += ab.get_str() + "*";
  return out + rad;
}

std::strong_ordering compare_real(const QuadElem& x, const QuadElem& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool QuadStructuralLess::operator()(const QuadElem& x, const QuadElem& y) const {
  if (x.disc() != y.disc()) return x.disc() < y.disc();
  if (int c = cmp(x.rational_part(), y.rational_part()); c != 0) return c < 0;
  return cmp(x.radical_part(), y.radical_part()) < 0;
}

}  // namespace pureartin
