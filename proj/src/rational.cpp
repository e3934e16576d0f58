#include "pureartin/rational.hpp"

#include "pureartin/errors.hpp"

namespace pureartin {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r{num, den};
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pureartin
