#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pureartin {

/// Arbitrary precision rational; mpq_class keeps the value canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidInput on den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const mpz_class& num, const mpz_class& den);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

std::string to_string(const Rational& r);

}  // namespace pureartin
