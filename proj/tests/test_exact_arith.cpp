#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "pureartin/errors.hpp"
#include "pureartin/matrices.hpp"

using namespace pureartin;

namespace {

QuadElem q2(std::int64_t a, std::int64_t b = 0, std::int64_t den = 1) {
  return QuadElem(2, make_rational(a, den), make_rational(b, den));
}

HSeries series(std::vector<QuadElem> c) { return HSeries::from_coeffs(std::move(c)); }

MatrixH single(const HSeries& s) {
  MatrixH m(1, 1);
  m.set(0, 0, s);
  return m;
}

LaurentQT mono(std::int64_t c, int eq, int et) { return LaurentQT::monomial(make_rational(c, 1), eq, et); }

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(make_rational(2, -4), make_rational(-1, 2));
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_EQ(make_rational(0, -3).get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), InvalidInput);
}

TEST(QuadElem, ConjugateProduct) {
  EXPECT_EQ(q2(1, 1) * q2(1, -1), q2(-1));
  EXPECT_EQ(q2(1, 1) * q2(1, 1).inverse(), q2(1));
  EXPECT_THROW(q2(0).inverse(), NotInvertible);
}

TEST(QuadElem, MixedDiscriminantsRejected) {
  QuadElem a(2, 1, 1), b(5, 1, 1);
  EXPECT_THROW(a + b, InvalidInput);
  EXPECT_THROW(a * b, InvalidInput);
  EXPECT_THROW((void)(a == b), InvalidInput);
  EXPECT_THROW(QuadElem(3, 1, 1), InvalidInput);
}

TEST(QuadElem, RealSign) {
  EXPECT_EQ(q2(3, -2).sign(), 1);  // 3 > 2√2
  EXPECT_EQ(q2(2, -2).sign(), -1);
  EXPECT_EQ(QuadElem(5, make_rational(-1, 2), make_rational(1, 2)).sign(), 1);
}

TEST(Laurent, Distributivity) {
  const LaurentQT q = LaurentQT::q();
  EXPECT_EQ((q - LaurentQT(1)) * mono(1, -1, 0), LaurentQT(1) - mono(1, -1, 0));
  EXPECT_TRUE((q - q).is_zero());
  EXPECT_EQ((q + LaurentQT::t()).eval_at_one(), 2);
}

TEST(Laurent, UnitInverse) {
  auto inv = mono(-1, 3, 1).unit_inverse();
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, mono(-1, -3, -1));
  EXPECT_FALSE((LaurentQT::q() + LaurentQT(1)).unit_inverse());
}

TEST(Laurent, ExactDivide) {
  const LaurentQT a = LaurentQT::q() + LaurentQT::t();
  const LaurentQT b = LaurentQT::q() - mono(2, 0, 2) + mono(1, -1, 0);
  auto quotient = LaurentQT::exact_divide(a * b, a);
  ASSERT_TRUE(quotient);
  EXPECT_EQ(*quotient, b);
  EXPECT_FALSE(LaurentQT::exact_divide(a, LaurentQT::q() + LaurentQT(1)));
}

TEST(HSeries, Truncation) {
  const HSeries one_h2 = series({q2(1), q2(1), q2(0)});
  EXPECT_EQ(one_h2 * one_h2, series({q2(1), q2(2), q2(1)}));
  const HSeries one_h1 = series({q2(1), q2(1)});
  EXPECT_EQ(one_h1 * one_h1, series({q2(1), q2(2)}));
  EXPECT_THROW(one_h1 + one_h2, InvalidInput);
}

TEST(Iota, Examples) {
  const LaurentQT q = LaurentQT::q(), t = LaurentQT::t();
  EXPECT_EQ(iota_substitute(q + mono(1, -1, 0), 2), series({q2(2), q2(0), q2(1)}));
  EXPECT_EQ(iota_substitute(t, 3), series({q2(1), q2(0, 1), q2(1), q2(0, 1, 3)}));
  EXPECT_EQ(iota_substitute(q - t, 1), series({q2(0), q2(1, -1)}));
  for (int k : {0, 3, 7})
    EXPECT_EQ(iota_substitute(LaurentQT(make_rational(-5, 3)), k),
              HSeries(k, QuadElem(2, make_rational(-5, 3))));
  EXPECT_THROW(iota_substitute(q, -1), InvalidInput);
}

TEST(ReduceModH, Examples) {
  EXPECT_EQ(reduce_mod_h(identity_h(4, 3)), MatrixQ::identity(4, q2(1)));
  const MatrixQ z = reduce_mod_h(single(series({q2(0), q2(3), q2(0)})));
  EXPECT_EQ(z.nonzeros(), 0u);
}

TEST(HValuation, Examples) {
  for (int k : {0, 2, 8}) {
    auto v = h_valuation(identity_h(3, k));
    EXPECT_TRUE(v.above_order());
    EXPECT_EQ(v.to_string(), "ABOVE_K");
  }
  auto v = h_valuation(single(series({q2(1), q2(2, 1), q2(2)})));
  EXPECT_FALSE(v.above_order());
  EXPECT_EQ(v.value(), 1);

  MatrixH swap(2, 2);
  swap.set(0, 1, HSeries(2, q2(1)));
  swap.set(1, 0, HSeries(2, q2(1)));
  EXPECT_EQ(h_valuation(swap).value(), 0);
}

TEST(InvertExact, Examples) {
  EXPECT_EQ(invert_exact(identity_l(5)), identity_l(5));

  MatrixL m(1, 1);
  m.set(0, 0, mono(-1, 3, 1));
  MatrixL expected(1, 1);
  expected.set(0, 0, mono(-1, -3, -1));
  EXPECT_EQ(invert_exact(m), expected);

  MatrixL singular(2, 2);
  singular.set(0, 0, LaurentQT::q());
  singular.set(0, 1, LaurentQT::q());
  singular.set(1, 0, LaurentQT(1));
  singular.set(1, 1, LaurentQT(1));
  EXPECT_THROW(invert_exact(singular), NotInvertible);

  MatrixL non_unit(1, 1);
  non_unit.set(0, 0, LaurentQT::q() + LaurentQT(1));
  EXPECT_THROW(invert_exact(non_unit), NotInvertible);
}

TEST(InvertTruncated, GeometricSeries) {
  gen::Rng rng(11);
  MatrixQ e(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) e.set(i, j, gen::quad(rng));
  auto lift = [](const MatrixQ& x, int degree) {
    return x.map([&](const QuadElem& c) {
      std::vector<QuadElem> coeffs(3, QuadElem(2));
      coeffs[static_cast<std::size_t>(degree)] = c;
      return HSeries::from_coeffs(coeffs);
    });
  };
  const MatrixH m = identity_h(3, 2) + lift(e, 1);
  const MatrixH expected = identity_h(3, 2) - lift(e, 1) + lift(e * e, 2);
  EXPECT_EQ(invert_truncated(m), expected);
}

TEST(InvertTruncated, PermutationGivesTranspose) {
  MatrixH p(3, 3);
  p.set(0, 1, HSeries(4, q2(1)));
  p.set(1, 2, HSeries(4, q2(1)));
  p.set(2, 0, HSeries(4, q2(1)));
  EXPECT_EQ(invert_truncated(p), p.transpose());

  MatrixH zero_block(2, 2);
  zero_block.set(0, 0, series({q2(0), q2(1)}));
  zero_block.set(1, 1, series({q2(1), q2(0)}));
  EXPECT_THROW(invert_truncated(zero_block), NotInvertible);
}

TEST(Matrices, NonConformable) {
  EXPECT_THROW(identity_l(2) * identity_l(3), InvalidInput);
  EXPECT_THROW(identity_h(2, 1) + identity_h(3, 1), InvalidInput);
}

// ---------------------------------------------------------------- properties

TEST(IotaProperty, RingMorphismUpToTruncation) {
  gen::Rng rng(20240101);
  for (int n = 0; n < 1000; ++n) {
    const LaurentQT a = gen::laurent(rng), b = gen::laurent(rng);
    const int k = static_cast<int>(rng.range(0, 5));
    ASSERT_EQ(iota_substitute(a * b, k), iota_substitute(a, k) * iota_substitute(b, k));
    ASSERT_EQ(iota_substitute(a + b, k), iota_substitute(a, k) + iota_substitute(b, k));
    ASSERT_EQ(iota_substitute(a, k).coeff(0), QuadElem(2, a.eval_at_one()));
  }
}

TEST(IotaProperty, InjectiveOnMonomials) {
  std::set<std::pair<Rational, Rational>> seen;
  for (int eq = -20; eq <= 20; ++eq)
    for (int et = -20; et <= 20; ++et) {
      const HSeries s = iota_substitute(LaurentQT::monomial(1, eq, et), 1);
      seen.emplace(s.coeff(1).rational_part(), s.coeff(1).radical_part());
    }
  EXPECT_EQ(seen.size(), 41u * 41u);
}

TEST(ValuationProperty, ProductIsAtLeastMinimum) {
  gen::Rng rng(7);
  for (int n = 0; n < 300; ++n) {
    const int a = static_cast<int>(rng.range(1, 4)), b = static_cast<int>(rng.range(1, 4));
    const MatrixH x = gen::unipotent(rng, 3, 6, a), y = gen::unipotent(rng, 3, 6, b);
    const auto vx = h_valuation(x), vy = h_valuation(y), vxy = h_valuation(x * y);
    ASSERT_GE(vxy.lower_bound(), std::min(vx.lower_bound(), vy.lower_bound()));
  }
}

TEST(ValuationProperty, CommutatorIsAtLeastSum) {
  gen::Rng rng(8);
  for (int n = 0; n < 300; ++n) {
    const int a = static_cast<int>(rng.range(1, 3)), b = static_cast<int>(rng.range(1, 3));
    const MatrixH x = gen::unipotent(rng, 3, 8, a), y = gen::unipotent(rng, 3, 8, b);
    const MatrixH c = x * y * invert_truncated(x) * invert_truncated(y);
    const auto vx = h_valuation(x).lower_bound(), vy = h_valuation(y).lower_bound();
    ASSERT_GE(h_valuation(c).lower_bound(), std::min(vx + vy, 9));
  }
}

TEST(ValuationProperty, MonotoneUnderRefinement) {
  gen::Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    // I + (q-1)^e X has valuation at least e
    LaurentQT f(1);
    for (auto e = rng.range(0, 4); e > 0; --e) f *= LaurentQT::q() - LaurentQT(1);
    const MatrixL x = gen::laurent_matrix(rng, 3, 0.4);
    const MatrixL m = identity_l(3) + x.map([&](const LaurentQT& c) { return c * f; });
    int previous = 0;
    for (int k = 0; k <= 6; ++k) {
      const int v = h_valuation(iota_substitute(m, k)).lower_bound();
      ASSERT_GE(v, previous);
      previous = v;
    }
  }
}

TEST(IotaProperty, TruncationCoherence) {
  gen::Rng rng(10);
  for (int n = 0; n < 60; ++n) {
    const MatrixL a = gen::laurent_matrix(rng, 3), b = gen::laurent_matrix(rng, 3);
    const MatrixL c = gen::laurent_matrix(rng, 3);
    const MatrixL prod = a * b * c;
    for (int k = 0; k <= 8; ++k)
      ASSERT_EQ(iota_substitute(prod, k),
                iota_substitute(a, k) * iota_substitute(b, k) * iota_substitute(c, k));
  }
}

TEST(InvertExactProperty, RandomUnitriangularProducts) {
  gen::Rng rng(12);
  for (int n = 0; n < 40; ++n) {
    MatrixL lower = identity_l(4), upper = identity_l(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        lower.set(i, j, gen::laurent(rng, 2, 2));
        upper.set(j, i, gen::laurent(rng, 2, 2));
      }
    MatrixL d(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      d.set(i, i, LaurentQT::monomial(rng.coin() ? 1 : -1, static_cast<int>(rng.range(-2, 2)),
                                      static_cast<int>(rng.range(-1, 2))));
    const MatrixL m = lower * d * upper;
    ASSERT_EQ(m * invert_exact(m), identity_l(4));
  }
}
