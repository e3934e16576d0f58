#include <gtest/gtest.h>

#include "generators.hpp"
#include "pureartin/coxeter.hpp"
#include "pureartin/errors.hpp"

using namespace pureartin;

namespace {

const char* const kAllTypes[] = {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "D4", "D5", "D6",
                                 "E6", "E7", "E8", "F4", "H3", "H4", "I2(5)", "G2", "I2(9)"};

ArtinWord word(const char* type, std::vector<Letter> letters) {
  return ArtinWord(TypeId::parse(type), std::move(letters));
}

ArtinWord random_word(gen::Rng& rng, TypeId type, int max_len) {
  std::vector<Letter> ls;
  for (auto n = rng.range(0, max_len); n > 0; --n)
    ls.push_back({static_cast<int>(rng.range(1, type.rank())), rng.coin() ? 1 : -1});
  return ArtinWord(type, ls);
}

}  // namespace

TEST(TypeId, ParseAndRanges) {
  EXPECT_EQ(TypeId::parse("G2"), TypeId::make(Family::I2, 6));
  EXPECT_EQ(TypeId::parse("I2(7)").name(), "I2(7)");
  EXPECT_EQ(TypeId::parse("E8").rank(), 8);
  for (const char* bad : {"A0", "B1", "D3", "E9", "F5", "H2", "I2(4)", "X3", "", "A", "C3"})
    EXPECT_THROW(TypeId::parse(bad), InvalidInput) << bad;
}

TEST(TypeId, CoxeterMatrixIsBourbaki) {
  auto e8 = TypeId::parse("E8");
  EXPECT_EQ(e8.coxeter_entry(1, 3), 3);
  EXPECT_EQ(e8.coxeter_entry(2, 4), 3);
  EXPECT_EQ(e8.coxeter_entry(1, 2), 2);
  EXPECT_EQ(TypeId::parse("B4").coxeter_entry(3, 4), 4);
  EXPECT_EQ(TypeId::parse("F4").coxeter_entry(2, 3), 4);
  EXPECT_EQ(TypeId::parse("H3").coxeter_entry(1, 2), 5);
  EXPECT_EQ(TypeId::parse("H4").coxeter_entry(3, 4), 3);
  auto d6 = TypeId::parse("D6");
  EXPECT_EQ(d6.coxeter_entry(4, 5), 3);
  EXPECT_EQ(d6.coxeter_entry(4, 6), 3);
  EXPECT_EQ(d6.coxeter_entry(5, 6), 2);
}

TEST(RootSystem, ReflectionCounts) {
  const std::pair<const char*, std::size_t> expected[] = {
      {"A1", 1}, {"A3", 6},  {"D6", 30}, {"E8", 120}, {"H3", 15},     {"H4", 60},
      {"F4", 24}, {"B3", 9}, {"E6", 36}, {"E7", 63},  {"I2(7)", 7}, {"G2", 6}};
  for (const auto& [name, n] : expected) {
    auto type = TypeId::parse(name);
    EXPECT_EQ(root_system(type)->size(), n) << name;
    EXPECT_EQ(type.reflection_count(), n) << name;
  }
}

TEST(RootSystem, SimpleRootsFirstAndHeightOrdered) {
  auto rs = root_system(TypeId::parse("D5"));
  for (int i = 1; i <= 5; ++i) {
    const auto& c = rs->coordinates()[static_cast<std::size_t>(i - 1)];
    for (int j = 0; j < 5; ++j) EXPECT_EQ(c[static_cast<std::size_t>(j)].is_one(), j == i - 1);
  }
}

TEST(RootSystem, SimpleReflectionsPermuteSignedRoots) {
  for (const char* name : kAllTypes) {
    auto rs = root_system(TypeId::parse(name));
    const auto n = static_cast<std::uint32_t>(rs->size());
    for (int g = 1; g <= rs->rank(); ++g) {
      std::vector<bool> hit(2 * n, false);
      for (std::uint32_t r = 0; r < 2 * n; ++r) hit[rs->reflect(g, r)] = true;
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) << name;
      EXPECT_EQ(rs->reflect(g, static_cast<std::uint32_t>(g - 1)), n + static_cast<std::uint32_t>(g - 1));
    }
  }
}

TEST(WordToW, Examples) {
  auto a2 = root_system(TypeId::parse("A2"));
  for (const char* name : kAllTypes) {
    auto rs = root_system(TypeId::parse(name));
    EXPECT_TRUE(rs->word_to_w(word(name, {{1, 1}, {1, -1}})).is_identity());
  }
  EXPECT_EQ(a2->word_to_w(word("A2", {{1, 1}, {2, 1}, {1, 1}})),
            a2->word_to_w(word("A2", {{2, 1}, {1, 1}, {2, 1}})));
  EXPECT_EQ(a2->word_to_w(word("A2", {{1, 1}, {2, 1}})).order(), 3u);
  EXPECT_THROW(a2->word_to_w(word("A3", {{3, 1}})), InvalidInput);
  EXPECT_THROW(word("A2", {{3, 1}}), InvalidInput);
  EXPECT_THROW(word("A2", {{0, 1}}), InvalidInput);
}

TEST(IsPure, Examples) {
  for (const char* name : kAllTypes)
    EXPECT_TRUE(root_system(TypeId::parse(name))->is_pure(word(name, {{1, 1}, {1, 1}})));
  auto a2 = root_system(TypeId::parse("A2"));
  EXPECT_FALSE(a2->is_pure(word("A2", {{1, 1}, {2, 1}})));
  auto a = ArtinWord::power(TypeId::parse("A2"), 1, 2), b = ArtinWord::power(TypeId::parse("A2"), 2, 2);
  EXPECT_TRUE(a2->is_pure(commutator(a, b)));
  EXPECT_EQ(commutator(a, b).to_string(), "1 1 2 2 -1 -1 -2 -2");
}

TEST(ConjPerm, A2Examples) {
  auto rs = root_system(TypeId::parse("A2"));
  // canonical order: α1, α2, α1+α2
  const auto s1 = rs->conj_perm(rs->simple(1));
  EXPECT_EQ(s1, (std::vector<std::size_t>{0, 2, 1}));
  const auto c = rs->conj_perm(rs->simple(1) * rs->simple(2));
  for (std::size_t p = 0; p < 3; ++p) EXPECT_NE(c[p], p);
  EXPECT_EQ(rs->conj_perm(rs->identity()), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(rs->conj_matrix(rs->identity()), MatrixQ::identity(3, QuadElem(2, 1)));
}

TEST(BraidOrder, Examples) {
  auto a2 = root_system(TypeId::parse("A2"));
  EXPECT_TRUE(braid_order_holds_W(a2->simple(1), a2->simple(2), 3));
  EXPECT_FALSE(braid_order_holds_W(a2->simple(1), a2->simple(2), 2));
  auto d6 = root_system(TypeId::parse("D6"));
  auto a = d6->simple(3) * d6->simple(5), b = d6->simple(2) * d6->simple(4);
  EXPECT_TRUE(braid_order_holds_W(a, b, 5));
  EXPECT_FALSE(braid_order_holds_W(a, b, 3));
}

TEST(CoxeterNumber, Examples) {
  EXPECT_EQ(TypeId::parse("A4").coxeter_number(), 5);
  for (int m = 2; m <= 12; ++m) EXPECT_EQ(TypeId::make(Family::A, m - 1).coxeter_number(), m);
  EXPECT_EQ(TypeId::parse("E8").coxeter_number(), 30);
  EXPECT_EQ(TypeId::parse("H3").coxeter_number(), 10);
  for (const char* name : kAllTypes) {
    auto t = TypeId::parse(name);
    EXPECT_EQ(t.coxeter_number() * t.rank(), 2 * static_cast<int>(t.reflection_count())) << name;
  }
}

TEST(EnumerateGroup, Sizes) {
  EXPECT_EQ(enumerate_group(TypeId::parse("A2"), 100).size(), 6u);
  EXPECT_EQ(enumerate_group(TypeId::parse("H3"), 1000).size(), 120u);
  EXPECT_EQ(enumerate_group(TypeId::parse("H4"), 20000).size(), 14400u);
  EXPECT_EQ(enumerate_group(TypeId::parse("F4"), 2000).size(), 1152u);
  try {
    enumerate_group(TypeId::parse("E8"), 100000);
    FAIL() << "E8 enumeration should be refused";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("696729600"), std::string::npos);
  }
}

TEST(CoxeterProperty, GeneratorsAreInvolutionsAndRelationsHold) {
  for (const char* name : kAllTypes) {
    auto type = TypeId::parse(name);
    auto rs = root_system(type);
    for (int i = 1; i <= type.rank(); ++i) {
      EXPECT_TRUE((rs->simple(i) * rs->simple(i)).is_identity()) << name;
      for (int j = i + 1; j <= type.rank(); ++j) {
        const int m = type.coxeter_entry(i, j);
        EXPECT_TRUE(braid_order_holds_W(rs->simple(i), rs->simple(j), m)) << name;
        EXPECT_EQ((rs->simple(i) * rs->simple(j)).order(), static_cast<std::size_t>(m)) << name;
      }
    }
  }
}

TEST(CoxeterProperty, BraidRewriteInvariance) {
  gen::Rng rng(31);
  for (const char* name : {"A3", "B3", "D4", "F4", "H3", "I2(7)"}) {
    auto type = TypeId::parse(name);
    auto rs = root_system(type);
    for (int n = 0; n < 200; ++n) {
      const ArtinWord u = random_word(rng, type, 8), v = random_word(rng, type, 8);
      const int i = static_cast<int>(rng.range(1, type.rank()));
      int j = static_cast<int>(rng.range(1, type.rank() - 1));
      if (j >= i) ++j;
      const int m = type.coxeter_entry(i, j);
      std::vector<Letter> lhs, rhs;
      for (int k = 0; k < m; ++k) {
        lhs.push_back({k % 2 ? j : i, 1});
        rhs.push_back({k % 2 ? i : j, 1});
      }
      EXPECT_EQ(rs->word_to_w(u * ArtinWord(type, lhs) * v),
                rs->word_to_w(u * ArtinWord(type, rhs) * v));
    }
  }
}

TEST(CoxeterProperty, HomomorphismAndPureWordsActTrivially) {
  gen::Rng rng(32);
  for (const char* name : {"A4", "B3", "D5", "E6", "H4", "G2"}) {
    auto type = TypeId::parse(name);
    auto rs = root_system(type);
    const auto identity = rs->conj_perm(rs->identity());
    for (int n = 0; n < 200; ++n) {
      const ArtinWord u = random_word(rng, type, 10), v = random_word(rng, type, 10);
      EXPECT_EQ(rs->word_to_w(u * v), rs->word_to_w(u) * rs->word_to_w(v));
      const int g = static_cast<int>(rng.range(1, type.rank()));
      const ArtinWord p = u * ArtinWord::power(type, g, 2) * u.inverse();
      EXPECT_TRUE(rs->is_pure(p));
      EXPECT_EQ(rs->conj_perm(rs->word_to_w(p)), identity);
      const auto x = rs->word_to_w(u), y = rs->word_to_w(v);
      const auto px = rs->conj_perm(x), py = rs->conj_perm(y), pxy = rs->conj_perm(x * y);
      for (std::size_t k = 0; k < px.size(); ++k) EXPECT_EQ(pxy[k], px[py[k]]);
    }
  }
}
