#include <gtest/gtest.h>

#include <type_traits>

#include "spinverlinde/errors.hpp"
#include "spinverlinde/levels.hpp"

using namespace spinverlinde;
using namespace spinverlinde::levels;

namespace {
template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };
}  // namespace

TEST(Levels, LatticeConstraints) {
  EXPECT_THROW(BmLevel(12), LevelError);
  EXPECT_THROW(BmLevel(0), LevelError);
  EXPECT_THROW(BhmvLevel(0), LevelError);
  EXPECT_NO_THROW(So3Level(-3));
  EXPECT_EQ(BmLevel(16).value(), 16);
}

TEST(Levels, CrossLatticeArithmeticDoesNotCompile) {
  static_assert(Addable<So3Level, So3Level>);
  static_assert(Addable<Su2Level, Su2Level>);
  static_assert(!Addable<So3Level, Su2Level>);
  static_assert(!Addable<BhmvLevel, BhmvLevel>);
  static_assert(!std::is_convertible_v<So3Level, Su2Level>);
  static_assert(!std::is_convertible_v<long long, BmLevel>);
  SUCCEED();
}

TEST(Levels, BetaPullback) {
  EXPECT_EQ(beta_pullback(So3Level(1)), Su2Level(2));
  EXPECT_EQ(beta_pullback(So3Level(0)), Su2Level(0));
  for (int m = 1; m <= 10; ++m) EXPECT_EQ(beta_pullback(So3Level(2 * m - 1)), Su2Level(4 * m - 2));
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      EXPECT_EQ(beta_pullback(So3Level(a) + So3Level(b)), beta_pullback(So3Level(a)) + beta_pullback(So3Level(b)));
}

TEST(Levels, BhmvFromSu2) {
  EXPECT_EQ(bhmv_from_su2(Su2Level(1)), BhmvLevel(6));
  EXPECT_EQ(bhmv_from_su2(Su2Level(2)), BhmvLevel(8));
  EXPECT_EQ(bhmv_from_su2(su2_from_bhmv(BhmvLevel(16))), BhmvLevel(16));
  EXPECT_EQ(su2_from_bhmv(BhmvLevel(16)), Su2Level(6));
  EXPECT_THROW(su2_from_bhmv(BhmvLevel(7)), LevelError);
  EXPECT_THROW(bhmv_from_su2(Su2Level(-1)), LevelError);
  for (int k = 0; k <= 200; ++k) EXPECT_EQ(su2_from_bhmv(bhmv_from_su2(Su2Level(k))), Su2Level(k));
}

TEST(Levels, BmFromSo3) {
  EXPECT_EQ(bm_from_so3(So3Level(1)), BmLevel(8));
  EXPECT_EQ(bm_from_so3(So3Level(3)), BmLevel(16));
  EXPECT_THROW(bm_from_so3(So3Level(2)), LevelError);
  EXPECT_THROW(bm_from_so3(So3Level(-1)), LevelError);
  for (int k = 1; k <= 99; k += 2) {
    const So3Level so3(k);
    EXPECT_EQ(bm_from_so3(so3).value(), bhmv_from_su2(beta_pullback(so3)).value());
    EXPECT_EQ(so3_from_bm(bm_from_so3(so3)), so3);
  }
}

TEST(Levels, MetaplecticShift) {
  EXPECT_EQ(metaplectic_shift(So3Level(2)), So3Level(3));
  EXPECT_EQ(metaplectic_shift(Su2Level(4)), Su2Level(6));
  for (int k = -4; k <= 20; ++k) {
    EXPECT_EQ(beta_pullback(metaplectic_shift(So3Level(k))).value(), 2 * k + 2);
    EXPECT_EQ(metaplectic_shift(beta_pullback(So3Level(k))).value(), 2 * k + 2);
  }
  EXPECT_EQ(value_of(metaplectic_shift(LevelValue(So3Level(2)))), 3);
  EXPECT_EQ(lattice_of(metaplectic_shift(LevelValue(Su2Level(4)))), Lattice::su2);
  EXPECT_THROW(metaplectic_shift(LevelValue(BmLevel(8))), LevelError);
  EXPECT_THROW(metaplectic_shift(make_level(Lattice::bhmv, 6)), LevelError);
}

TEST(Levels, GradingParity) {
  EXPECT_EQ(grading_parity(0), Parity::even);
  EXPECT_EQ(grading_parity(1), Parity::odd);
  EXPECT_THROW(grading_parity(2), std::invalid_argument);
}

TEST(Levels, CorrespondenceTableVerbatim) {
  const auto table = correspondence_table();
  ASSERT_EQ(table.columns.size(), 4U);
  EXPECT_EQ(table.columns[0], (CorrespondenceColumn{0, 2, 1, std::string("spin structure")}));
  EXPECT_EQ(table.columns[1], (CorrespondenceColumn{4, 0, 0, std::string("Z/2-bundle")}));
  EXPECT_EQ(table.columns[2], (CorrespondenceColumn{2, 1, std::nullopt, std::nullopt}));
  EXPECT_EQ(table.columns[3], (CorrespondenceColumn{6, 3, std::nullopt, std::nullopt}));
}

TEST(Levels, CorrespondenceTableValidation) {
  const auto table = correspondence_table();
  ASSERT_EQ(table.findings.size(), 4U);
  EXPECT_TRUE(table.findings[0].consistent);
  EXPECT_TRUE(table.findings[1].consistent);
  // p = 2(k+2) sends k = 1 mod 4 to 6 mod 8 and k = 3 mod 4 to 2 mod 8, so
  // the bare residue columns appear with their BHMV entries exchanged.
  EXPECT_FALSE(table.findings[2].consistent);
  EXPECT_FALSE(table.findings[3].consistent);

  auto tampered = table.columns;
  tampered[0].bhmv_mod8 = 4;
  EXPECT_FALSE(validate_columns(tampered)[0].consistent);
  tampered = table.columns;
  tampered[1].so3_mod2 = 1;
  EXPECT_FALSE(validate_columns(tampered)[1].consistent);
}

TEST(Levels, ResidueArithmetic) {
  for (int k = 0; k < 400; ++k) {
    const long long p = bhmv_from_su2(Su2Level(k)).value();
    if (k % 4 == 2) EXPECT_EQ(p % 8, 0);
    if (k % 4 == 0) EXPECT_EQ(p % 8, 4);
  }
}
