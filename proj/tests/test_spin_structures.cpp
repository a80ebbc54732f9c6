#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "spinverlinde/errors.hpp"
#include "spinverlinde/spin_structures.hpp"

using namespace spinverlinde;
using f2::SymplecticSpace;
using spin::ArfInvariant;
using spin::QuadraticRefinement;
using spin::Sign;

namespace {
const Sign kPlus = Sign::from_parity(0);
const Sign kMinus = Sign::from_parity(1);
}  // namespace

TEST(SpinEvaluate, Examples) {
  const SymplecticSpace s(1);
  const QuadraticRefinement q00(s, {0, 0});
  EXPECT_EQ(spin::evaluate(q00, s.a(0) + s.b(0)), 1);
  EXPECT_EQ(spin::evaluate(q00, s.zero()), 0);
  const QuadraticRefinement q11(s, {1, 1});
  EXPECT_EQ(spin::evaluate(q11, s.a(0) + s.b(0)), 1);
  EXPECT_EQ(spin::evaluate(q11, s.zero()), 0);
}

TEST(SpinEvaluate, MatchesIncrementalOracle) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    for (const auto& q : spin::enumerate_refinements(s)) {
      const auto basis = q.basis_values().coordinates();
      for (const auto& v : f2::enumerate_vectors(s)) {
        ASSERT_EQ(spin::evaluate(q, v), oracle::refinement_value(basis, v.coordinates()));
      }
    }
  }
}

TEST(SpinEvaluate, RefinementLawExhaustive) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    for (const auto& q : spin::enumerate_refinements(s)) {
      for (const auto& v : all)
        for (const auto& w : all)
          ASSERT_EQ(spin::evaluate(q, v + w),
                    spin::evaluate(q, v) ^ spin::evaluate(q, w) ^ f2::pair(s, v, w));
    }
  }
}

TEST(SpinShift, Examples) {
  const SymplecticSpace s(1);
  const QuadraticRefinement q(s, {0, 0});
  EXPECT_EQ(spin::shift(q, s.zero()), q);
  EXPECT_EQ(spin::shift(q, s.a(0)), QuadraticRefinement(s, {0, 1}));
  EXPECT_EQ(spin::shift(spin::shift(q, s.a(0)), s.a(0)), q);
}

TEST(SpinShift, DefinitionAndInvolution) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    for (const auto& q : spin::enumerate_refinements(s)) {
      for (const auto& l : all) {
        const auto moved = spin::shift(q, l);
        ASSERT_EQ(spin::shift(moved, l), q);
        for (const auto& v : all) ASSERT_EQ(spin::evaluate(moved, v), spin::evaluate(q, v) ^ f2::pair(s, l, v));
      }
    }
  }
}

TEST(SpinShift, FreeTransitiveAction) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    const auto origin = QuadraticRefinement::trivial(s);
    std::set<std::uint64_t> reached;
    for (const auto& l : f2::enumerate_vectors(s)) reached.insert(spin::shift(origin, l).basis_values().bits());
    EXPECT_EQ(static_cast<std::int64_t>(reached.size()), s.size());
  }
}

TEST(SpinArf, Examples) {
  const SymplecticSpace s1(1);
  EXPECT_EQ(spin::arf(QuadraticRefinement(s1, {0, 0})), ArfInvariant(0));
  EXPECT_EQ(spin::arf(QuadraticRefinement(s1, {1, 1})), ArfInvariant(1));
  const SymplecticSpace s2(2);
  const QuadraticRefinement all_ones(s2, {1, 1, 1, 1});
  EXPECT_EQ(spin::arf(all_ones), ArfInvariant(0));
  int zeros = 0;
  for (const auto& v : f2::enumerate_vectors(s2)) zeros += spin::evaluate(all_ones, v) == 0;
  EXPECT_EQ(zeros, 10);
}

TEST(SpinArf, ClosedFormMatchesCountingAndOracle) {
  for (int g = 1; g <= 4; ++g) {
    for (const auto& q : spin::enumerate_refinements(SymplecticSpace(g))) {
      const auto closed = spin::arf(q);
      ASSERT_EQ(closed, spin::arf_by_counting(q));
      ASSERT_EQ(closed.value(), oracle::arf_by_zeros(q.basis_values().coordinates()));
    }
  }
}

TEST(SpinArf, InvalidValue) { EXPECT_THROW(ArfInvariant(2), std::invalid_argument); }

TEST(SpinArf, ShiftChangesArfByQuadraticForm) {
  // Z -> Arf(sigma + Z) - Arf(sigma) refines the pairing (it equals sigma(Z)).
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    const auto all = f2::enumerate_vectors(s);
    for (const auto& q : spin::enumerate_refinements(s)) {
      auto delta = [&](const f2::F2Vector& z) { return spin::arf(spin::shift(q, z)).value() ^ spin::arf(q).value(); };
      ASSERT_EQ(delta(s.zero()), 0);
      for (const auto& v : all)
        for (const auto& w : all) ASSERT_EQ(delta(v + w), delta(v) ^ delta(w) ^ f2::pair(s, v, w));
    }
  }
}

TEST(SpinCounts, ClosedForm) {
  EXPECT_EQ(spin::count_by_arf(1), (spin::ArfCounts{3, 1}));
  EXPECT_EQ(spin::count_by_arf(2), (spin::ArfCounts{10, 6}));
  EXPECT_EQ(spin::count_by_arf(3), (spin::ArfCounts{36, 28}));
  EXPECT_EQ(spin::count_by_arf(4), (spin::ArfCounts{136, 120}));
  for (int g = 1; g <= 20; ++g) {
    const auto c = spin::count_by_arf(g);
    EXPECT_EQ(c.even + c.odd, std::int64_t{1} << (2 * g));
  }
}

TEST(SpinCounts, EnumerationAgrees) {
  for (int g = 1; g <= 4; ++g) {
    EXPECT_EQ(spin::count_by_arf_enumerated(g), spin::count_by_arf(g));
    EXPECT_EQ(spin::arf_gauss_sum_enumerated(g), spin::arf_gauss_sum(g));
  }
  EXPECT_EQ(spin::arf_gauss_sum(1), 2);
  EXPECT_EQ(spin::arf_gauss_sum(2), 4);
  EXPECT_EQ(spin::arf_gauss_sum(3), 8);
  EXPECT_THROW(spin::count_by_arf_enumerated(7), CapExceeded);
}

TEST(SpinSigns, Q3Sign) {
  EXPECT_EQ(spin::q3_sign(0), kPlus);
  EXPECT_EQ(spin::q3_sign(1), kMinus);
  EXPECT_EQ(spin::q3_sign(0).value(), 1);
  EXPECT_EQ(spin::q3_sign(1).value(), -1);
  EXPECT_THROW(spin::q3_sign(3), std::invalid_argument);
}

TEST(SpinSigns, LiftSignExamples) {
  const SymplecticSpace s(1);
  const QuadraticRefinement sigma(s, {0, 0});
  const auto z = s.a(0) + s.b(0);
  EXPECT_EQ(spin::lift_sign(sigma, s.zero(), 0, 1), kPlus);
  EXPECT_EQ(spin::lift_sign(sigma, z, 0, 1), kMinus);
  EXPECT_EQ(spin::lift_sign(sigma, z, 1, 1), kPlus);
  EXPECT_EQ(spin::lift_sign(sigma, s.zero(), 1, 0), kMinus);
}

TEST(SpinSigns, LiftSignSumOverZ) {
  for (int g = 1; g <= 3; ++g) {
    const SymplecticSpace s(g);
    for (const auto& sigma : spin::enumerate_refinements(s)) {
      for (int w2_bundle : {0, 1}) {
        std::int64_t total = 0;
        for (const auto& z : f2::enumerate_vectors(s)) total += spin::lift_sign(sigma, z, w2_bundle, 1).value();
        const int sign = ((w2_bundle + spin::arf(sigma).value()) % 2) ? -1 : 1;
        ASSERT_EQ(total, sign * (std::int64_t{1} << g));
      }
    }
  }
}
