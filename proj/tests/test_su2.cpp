#include <cmath>

#include <gtest/gtest.h>

#include "phasedyn/error.hpp"
#include "phasedyn/su2.hpp"
#include "support.hpp"

using namespace phasedyn;
using namespace phasedyn::testing;

TEST(Spin, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Spin::parse("5/2").twice(), 5);
  EXPECT_EQ(Spin::parse("2.5").twice(), 5);
  EXPECT_EQ(Spin::parse("3").twice(), 6);
  EXPECT_EQ(Spin::parse("1/2").dim(), 2);
  EXPECT_EQ(Spin::parse("4/2").twice(), 4);
  EXPECT_EQ(Spin::from_twice(3).str(), "3/2");
  EXPECT_EQ(Spin::from_twice(4).str(), "2");
}

TEST(Spin, RejectsBadInput) {
  for (const char* bad : {"0.4", "0", "-1", "1/3", "abc", "1/0", "", "2.25", "1/2x"}) {
    EXPECT_THROW(Spin::parse(bad), Error) << bad;
  }
  EXPECT_THROW(Spin::from_value(0.75), Error);
  EXPECT_THROW(Spin::from_twice(0), Error);
}

TEST(Spin, ParseRoundTrip) {
  for (int t = 1; t <= 40; ++t) {
    const auto s = Spin::from_twice(t);
    EXPECT_EQ(Spin::parse(s.str()), s);
    EXPECT_EQ(Spin::from_value(s.value()), s);
  }
}

TEST(Su2, SpinHalfMatrices) {
  const auto rep = build_su2(Spin::from_twice(1));
  Operator::Matrix jp(2, 2);
  jp << 0, 0, 1, 0;
  EXPECT_EQ(residual(rep.Jp, Operator(jp)), 0.0);
  EXPECT_EQ(rep.J0(0, 0), cplx(-0.5));
  EXPECT_EQ(rep.J0(1, 1), cplx(0.5));
  EXPECT_EQ(residual(rep.Jm, rep.Jp.adjoint()), 0.0);
}

TEST(Su2, SpinOneElements) {
  const auto rep = build_su2(Spin::from_twice(2));
  EXPECT_DOUBLE_EQ(rep.Jp(1, 0).real(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(rep.Jp(2, 1).real(), std::sqrt(2.0));
  EXPECT_EQ(rep.Jp(2, 0), cplx(0.0));
}

TEST(Su2, CasimirScalars) {
  const auto half = casimir(build_su2(Spin::from_twice(1)));
  EXPECT_OP_NEAR(half, cplx(0.75) * Operator::identity(2), 1e-15);
  const auto one = casimir(build_su2(Spin::from_twice(2)));
  EXPECT_OP_NEAR(one, cplx(2.0) * Operator::identity(3), 1e-14);
}

// Element formula <m+1|J+|m> = sqrt((j-m)(j+m+1)) checked against an
// independent evaluation of sqrt(j(j+1) - m(m+1)).
TEST(Su2Property, ElementsMatchAlternativeForm) {
  for (const auto j : spins_up_to(25)) {
    const auto rep = build_su2(j);
    const double c = j.casimir_value();
    for (Index i = 0; i + 1 < rep.dim(); ++i) {
      const double m = j.m(i);
      EXPECT_NEAR(rep.Jp(i + 1, i).real(), std::sqrt(c - m * (m + 1.0)), 1e-13);
    }
  }
}

TEST(Su2Property, AlgebraAndCasimirEveryJ) {
  for (const auto j : spins_up_to(25)) {
    const auto rep = build_su2(j);
    const double t = tol_for(rep.dim());
    EXPECT_LT(residual(commutator(rep.J0, rep.Jp), rep.Jp), t);
    EXPECT_LT(residual(commutator(rep.J0, rep.Jm), -rep.Jm), t);
    EXPECT_LT(residual(commutator(rep.Jp, rep.Jm), cplx(2.0) * rep.J0), t);
    const auto id = Operator::identity(rep.dim());
    const auto c1 = rep.Jm * rep.Jp + rep.J0 * (rep.J0 + id);
    const auto c2 = rep.Jp * rep.Jm + rep.J0 * (rep.J0 - id);
    EXPECT_LT(residual(c1, cplx(j.casimir_value()) * id), t);
    EXPECT_LT(residual(c2, cplx(j.casimir_value()) * id), t);
    EXPECT_NO_THROW(casimir(rep, Tolerance(1e-12)));
  }
}

TEST(Su2Property, LadderActsOnWeights) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto rep = build_su2(random_spin(25));
    // J+ annihilates the top state and J- the bottom one.
    EXPECT_EQ(rep.Jp.matrix().col(rep.dim() - 1).norm(), 0.0);
    EXPECT_EQ(rep.Jm.matrix().col(0).norm(), 0.0);
  }
}
