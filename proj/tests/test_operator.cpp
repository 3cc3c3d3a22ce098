#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "phasedyn/error.hpp"
#include "phasedyn/operator.hpp"
#include "phasedyn/su2.hpp"
#include "support.hpp"

using namespace phasedyn;
using namespace phasedyn::testing;

namespace {

Operator diag(std::vector<double> v) { return Operator::diagonal(std::span<const double>(v)); }

std::string error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

} // namespace

TEST(Commutator, SpinHalfLadders) {
  const auto rep = build_su2(Spin::from_twice(1));
  EXPECT_OP_NEAR(commutator(rep.Jp, rep.Jm), diag({-1, 1}), 1e-15);
}

TEST(Commutator, IdentityCommutesWithEverything) {
  const auto b = random_operator(4);
  EXPECT_EQ(frobenius_norm(commutator(Operator::identity(4), b)), 0.0);
}

TEST(Commutator, J0RaisesAtSpinOne) {
  const auto rep = build_su2(Spin::from_twice(2));
  EXPECT_OP_NEAR(commutator(rep.J0, rep.Jp), rep.Jp, 1e-15);
}

TEST(Commutator, ShapeMismatchThrows) {
  EXPECT_EQ(error_kind([] { commutator(Operator::identity(2), Operator::identity(3)); }), "shape");
}

TEST(RCommutator, ScalarCase) {
  const auto i2 = Operator::identity(2);
  EXPECT_OP_NEAR(r_commutator(i2, i2, 2.0), cplx(1.5) * i2, 1e-15);
}

TEST(RCommutator, ZeroRThrows) {
  EXPECT_EQ(error_kind([] { r_commutator(Operator::identity(2), Operator::identity(2), 0.0); }),
            "parameter");
}

TEST(RCommutator, UnitRIsPlainCommutator) {
  for (int trial = 0; trial < 50; ++trial) {
    const Index d = uniform_int(1, 6);
    const auto a = random_operator(d);
    const auto b = random_operator(d);
    EXPECT_EQ(residual(r_commutator(a, b, 1.0), commutator(a, b)), 0.0);
  }
}

TEST(CommutatorProperty, AntisymmetryAndJacobi) {
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = uniform_int(1, 7);
    const auto a = random_operator(d);
    const auto b = random_operator(d);
    const auto c = random_operator(d);
    EXPECT_LT(frobenius_norm(commutator(a, b) + commutator(b, a)), 1e-13);
    const auto jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
    EXPECT_LT(frobenius_norm(jacobi), 1e-12 * static_cast<double>(d));
  }
}

TEST(CommutatorProperty, LeibnizRule) {
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = uniform_int(1, 6);
    const auto a = random_operator(d);
    const auto b = random_operator(d);
    const auto c = random_operator(d);
    const auto lhs = commutator(a, b * c);
    const auto rhs = commutator(a, b) * c + b * commutator(a, c);
    EXPECT_LT(residual(lhs, rhs), 1e-12 * static_cast<double>(d));
  }
}

TEST(DiagFunction, IdentityOnJ0) {
  const auto rep = build_su2(Spin::from_twice(3));
  EXPECT_EQ(residual(diag_function([](double x) { return cplx(x); }, rep.J0), rep.J0), 0.0);
}

TEST(DiagFunction, QuadraticAtSpinHalf) {
  const auto rep = build_su2(Spin::from_twice(1));
  const auto out = diag_function([](double x) { return cplx(x * (x + 1.0)); }, rep.J0);
  EXPECT_OP_NEAR(out, diag({-0.25, 0.75}), 1e-15);
}

TEST(DiagFunction, ExponentialAtSpinOne) {
  const auto rep = build_su2(Spin::from_twice(2));
  const auto out = diag_function([](double x) { return cplx(std::pow(1.2, -2.0 * x)); }, rep.J0);
  EXPECT_OP_NEAR(out, diag({1.44, 1.0, 1.0 / 1.44}), 1e-14);
  EXPECT_NEAR(out(2, 2).real(), 0.69444444444444444, 1e-15);
}

TEST(DiagFunction, RejectsOffDiagonal) {
  const auto rep = build_su2(Spin::from_twice(1));
  EXPECT_EQ(error_kind([&] { diag_function([](double x) { return cplx(x); }, rep.Jp); }),
            "not diagonal");
}

TEST(PsdSqrt, Diagonal) { EXPECT_OP_NEAR(psd_sqrt(diag({4, 9})), diag({2, 3}), 1e-15); }

TEST(PsdSqrt, LadderProductAtSpinOne) {
  const auto rep = build_su2(Spin::from_twice(2));
  EXPECT_OP_NEAR(psd_sqrt(rep.Jp * rep.Jm), diag({0, std::sqrt(2.0), std::sqrt(2.0)}), 1e-14);
}

TEST(PsdSqrt, ZeroStaysZero) { EXPECT_EQ(frobenius_norm(psd_sqrt(Operator::zero(3))), 0.0); }

TEST(PsdSqrt, NegativeEigenvalueThrows) {
  EXPECT_EQ(error_kind([] { psd_sqrt(diag({1, -1})); }), "not PSD");
}

TEST(PsdSqrtProperty, SquaresBackForRandomGram) {
  for (int trial = 0; trial < 100; ++trial) {
    const Index d = uniform_int(1, 6);
    const auto b = random_operator(d);
    const auto a = b * b.adjoint();
    const auto s = psd_sqrt(a, Tolerance(1e-10));
    EXPECT_LT(residual(s * s, a), 1e-11 * static_cast<double>(d));
    EXPECT_LT(residual(s, s.adjoint()), 1e-12 * static_cast<double>(d));
  }
}

TEST(HermitianPinv, InvertsNonzeroBlock) {
  const auto p = hermitian_pinv(diag({0, 2, -4}));
  EXPECT_OP_NEAR(p, diag({0, 0.5, -0.25}), 1e-15);
}

TEST(Residual, Examples) {
  const auto a = random_operator(3);
  EXPECT_EQ(residual(a, a), 0.0);
  EXPECT_NEAR(residual(Operator::identity(2), Operator::zero(2)), std::sqrt(2.0), 1e-15);
  const auto rep = build_su2(Spin::from_twice(5));
  EXPECT_LT(residual(commutator(rep.Jp, rep.Jm), cplx(2.0) * rep.J0), 1e-12 * 6);
}

TEST(Kron, DimensionsAndMixedProduct) {
  for (int trial = 0; trial < 30; ++trial) {
    const Index da = uniform_int(1, 4);
    const Index db = uniform_int(1, 4);
    const auto a = random_operator(da);
    const auto b = random_operator(db);
    const auto c = random_operator(da);
    const auto d = random_operator(db);
    EXPECT_EQ(kron(a, b).dim(), da * db);
    EXPECT_LT(residual(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12 * da * db);
  }
}

TEST(Kron, RowIndexConvention) {
  const auto k = kron(Operator::unit(2, 1, 0), Operator::unit(3, 2, 1));
  EXPECT_EQ(k(1 * 3 + 2, 0 * 3 + 1), cplx(1.0));
  EXPECT_NEAR(frobenius_norm(k), 1.0, 0.0);
}

TEST(Operator, UnitAndAdjoint) {
  const auto u = Operator::unit(3, 0, 2);
  EXPECT_EQ(u(0, 2), cplx(1.0));
  EXPECT_EQ(u.adjoint()(2, 0), cplx(1.0));
  EXPECT_FALSE(u.is_diagonal(1e-12));
  EXPECT_TRUE(Operator::identity(3).is_diagonal(0.0));
}

TEST(Tolerance, ScalesWithDimension) {
  EXPECT_DOUBLE_EQ(Tolerance(1e-12).effective(6), 6e-12);
  EXPECT_DOUBLE_EQ(Tolerance(1e-12, false).effective(6), 1e-12);
}
