#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "expect.hpp"
#include "noether/numerics.hpp"
#include "oracles.hpp"

using namespace noether;
using noether::testing::jacobi_norm;
using noether::testing::random_matrix;

TEST(Numerics, SpectralNormOfDiagonal) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d.diagonal() << 3.0, -1.0, complex_t(0.0, 2.0);
  EXPECT_DOUBLE_EQ(spectral_norm(d), 3.0);
  EXPECT_DOUBLE_EQ(spectral_norm(ComplexMatrix::Zero(4, 2)), 0.0);
  EXPECT_DOUBLE_EQ(spectral_norm(ComplexMatrix(0, 0)), 0.0);
}

TEST(Numerics, SpectralNormRankOneIsProductOfLengths) {
  noether::testing::Rng rng(1);
  const ComplexMatrix u = random_matrix(rng, 5, 1);
  const ComplexMatrix v = random_matrix(rng, 7, 1);
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  m.block(2, 1, 5, 7) = u * v.adjoint();
  EXPECT_NEAR(spectral_norm(m), u.norm() * v.norm(), 1e-12 * u.norm() * v.norm());
}

TEST(Numerics, SpectralNormAgreesWithJacobi) {
  noether::testing::Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix m = random_matrix(rng, 6 + trial % 5, 4 + trial % 7);
    m.row(trial % 4).setZero();
    m.col(trial % 3).setZero();
    EXPECT_NEAR(spectral_norm(m), jacobi_norm(m), 1e-12 * jacobi_norm(m));
  }
}

TEST(Numerics, MinSingularValue) {
  EXPECT_EQ(min_singular_value(ComplexMatrix::Ones(2, 3)), 0.0);
  EXPECT_TRUE(std::isinf(min_singular_value(ComplexMatrix(3, 0))));
  ComplexMatrix d = ComplexMatrix::Zero(3, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 0.5;
  EXPECT_DOUBLE_EQ(min_singular_value(d), 0.5);
}

TEST(Numerics, SolveResidualAndErrors) {
  noether::testing::Rng rng(3);
  const ComplexMatrix a = random_matrix(rng, 8, 8) + 10.0 * ComplexMatrix::Identity(8, 8);
  const ComplexMatrix b = random_matrix(rng, 8, 3);
  const ComplexMatrix x = solve(a, b);
  EXPECT_LT(spectral_norm(a * x - b), 1e-13 * spectral_norm(b));

  ComplexMatrix singular = ComplexMatrix::Identity(3, 3);
  singular(2, 2) = 0.0;
  EXPECT_ERRC(solve(singular, ComplexMatrix::Ones(3, 1)), errc::singular);
  EXPECT_ERRC(solve(ComplexMatrix::Ones(2, 3), ComplexMatrix::Ones(2, 1)), errc::shape_mismatch);
  EXPECT_ERRC(solve(a, ComplexMatrix::Ones(3, 1)), errc::shape_mismatch);
}

TEST(Numerics, InverseOfUnitaryIsAdjoint) {
  noether::testing::Rng rng(4);
  const Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, 6, 6));
  const ComplexMatrix q = qr.householderQ();
  EXPECT_LT(spectral_norm(inverse(q) - q.adjoint()), 1e-13);
}

TEST(Numerics, LeastSquaresIsMinimumNorm) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  const ComplexMatrix x = least_squares(m, ComplexMatrix::Ones(2, 1));
  EXPECT_NEAR(std::abs(x(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(x(1, 0)), 0.0, 1e-15);
  EXPECT_TRUE(least_squares(ComplexMatrix::Zero(3, 2), ComplexMatrix::Ones(3, 1)).isZero(0.0));
}

TEST(Numerics, ColumnAndNullSpaces) {
  noether::testing::Rng rng(5);
  const ComplexMatrix m = random_matrix(rng, 7, 2) * random_matrix(rng, 2, 5);
  const ComplexMatrix col = column_space_basis(m);
  const ComplexMatrix ker = null_space_basis(m);
  ASSERT_EQ(col.cols(), 2);
  ASSERT_EQ(ker.cols(), 3);
  EXPECT_LT(spectral_norm(col.adjoint() * col - ComplexMatrix::Identity(2, 2)), 1e-13);
  EXPECT_LT(spectral_norm(m * ker), 1e-12 * spectral_norm(m));
  EXPECT_LT(spectral_norm(m - col * col.adjoint() * m), 1e-12 * spectral_norm(m));
  EXPECT_EQ(numerical_rank(m), 2);
  EXPECT_EQ(null_space_basis(ComplexMatrix::Zero(2, 4)).cols(), 4);
}

TEST(Numerics, OrthogonalComplementCompletesBasis) {
  noether::testing::Rng rng(6);
  const ComplexMatrix q = column_space_basis(random_matrix(rng, 6, 2));
  const ComplexMatrix c = orthogonal_complement(q);
  ASSERT_EQ(c.cols(), 4);
  ComplexMatrix w(6, 6);
  w << q, c;
  EXPECT_LT(spectral_norm(w.adjoint() * w - ComplexMatrix::Identity(6, 6)), 1e-12);
}

TEST(Numerics, RejectsNonFinite) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_ERRC(require_finite(m, "m"), errc::shape_mismatch);
}

TEST(Numerics, ErrorNames) {
  EXPECT_EQ(to_string(errc::no_cut_found), "NoCutFound");
  EXPECT_EQ(to_string(errc::not_locally_constant), "NotLocallyConstant");
  const error e(errc::io, "disk");
  EXPECT_EQ(e.code(), errc::io);
  EXPECT_STREQ(e.what(), "Io: disk");
}
