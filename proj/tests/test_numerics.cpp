#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracle.hpp"
#include "ulp/errors.hpp"
#include "ulp/numerics.hpp"

namespace ulp {
namespace {

using testing::distance;
using testing::random_matrix;
using testing::to_eigen;

constexpr Complex kI{0.0, 1.0};

TEST(ComplexMatrix, RejectsWrongEntryCount) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), ShapeError);
}

TEST(ComplexMatrix, RejectsNonFiniteEntries) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(nan, 0.0)}), NumericalError);
  EXPECT_THROW(ComplexMatrix(1, 2, {Complex(0.0, 0.0), Complex(0.0, inf)}), NumericalError);
}

TEST(Hermitian, ConjugatesScalar) {
  const ComplexMatrix a{{{2.0, 3.0}}};
  EXPECT_EQ(hermitian(a), (ComplexMatrix{{{2.0, -3.0}}}));
}

TEST(Hermitian, IdentityIsSelfAdjoint) {
  EXPECT_EQ(hermitian(ComplexMatrix::identity(4)), ComplexMatrix::identity(4));
}

TEST(Hermitian, IsAnInvolutionAndSwapsShape) {
  std::mt19937_64 gen(11);
  const ComplexMatrix a = random_matrix(gen, 3, 4);
  const ComplexMatrix ah = hermitian(a);
  EXPECT_EQ(ah.rows(), 4u);
  EXPECT_EQ(ah.cols(), 3u);
  EXPECT_EQ(hermitian(ah), a);
  EXPECT_EQ(ah(2, 1), std::conj(a(1, 2)));
}

TEST(Matmul, RightIdentity) {
  std::mt19937_64 gen(12);
  const ComplexMatrix a = random_matrix(gen, 2, 3);
  EXPECT_EQ(matmul(a, ComplexMatrix::identity(3)), a);
}

TEST(Matmul, HandExample) {
  const ComplexMatrix a{{1.0, kI}, {0.0, 1.0}};
  const ComplexMatrix b{{1.0}, {1.0}};
  const ComplexMatrix expected{{{1.0, 1.0}}, {1.0}};
  EXPECT_EQ(matmul(a, b), expected);
  EXPECT_LT(distance(matmul(a, b), to_eigen(a) * to_eigen(b)), 1e-15);
}

TEST(Matmul, AgreesWithDenseOracle) {
  std::mt19937_64 gen(13);
  const ComplexMatrix a = random_matrix(gen, 5, 7);
  const ComplexMatrix b = random_matrix(gen, 7, 3);
  EXPECT_LT(distance(matmul(a, b), to_eigen(a) * to_eigen(b)), 1e-13);
}

TEST(Matmul, Associativity) {
  std::mt19937_64 gen(14);
  const ComplexMatrix a = random_matrix(gen, 4, 4);
  const ComplexMatrix b = random_matrix(gen, 4, 4);
  const ComplexMatrix c = random_matrix(gen, 4, 4);
  EXPECT_LT(distance(matmul(matmul(a, b), c), matmul(a, matmul(b, c))), 1e-12);
}

TEST(Matmul, HermitianOfProductReversesOrder) {
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(gen, 3, 5);
    const ComplexMatrix b = random_matrix(gen, 5, 2);
    EXPECT_LT(distance(hermitian(matmul(a, b)), matmul(hermitian(b), hermitian(a))), 1e-12);
  }
}

TEST(Matmul, DimensionMismatchIsShapeError) {
  EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), ShapeError);
  EXPECT_THROW(matvec(ComplexMatrix(2, 3), std::vector<Complex>(2)), ShapeError);
}

TEST(Matvec, MatchesMatmulWithColumn) {
  std::mt19937_64 gen(16);
  const ComplexMatrix a = random_matrix(gen, 4, 3);
  const ComplexMatrix x = random_matrix(gen, 3, 1);
  const std::vector<Complex> y = matvec(a, x.entries());
  const ComplexMatrix expected = matmul(a, x);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(y[i], expected(i, 0));
}

TEST(SolveHermitian, IdentitySystem) {
  const ComplexMatrix b{{1.0}, {2.0}};
  EXPECT_EQ(solve_hermitian(ComplexMatrix::identity(2), b, 0.0), b);
}

TEST(SolveHermitian, DiagonalScaling) {
  const ComplexMatrix a{{2.0, 0.0}, {0.0, 2.0}};
  EXPECT_LT(distance(solve_hermitian(a, ComplexMatrix::identity(2), 0.0),
                     0.5 * to_eigen(ComplexMatrix::identity(2))),
            1e-15);
}

TEST(SolveHermitian, RidgeShiftsDiagonal) {
  const ComplexMatrix a{{1.0, 0.0}, {0.0, 3.0}};
  const ComplexMatrix x = solve_hermitian(a, ComplexMatrix::identity(2), 1.0);
  EXPECT_NEAR(x(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(x(1, 1).real(), 0.25, 1e-15);
}

double residual_ratio(const ComplexMatrix& a, const ComplexMatrix& b, double ridge,
                      const ComplexMatrix& x) {
  const double residual = frobenius_norm(add_scaled_identity(a, ridge) * x - b);
  return residual / ((frobenius_norm(a) + ridge) * frobenius_norm(x));
}

TEST(SolveHermitian, GramSystemResidual) {
  std::mt19937_64 gen(17);
  const ComplexMatrix g = random_matrix(gen, 4, 4);
  const ComplexMatrix a = g * hermitian(g);
  const ComplexMatrix b = random_matrix(gen, 4, 2);
  const ComplexMatrix x = solve_hermitian(a, b, 0.0);
  EXPECT_LT(residual_ratio(a, b, 0.0, x), 1e-10);
  EXPECT_LT(distance(x, to_eigen(a).inverse() * to_eigen(b)), 1e-9 * frobenius_norm(x));
}

TEST(SolveHermitian, ResidualBoundOverRandomPositiveDefiniteSystems) {
  std::mt19937_64 gen(18);
  std::uniform_int_distribution<std::size_t> size(2, 16);
  std::uniform_real_distribution<double> ridge(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(gen);
    const ComplexMatrix g = random_matrix(gen, n, n + 2);
    const ComplexMatrix a = g * hermitian(g);
    const ComplexMatrix b = random_matrix(gen, n, 3);
    const double r = trial % 2 == 0 ? 0.0 : ridge(gen);
    worst = std::max(worst, residual_ratio(a, b, r, solve_hermitian(a, b, r)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(SolveHermitian, IndefiniteMatrixFallsBackToPivotedFactorization) {
  // Zero leading pivot stops Cholesky; the LU path still solves it.
  const ComplexMatrix a{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix b{{3.0}, {kI}};
  const ComplexMatrix x = solve_hermitian(a, b, 0.0);
  EXPECT_LT(distance(x, to_eigen(ComplexMatrix{{kI}, {3.0}})), 1e-15);
}

TEST(SolveHermitian, SingularMatrixReportsPivot) {
  const ComplexMatrix a{{1.0, 1.0}, {1.0, 1.0}};
  try {
    solve_hermitian(a, ComplexMatrix::identity(2), 0.0);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_LT(e.pivot_magnitude(), 1e-14);
    EXPECT_NE(std::string(e.what()).find("magnitude"), std::string::npos);
  }
}

TEST(SolveHermitian, RankDeficientGramIsSingular) {
  std::mt19937_64 gen(19);
  const ComplexMatrix g = random_matrix(gen, 4, 2);
  EXPECT_THROW(solve_hermitian(g * hermitian(g), ComplexMatrix::identity(4), 0.0),
               SingularityError);
  EXPECT_NO_THROW(solve_hermitian(g * hermitian(g), ComplexMatrix::identity(4), 0.1));
}

TEST(SolveHermitian, RejectsBadArguments) {
  EXPECT_THROW(solve_hermitian(ComplexMatrix(2, 3), ComplexMatrix(2, 1), 0.0), ShapeError);
  EXPECT_THROW(solve_hermitian(ComplexMatrix::identity(2), ComplexMatrix(3, 1), 0.0),
               ShapeError);
  EXPECT_THROW(solve_hermitian(ComplexMatrix::identity(2), ComplexMatrix(2, 1), -1.0),
               ConfigError);
}

TEST(Reductions, TraceNormsAndShift) {
  EXPECT_EQ(trace(ComplexMatrix::identity(3)), Complex(3.0));
  EXPECT_DOUBLE_EQ(frobenius_norm(ComplexMatrix::identity(3)), std::sqrt(3.0));
  const std::vector<double> norms = row_norms(ComplexMatrix{{3.0, 4.0}, {0.0, 0.0}});
  ASSERT_EQ(norms.size(), 2u);
  EXPECT_DOUBLE_EQ(norms[0], 5.0);
  EXPECT_DOUBLE_EQ(norms[1], 0.0);
  EXPECT_EQ(add_scaled_identity(ComplexMatrix(2, 2), 1.5), 1.5 * ComplexMatrix::identity(2));
}

TEST(Reductions, NonSquareTraceIsShapeError) {
  EXPECT_THROW(trace(ComplexMatrix(2, 3)), ShapeError);
  EXPECT_THROW(add_scaled_identity(ComplexMatrix(2, 3), 1.0), ShapeError);
}

TEST(PseudoInverse, IdentityAndScalar) {
  EXPECT_EQ(pseudo_inverse(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
  EXPECT_LT(distance(pseudo_inverse(ComplexMatrix{{2.0}}), to_eigen(ComplexMatrix{{0.5}})),
            1e-16);
}

void expect_moore_penrose(const ComplexMatrix& a, const ComplexMatrix& p, double tol) {
  const auto ea = to_eigen(a);
  const auto ep = to_eigen(p);
  EXPECT_LT((ea * ep * ea - ea).norm(), tol);
  EXPECT_LT((ep * ea * ep - ep).norm(), tol);
  EXPECT_LT(((ea * ep).adjoint() - ea * ep).norm(), tol);
  EXPECT_LT(((ep * ea).adjoint() - ep * ea).norm(), tol);
}

TEST(PseudoInverse, TallMatrixSatisfiesMoorePenrose) {
  std::mt19937_64 gen(20);
  const ComplexMatrix a = random_matrix(gen, 6, 3);
  const ComplexMatrix p = pseudo_inverse(a);
  EXPECT_EQ(p.rows(), 3u);
  EXPECT_EQ(p.cols(), 6u);
  expect_moore_penrose(a, p, 1e-10);
  const auto reference = to_eigen(a).completeOrthogonalDecomposition().pseudoInverse();
  EXPECT_LT(distance(p, reference), 1e-10);
}

TEST(PseudoInverse, WideMatrixSatisfiesMoorePenrose) {
  std::mt19937_64 gen(21);
  const ComplexMatrix a = random_matrix(gen, 3, 7);
  const ComplexMatrix p = pseudo_inverse(a);
  expect_moore_penrose(a, p, 1e-10);
  const auto reference = to_eigen(a).completeOrthogonalDecomposition().pseudoInverse();
  EXPECT_LT(distance(p, reference), 1e-10);
}

TEST(PseudoInverse, MatchesRegularizedLimit) {
  std::mt19937_64 gen(22);
  const ComplexMatrix a = random_matrix(gen, 6, 3);
  const ComplexMatrix regularized = solve_hermitian(hermitian(a) * a, hermitian(a), 1e-8);
  EXPECT_LT(distance(regularized, pseudo_inverse(a)), 1e-6);
}

TEST(PseudoInverse, RankDeficientIsSingular) {
  const ComplexMatrix a{{1.0, 2.0}, {2.0, 4.0}, {3.0, 6.0}};
  EXPECT_THROW(pseudo_inverse(a), SingularityError);
  EXPECT_THROW(pseudo_inverse(hermitian(a)), SingularityError);
}

TEST(Blocks, StackAndSlice) {
  const ComplexMatrix a{{1.0, 2.0}};
  const ComplexMatrix b{{3.0, 4.0}};
  EXPECT_EQ(vstack(a, b), (ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}));
  EXPECT_EQ(hstack(a, b), (ComplexMatrix{{1.0, 2.0, 3.0, 4.0}}));
  EXPECT_EQ(column_block(hstack(a, b), 1, 2), (ComplexMatrix{{2.0, 3.0}}));
  EXPECT_THROW(column_block(a, 1, 2), ShapeError);
  EXPECT_THROW(vstack(a, ComplexMatrix(1, 3)), ShapeError);
  EXPECT_THROW(hstack(a, ComplexMatrix(2, 2)), ShapeError);
}

}  // namespace
}  // namespace ulp
