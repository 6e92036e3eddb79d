#include "netginv/symmetric_factorization.hpp"
#include "netginv/symmetric_matrix.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace netginv {
namespace {

using testing::rows;
using testing::sym;
using testing::vec;

TEST(SymmetricMatrix, RejectsAsymmetricInput) {
  try {
    SymmetricMatrix(rows({{1, 2}, {3, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
  }
  try {
    SymmetricMatrix(Matrix::Zero(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(SymmetricMatrix, AveragesTinyAsymmetry) {
  const SymmetricMatrix a(rows({{1, 2 + 1e-12}, {2, 1}}));
  EXPECT_EQ(a(0, 1), a(1, 0));
}

TEST(SymmetricMatrix, Norms) {
  const SymmetricMatrix a = sym({{1, -2}, {-2, 3}});
  EXPECT_DOUBLE_EQ(a.inf_norm(), 5.0);
  EXPECT_DOUBLE_EQ(a.frobenius_norm(), std::sqrt(18.0));
}

TEST(Factorization, InverseOfTwoByTwo) {
  const auto f = SymmetricFactorization::factorize(sym({{2, 1}, {1, 2}}));
  ASSERT_TRUE(f);
  EXPECT_LE((f->inverse().matrix() - rows({{2, -1}, {-1, 2}}) / 3.0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((f->solve(vec({3.0, 3.0})) - vec({1.0, 1.0})).norm(), 1e-15);
}

TEST(Factorization, IndefiniteMatrix) {
  const SymmetricMatrix a = sym({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const auto f = SymmetricFactorization::factorize(a);
  ASSERT_TRUE(f);
  EXPECT_LE((a.matrix() * f->inverse().matrix() - Matrix::Identity(3, 3)).norm(), 1e-14);
  EXPECT_GT(f->min_pivot(), 0.0);
}

TEST(Factorization, DetectsSingularity) {
  EXPECT_FALSE(SymmetricFactorization::factorize(SymmetricMatrix(2)));
  try {
    factorize_nonsingular(sym({{1, -1}, {-1, 1}}), ErrorCode::SingularH2, "H2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularH2);
  }
  try {
    factorize_nonsingular(sym({{2, -1}, {-1, 0.5}}), ErrorCode::SingularSchur, "S");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularSchur);
  }
}

TEST(Factorization, RandomSpdRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 1 + trial * 2;
    const SymmetricMatrix a = testing::random_spd(n, rng);
    const auto f = factorize_nonsingular(a, ErrorCode::SingularH2, "A");
    EXPECT_LE((a.matrix() * f.inverse().matrix() - Matrix::Identity(n, n)).norm(), 1e-12);
    EXPECT_GT(f.rcond(), kSingularRcond);
    const Matrix rhs = testing::random_matrix(n, 3, rng);
    EXPECT_LE((a.matrix() * f.solve(rhs) - rhs).norm(), 1e-12 * (1.0 + rhs.norm()));
  }
}

// Large enough for LAPACK to take its blocked (level-3 BLAS) code path.
TEST(Factorization, BlockedPathOnLargeLaplacian) {
  std::mt19937_64 rng(11);
  const std::size_t n = 500;
  Matrix h = laplacian(random_connected_network(n, connected_edge_probability(n), rng)).matrix();
  h(0, 0) += 1.0;
  const auto f = factorize_nonsingular(SymmetricMatrix::from_lower(h), ErrorCode::SingularH2, "H");
  const auto nn = static_cast<Eigen::Index>(n);
  EXPECT_LE((h * f.inverse().matrix() - Matrix::Identity(nn, nn)).norm(), 1e-8);
  EXPECT_LE((h * f.solve(Matrix(Matrix::Identity(nn, nn))) - Matrix::Identity(nn, nn)).norm(), 1e-8);
}

}  // namespace
}  // namespace netginv
