#include "netginv/connect.hpp"
#include "netginv/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace netginv {
namespace {

using testing::rows;
using testing::sym;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(SpectralGroupInverse, Examples) {
  EXPECT_LE(max_abs(oracle::group_inverse_spectral(sym({{1, -1}, {-1, 1}})).matrix() - rows({{1, -1}, {-1, 1}}) / 4.0),
            1e-15);
  EXPECT_EQ(oracle::group_inverse_spectral(sym({{0}})).matrix(), rows({{0}}));
  EXPECT_LE(max_abs(oracle::group_inverse_spectral(laplacian(testing::path_graph(3))).matrix() -
                    testing::p3_group_inverse()),
            1e-15);
}

TEST(SpectralGroupInverse, NonsingularGivesInverse) {
  const SymmetricMatrix a = sym({{2, 1}, {1, 2}});
  EXPECT_LE(max_abs(oracle::group_inverse_spectral(a).matrix() - rows({{2, -1}, {-1, 2}}) / 3.0), 1e-15);
  EXPECT_EQ(oracle::spectral_kernel_vector(a).size(), 0);
}

TEST(SpectralGroupInverse, RejectsMultipleKernel) {
  try {
    oracle::group_inverse_spectral(SymmetricMatrix(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KernelNotSimple);
  }
}

TEST(SpectralKernelVector, LaplacianKernelIsConstant) {
  const Vector u = oracle::spectral_kernel_vector(laplacian(testing::cycle_graph(5)));
  ASSERT_EQ(u.size(), 5);
  EXPECT_NEAR(std::abs(u.sum()), std::sqrt(5.0), 1e-12);
}

TEST(PairwiseResistance, Examples) {
  EXPECT_NEAR(oracle::pairwise_resistance_bruteforce(Network(2, {{0, 1, 1.0}}))(0, 1), 1.0, 1e-15);
  const SymmetricMatrix k3 = oracle::pairwise_resistance_bruteforce(testing::complete_graph(3));
  EXPECT_NEAR(k3(0, 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(k3(0, 2), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(k3(1, 2), 2.0 / 3.0, 1e-15);
  const SymmetricMatrix p3 = oracle::pairwise_resistance_bruteforce(testing::path_graph(3));
  EXPECT_NEAR(p3(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(p3(1, 2), 1.0, 1e-15);
  EXPECT_NEAR(p3(0, 2), 2.0, 1e-15);
  EXPECT_EQ(p3(1, 1), 0.0);
}

TEST(PairwiseResistance, RejectsDisconnected) {
  try {
    oracle::pairwise_resistance_bruteforce(Network(3, {{0, 1, 1.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(PairwiseResistance, CompleteGraphKirchhoff) {
  for (std::size_t n = 2; n <= 12; ++n) {
    const SymmetricMatrix r = oracle::pairwise_resistance_bruteforce(testing::complete_graph(n));
    EXPECT_NEAR(r.matrix().sum() / 2.0, static_cast<double>(n - 1), 1e-12) << n;
  }
}

class OracleProperties : public ::testing::TestWithParam<int> {};

TEST_P(OracleProperties, SelfConsistency) {
  std::mt19937_64 rng(2100 + GetParam());
  const std::size_t n = 2 + static_cast<std::size_t>(GetParam()) % 30;
  const Network net = testing::random_network(n, rng);
  const SymmetricMatrix l = laplacian(net);
  const SymmetricMatrix g = oracle::group_inverse_spectral(l);
  const Vector u = Weight::constant(n).values();
  const auto report = verify_group_inverse(l.matrix(), g.matrix(), u, 1e-9 * std::max(1.0, g.frobenius_norm()));
  EXPECT_TRUE(report.passed);

  const SymmetricMatrix r0 = oracle::pairwise_resistance_bruteforce(net, 0);
  const SymmetricMatrix r1 = oracle::pairwise_resistance_bruteforce(net, n - 1);
  EXPECT_LE(relative_frobenius(r0.matrix(), r1.matrix()), 1e-10);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      EXPECT_NEAR(effective_resistance(g, x, y), r0(x, y), 1e-9 * std::max(1.0, r0(x, y)));
}

INSTANTIATE_TEST_SUITE_P(Seeded, OracleProperties, ::testing::Range(0, 15));

}  // namespace
}  // namespace netginv
