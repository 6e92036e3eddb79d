// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.
#include "netginv/bench.hpp"
#include "netginv/blockinv.hpp"
#include "netginv/connect.hpp"
#include "netginv/oracle.hpp"
#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace netginv;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

Matrix projector(const Vector& u) {
  return Matrix::Identity(u.size(), u.size()) - u * u.transpose();
}

// 1. Characterization residuals on 200 random connected weighted graphs of
//    order 2..60. Even instances go through group_inverse_block on a random
//    split of the Laplacian, odd ones through composite_group_inverse on a
//    random pair of networks whose orders sum to n.
Outcome characterization() {
  constexpr int kInstances = 200;
  constexpr double kProjectorTol = 1e-9;
  constexpr double kKernelTol = 1e-10;
  constexpr double kSymmetryTol = 1e-12;
  constexpr double kTimeLimit = 30.0;

  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  double worst_projector = 0.0, worst_kernel = 0.0, worst_symmetry = 0.0;
  bool ok = true;
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 60)(rng);
    SymmetricMatrix l;
    GroupInverseResult r;
    if (i % 2 == 0) {
      const Network net = testing::random_network(n, rng);
      l = laplacian(net);
      const auto k = std::uniform_int_distribution<Eigen::Index>(1, static_cast<Eigen::Index>(n) - 1)(rng);
      r = group_inverse_block(testing::split_system(l, Weight::constant(n).values(), k));
    } else {
      const std::size_t n1 = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
      const std::size_t n2 = n - n1;
      const Network net1 = n1 == 1 ? testing::single_vertex() : testing::random_network(n1, rng);
      const Network net2 = n2 == 1 ? testing::single_vertex() : testing::random_network(n2, rng);
      const std::size_t edges = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(5, n1 * n2))(rng);
      const ConnectionSpec conn = random_connection(n1, n2, edges, rng, {0.1, 10.0});
      l = laplacian(connect_networks(net1, net2, conn));
      r = composite_group_inverse(net1, net2, conn);
    }
    const Matrix& g = r.ginv.matrix();
    const Vector u = Weight::constant(n).values();
    const double projector_res = (l.matrix() * g - projector(u)).norm() / std::max(1.0, g.norm());
    const double kernel_res = (g * u).norm();
    const double symmetry_res = (g - g.transpose()).norm() / std::max(1.0, g.norm());
    worst_projector = std::max(worst_projector, projector_res);
    worst_kernel = std::max(worst_kernel, kernel_res);
    worst_symmetry = std::max(worst_symmetry, symmetry_res);
    ok = ok && projector_res <= kProjectorTol && kernel_res <= kKernelTol && symmetry_res <= kSymmetryTol;
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < kTimeLimit;
  return {ok, "200 graphs, max ||LG-(I-uu^T)||/max(1,||G||) = " + fmt("%.3e", worst_projector) +
                  ", max ||Gu|| = " + fmt("%.3e", worst_kernel) + ", max asymmetry = " + fmt("%.3e", worst_symmetry) +
                  ", " + fmt("%.2f", elapsed) + " s (limit 30 s)"};
}

// 2. group_inverse_block against the spectral oracle on 200 random singular
//    block systems: Laplacians of connected graphs (n <= 40) under a random
//    vertex permutation, split into two nonempty blocks.
Outcome block_vs_oracle() {
  constexpr int kInstances = 200;
  constexpr double kTol = 1e-8;
  constexpr double kTimeLimit = 60.0;

  const auto start = Clock::now();
  std::mt19937_64 rng(20240602);
  double worst = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
    const Network net = testing::shuffled(testing::random_network(n, rng), rng);
    const SymmetricMatrix l = laplacian(net);
    const auto k = std::uniform_int_distribution<Eigen::Index>(1, static_cast<Eigen::Index>(n) - 1)(rng);
    const auto r = group_inverse_block(testing::split_system(l, Weight::constant(n).values(), k));
    worst = std::max(worst, relative_frobenius(r.ginv.matrix(), oracle::group_inverse_spectral(l).matrix()));
  }
  const double elapsed = seconds_since(start);
  return {worst <= kTol && elapsed < kTimeLimit, "200 systems, max relative discrepancy = " + fmt("%.3e", worst) +
                                                     " (tol 1e-8), " + fmt("%.2f", elapsed) + " s (limit 60 s)"};
}

// 3. composite_group_inverse against the oracle of the assembled composite
//    Laplacian on 100 random composites; the single-edge fast path against the
//    generic path on every one-edge instance.
Outcome composite_vs_oracle() {
  constexpr int kInstances = 100;
  constexpr double kOracleTol = 1e-8;
  constexpr double kFastPathTol = 1e-11;

  std::mt19937_64 rng(20240603);
  double worst = 0.0, worst_fast = 0.0;
  int one_edge = 0;
  for (int i = 0; i < kInstances; ++i) {
    auto c = testing::random_composite(rng, 30, 5);
    const auto r = composite_group_inverse(c.net1, c.net2, c.conn);
    const SymmetricMatrix l = laplacian(connect_networks(c.net1, c.net2, c.conn));
    worst = std::max(worst, relative_frobenius(r.ginv.matrix(), oracle::group_inverse_spectral(l).matrix()));
    if (c.conn.edges.size() == 1) {
      ++one_edge;
      const Connection& e = c.conn.edges.front();
      const auto fast = single_edge_group_inverse(c.net1, c.net2, e.x, e.y, e.a);
      worst_fast = std::max(worst_fast, relative_frobenius(fast.ginv.matrix(), r.ginv.matrix()));
    }
  }
  const bool ok = worst <= kOracleTol && worst_fast <= kFastPathTol && one_edge > 0;
  return {ok, "100 composites, max relative discrepancy = " + fmt("%.3e", worst) + " (tol 1e-8); " +
                  std::to_string(one_edge) + " one-edge instances, fast path max = " + fmt("%.3e", worst_fast) +
                  " (tol 1e-11)"};
}

// 4. group_inverse_bordered against group_inverse_block with m = 1.
Outcome bordered_vs_block() {
  constexpr int kInstances = 100;
  constexpr double kTol = 1e-10;

  std::mt19937_64 rng(20240604);
  double worst = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
    const Network net = testing::random_network(n, rng);
    const bool weighted = i % 2 == 1;
    const Weight omega = weighted ? Weight(testing::random_positive(n, rng)) : Weight::constant(n);
    const SymmetricMatrix a =
        weighted ? schrodinger_matrix(net, potential_from_weight(net, omega, 0.0)) : laplacian(net);
    const BlockSystem sys = testing::split_system(a, omega.values(), static_cast<Eigen::Index>(n) - 1);
    const auto bordered = group_inverse_bordered(sys.h1, sys.b.col(0), sys.h2(0, 0), omega.values());
    const auto block = group_inverse_block(sys);
    worst = std::max(worst, relative_frobenius(bordered.ginv.matrix(), block.ginv.matrix()));
  }
  return {worst <= kTol, "100 instances, max relative difference = " + fmt("%.3e", worst) + " (tol 1e-10)"};
}

// 5. Closed-form fixtures.
Outcome fixtures() {
  constexpr double kTol = 1e-12;
  std::vector<std::string> failures;
  double worst = 0.0;
  const auto check = [&](const std::string& name, double error) {
    worst = std::max(worst, error);
    if (!(error <= kTol)) failures.push_back(name + " (" + fmt("%.3e", error) + ")");
  };
  const auto max_abs = [](const Matrix& m) { return m.cwiseAbs().maxCoeff(); };
  const Matrix k2_pattern = testing::rows({{1, -1}, {-1, 1}});
  const Network k2(2, {{0, 1, 1.0}});

  const double r = 1.0 / std::sqrt(2.0);
  const auto k2_block = group_inverse_block(
      {testing::sym({{1}}), testing::sym({{1}}), testing::rows({{-1}}), testing::vec({r}), testing::vec({r})});
  check("K2 group inverse", max_abs(k2_block.ginv.matrix() - k2_pattern / 4.0));

  for (const double a : {0.1, 1.0, 3.0, 10.0}) {
    const auto g = composite_group_inverse(testing::single_vertex(), testing::single_vertex(), {{{0, 0, a}}});
    check("two-vertex composite a=" + fmt("%g", a), max_abs(g.ginv.matrix() - k2_pattern / (4.0 * a)));
  }

  const double r3 = 1.0 / std::sqrt(3.0);
  const auto p3 = group_inverse_block({testing::sym({{1, -1}, {-1, 2}}), testing::sym({{1}}), testing::rows({{0}, {-1}}),
                                       testing::vec({r3, r3}), testing::vec({r3})});
  check("P3 group inverse", max_abs(p3.ginv.matrix() - testing::p3_group_inverse()));

  const auto kf = [](const Network& net) {
    return kirchhoff_index(group_inverse_deflation(laplacian(net), Weight::constant(net.order()).values(),
                                                   laplacian(net).inf_norm()));
  };
  check("Kf(K2) = 1", std::abs(kf(k2) - 1.0));
  check("Kf(K3) = 2", std::abs(kf(testing::complete_graph(3)) - 2.0));
  check("Kf(P3) = 4", std::abs(kf(testing::path_graph(3)) - 4.0));
  for (std::size_t n = 2; n <= 12; ++n) {
    const SymmetricMatrix resistances = oracle::pairwise_resistance_bruteforce(testing::complete_graph(n));
    const double expected = static_cast<double>(n - 1);
    check("Kf(K" + std::to_string(n) + ") oracle", std::abs(resistances.matrix().sum() / 2.0 - expected));
    check("Kf(K" + std::to_string(n) + ")", std::abs(kf(testing::complete_graph(n)) - expected));
  }

  std::string detail = "max error " + fmt("%.3e", worst) + " (tol 1e-12)";
  for (const auto& f : failures) detail += "; failed " + f;
  return {failures.empty(), detail};
}

// 6. Eigen-identity of the assembled composite Schrodinger matrix, and the
//    block inverse for lambda > 0.
Outcome eigen_identity() {
  constexpr int kInstances = 50;
  constexpr double kEigenTol = 1e-10;
  constexpr double kInverseTol = 1e-9;

  std::mt19937_64 rng(20240606);
  double worst_eigen = 0.0, worst_inverse = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const auto c = testing::random_composite(rng, 30, 5);
    const Weight w1(testing::random_positive(c.net1.order(), rng));
    const Weight w2(testing::random_positive(c.net2.order(), rng));
    for (const double lambda : {0.0, 0.5, 2.0}) {
      const CouplingBlocks blocks = coupling_blocks(c.net1, c.net2, c.conn, w1, w2, lambda);
      const SymmetricMatrix a = blocks.assemble();
      const Vector& omega = blocks.omega.values();
      const double rel = (a.matrix() * omega - lambda * omega).norm() /
                         std::max(1.0, std::max(a.frobenius_norm(), lambda) * omega.norm());
      worst_eigen = std::max(worst_eigen, rel);
      if (lambda > 0.0) {
        const Matrix inv = composite_schrodinger_inverse(c.net1, c.net2, c.conn, w1, w2, lambda).matrix();
        const auto n = static_cast<Eigen::Index>(a.order());
        worst_inverse = std::max(worst_inverse, (inv * a.matrix() - Matrix::Identity(n, n)).norm());
      }
    }
  }
  return {worst_eigen <= kEigenTol && worst_inverse <= kInverseTol,
          "50 composites x 3 lambdas, max relative ||L'w - lambda w|| = " + fmt("%.3e", worst_eigen) +
              " (tol 1e-10), max ||L'^-1 L' - I||_F = " + fmt("%.3e", worst_inverse) + " (tol 1e-9)"};
}

// 7. Series law across a single bridge: R'(x, y) = R1(x, p) + 1/a + R2(q, y).
Outcome bridge_law() {
  constexpr int kInstances = 50;
  constexpr int kPairs = 10;
  constexpr double kTol = 1e-9;

  std::mt19937_64 rng(20240607);
  double worst = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    std::uniform_int_distribution<std::size_t> order(2, 30);
    const std::size_t n1 = order(rng), n2 = order(rng);
    const Network net1 = testing::random_network(n1, rng);
    const Network net2 = testing::random_network(n2, rng);
    const std::size_t p = std::uniform_int_distribution<std::size_t>(0, n1 - 1)(rng);
    const std::size_t q = std::uniform_int_distribution<std::size_t>(0, n2 - 1)(rng);
    const double a = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
    const SymmetricMatrix fast = single_edge_group_inverse(net1, net2, p, q, a).ginv;
    const SymmetricMatrix generic = composite_group_inverse(net1, net2, {{{p, q, a}}}).ginv;
    const SymmetricMatrix r1 = oracle::pairwise_resistance_bruteforce(net1);
    const SymmetricMatrix r2 = oracle::pairwise_resistance_bruteforce(net2);
    for (int k = 0; k < kPairs; ++k) {
      const std::size_t x = std::uniform_int_distribution<std::size_t>(0, n1 - 1)(rng);
      const std::size_t y = std::uniform_int_distribution<std::size_t>(0, n2 - 1)(rng);
      const double expected = r1(x, p) + 1.0 / a + r2(q, y);
      worst = std::max(worst, std::abs(effective_resistance(fast, x, n1 + y) - expected));
      worst = std::max(worst, std::abs(effective_resistance(generic, x, n1 + y) - expected));
    }
  }
  return {worst <= kTol, "50 composites x 10 pairs, max |R' - (R1 + 1/a + R2)| = " + fmt("%.3e", worst) +
                             " (tol 1e-9)"};
}

// 8. bench 800 800 3 --seed 1: composite path strictly faster (median of 5)
//    than the full-size oracle, discrepancy <= 1e-7.
Outcome performance() {
  constexpr double kTol = 1e-7;
  const BenchResult r = run_benchmark({800, 800, 3, 1, 5});
  return {r.composite_faster() && r.discrepancy <= kTol,
          "median composite " + fmt("%.3f", r.composite_median) + " s vs oracle " + fmt("%.3f", r.oracle_median) +
              " s, discrepancy " + fmt("%.3e", r.discrepancy) + " (tol 1e-7)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 characterization residuals", characterization},
      {"2 block group inverse vs oracle", block_vs_oracle},
      {"3 composite group inverse vs oracle", composite_vs_oracle},
      {"4 bordered vs block (m = 1)", bordered_vs_block},
      {"5 closed-form fixtures", fixtures},
      {"6 composite Schrodinger eigen-identity", eigen_identity},
      {"7 bridge law", bridge_law},
      {"8 performance ordering", performance},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", outcome.passed ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
