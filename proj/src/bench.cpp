#include "netginv/bench.hpp"

#include "netginv/connect.hpp"
#include "netginv/error.hpp"
#include "netginv/oracle.hpp"
#include "netginv/random_network.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace netginv {

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

BenchResult run_benchmark(const BenchConfig& config) {
  if (config.repeats == 0) throw Error(ErrorCode::InvalidArgument, "bench needs at least one repeat");
  std::mt19937_64 rng(config.seed);
  const Network net1 = random_connected_network(config.n1, connected_edge_probability(config.n1), rng);
  const Network net2 = random_connected_network(config.n2, connected_edge_probability(config.n2), rng);
  const ConnectionSpec conn = random_connection(config.n1, config.n2, config.edges, rng);

  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  BenchResult result;
  SymmetricMatrix composite;
  SymmetricMatrix reference;
  for (std::size_t r = 0; r < config.repeats; ++r) {
    const auto t0 = clock::now();
    composite = composite_group_inverse(net1, net2, conn, GroupInverseOptions{false}).ginv;
    const auto t1 = clock::now();
    reference = oracle::group_inverse_spectral(laplacian(connect_networks(net1, net2, conn)));
    const auto t2 = clock::now();
    result.composite_seconds.push_back(seconds(t0, t1));
    result.oracle_seconds.push_back(seconds(t1, t2));
  }
  result.composite_median = median(result.composite_seconds);
  result.oracle_median = median(result.oracle_seconds);
  result.discrepancy = relative_frobenius(composite.matrix(), reference.matrix());
  return result;
}

}  // namespace netginv
