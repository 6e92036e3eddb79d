#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace netginv {

struct BenchConfig {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t edges = 1;
  std::uint64_t seed = 1;
  std::size_t repeats = 5;
};

struct BenchResult {
  std::vector<double> composite_seconds;
  std::vector<double> oracle_seconds;
  double composite_median = 0.0;
  double oracle_median = 0.0;
  /// ||G_composite - G_oracle||_F / ||G_oracle||_F
  double discrepancy = 0.0;

  bool composite_faster() const noexcept { return composite_median < oracle_median; }
};

/// Times composite_group_inverse against the full-size spectral oracle on a
/// seeded pair of random connected unit-conductance graphs joined by
/// `edges` random unit-conductance connections.
BenchResult run_benchmark(const BenchConfig& config);

double median(std::vector<double> xs);

}  // namespace netginv
