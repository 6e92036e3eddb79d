#pragma once

#include "netginv/connect.hpp"
#include "netginv/network.hpp"

#include <random>

namespace netginv {

struct ConductanceRange {
  double lo = 1.0;
  double hi = 1.0;
};

/// G(n, p) graph, resampled until connected. Conductances are uniform in
/// [range.lo, range.hi] (exactly 1 for the default range).
Network random_connected_network(std::size_t n, double p, std::mt19937_64& rng, ConductanceRange range = {});

/// Edge probability that makes G(n, p) connected with high probability: min(1, 2 ln(n) / n).
double connected_edge_probability(std::size_t n);

/// `count` distinct connecting edges between uniformly random vertex pairs,
/// conductances uniform in `range`. Throws InvalidArgument if count > n1 * n2.
ConnectionSpec random_connection(std::size_t n1, std::size_t n2, std::size_t count, std::mt19937_64& rng,
                                 ConductanceRange range = {});

}  // namespace netginv
