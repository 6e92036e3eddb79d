#include "netginv/random_network.hpp"

#include "netginv/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace netginv {

namespace {

double draw(std::mt19937_64& rng, ConductanceRange range) {
  if (range.lo == range.hi) return range.lo;
  return std::uniform_real_distribution<double>(range.lo, range.hi)(rng);
}

}  // namespace

double connected_edge_probability(std::size_t n) {
  if (n < 3) return 1.0;
  const double nd = static_cast<double>(n);
  return std::min(1.0, 2.0 * std::log(nd) / nd);
}

Network random_connected_network(std::size_t n, double p, std::mt19937_64& rng, ConductanceRange range) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "random network needs at least one vertex");
  if (!(p > 0.0) || p > 1.0) throw Error(ErrorCode::InvalidArgument, "edge probability must lie in (0, 1]");
  if (!(range.lo > 0.0) || range.hi < range.lo) throw Error(ErrorCode::InvalidArgument, "bad conductance range");
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (coin(rng)) edges.push_back({x, y, draw(rng, range)});
      }
    }
    Network net(n, std::move(edges));
    if (validate_network(net).ok) return net;
  }
}

ConnectionSpec random_connection(std::size_t n1, std::size_t n2, std::size_t count, std::mt19937_64& rng,
                                 ConductanceRange range) {
  if (count == 0 || count > n1 * n2) {
    throw Error(ErrorCode::InvalidArgument, "cannot pick " + std::to_string(count) + " distinct connecting edges");
  }
  std::uniform_int_distribution<std::size_t> pick1(0, n1 - 1);
  std::uniform_int_distribution<std::size_t> pick2(0, n2 - 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  ConnectionSpec conn;
  while (conn.edges.size() < count) {
    const std::size_t x = pick1(rng);
    const std::size_t y = pick2(rng);
    if (!seen.emplace(x, y).second) continue;
    conn.edges.push_back({x, y, draw(rng, range)});
  }
  return conn;
}

}  // namespace netginv
