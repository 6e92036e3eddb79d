#include "netginv/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace netginv {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

ValidationReport failure(ErrorCode code, std::string message) {
  return ValidationReport{false, code, std::move(message)};
}

}  // namespace

Network::Network(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels,
                 std::optional<std::vector<double>> vertex_weights)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)), weights_(std::move(vertex_weights)) {
  for (auto& e : edges_) {
    if (e.x >= n_ || e.y >= n_) {
      throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                                                  ") outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (e.x > e.y) std::swap(e.x, e.y);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.x == b.x && a.y == b.y;
  });
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->x) + ", " + std::to_string(dup->y) + ") given twice");
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n_) + " labels");
  }
  if (weights_ && weights_->size() != n_) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(n_) + " vertex weights");
  }
}

double Network::conductance(std::size_t x, std::size_t y) const {
  if (x >= n_ || y >= n_) throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range");
  if (x > y) std::swap(x, y);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{x, y},
                                   [](const Edge& e, const std::pair<std::size_t, std::size_t>& key) {
                                     return e.x != key.first ? e.x < key.first : e.y < key.second;
                                   });
  if (it != edges_.end() && it->x == x && it->y == y) return it->c;
  return 0.0;
}

Network Network::scaled(double t) const {
  std::vector<Edge> edges = edges_;
  for (auto& e : edges) e.c *= t;
  return Network(n_, std::move(edges), labels_, weights_);
}

Weight::Weight(Vector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw Error(ErrorCode::InvalidArgument, "weight on an empty vertex set");
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    if (!(values_(i) > 0.0) || !std::isfinite(values_(i))) {
      throw Error(ErrorCode::ZeroWeight, "weight at vertex " + std::to_string(i) + " is not strictly positive");
    }
  }
  values_ /= values_.norm();
}

Weight Weight::constant(std::size_t n) {
  return Weight(Vector::Ones(static_cast<Eigen::Index>(n)));
}

ValidationReport validate_network(const Network& net) {
  if (net.order() == 0) return failure(ErrorCode::InvalidArgument, "network has no vertices");
  DisjointSets sets(net.order());
  std::size_t components = net.order();
  for (const auto& e : net.edges()) {
    if (e.x == e.y) return failure(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.x));
    if (!std::isfinite(e.c)) {
      return failure(ErrorCode::InvalidArgument,
                     "non-finite conductance on edge (" + std::to_string(e.x) + ", " + std::to_string(e.y) + ")");
    }
    if (e.c < 0.0) {
      return failure(ErrorCode::NegativeConductance,
                     "conductance " + std::to_string(e.c) + " on edge (" + std::to_string(e.x) + ", " +
                         std::to_string(e.y) + ")");
    }
    if (e.c > 0.0 && sets.unite(e.x, e.y)) --components;
  }
  if (components != 1) {
    return failure(ErrorCode::Disconnected, std::to_string(components) + " connected components");
  }
  return {};
}

void require_valid(const Network& net) {
  const auto report = validate_network(net);
  if (!report.ok) throw Error(*report.error, report.message);
}

SymmetricMatrix laplacian(const Network& net) {
  require_valid(net);
  const auto n = static_cast<Eigen::Index>(net.order());
  Matrix lower = Matrix::Zero(n, n);
  for (const auto& e : net.edges()) {
    const auto x = static_cast<Eigen::Index>(e.x);
    const auto y = static_cast<Eigen::Index>(e.y);
    lower(y, x) -= e.c;
    lower(x, x) += e.c;
    lower(y, y) += e.c;
  }
  return SymmetricMatrix::from_lower(lower);
}

Potential potential_from_weight(const Network& net, const Weight& omega, double lambda) {
  if (omega.size() != net.order()) {
    throw Error(ErrorCode::DimensionMismatch, "weight has " + std::to_string(omega.size()) +
                                                  " entries, network has " + std::to_string(net.order()));
  }
  const Vector l_omega = laplacian(net).matrix() * omega.values();
  Potential q;
  q.lambda = lambda;
  q.values = -l_omega.cwiseQuotient(omega.values()).array() + lambda;
  return q;
}

SymmetricMatrix schrodinger_matrix(const Network& net, const Potential& q) {
  if (static_cast<std::size_t>(q.values.size()) != net.order()) {
    throw Error(ErrorCode::DimensionMismatch, "potential has " + std::to_string(q.values.size()) +
                                                  " entries, network has " + std::to_string(net.order()));
  }
  Matrix m = laplacian(net).matrix();
  m.diagonal() += q.values;
  return SymmetricMatrix::from_lower(m);
}

Vector apply_operator(const SymmetricMatrix& a, const Vector& u) {
  if (static_cast<std::size_t>(u.size()) != a.order()) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(u.size()) +
                                                  " for operator of order " + std::to_string(a.order()));
  }
  return a.matrix() * u;
}

Weight network_weight(const Network& net) {
  if (net.vertex_weights()) {
    return Weight(Eigen::Map<const Vector>(net.vertex_weights()->data(),
                                           static_cast<Eigen::Index>(net.order())));
  }
  return Weight::constant(net.order());
}

}  // namespace netginv
