#pragma once

#include "netginv/error.hpp"
#include "netginv/symmetric_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace netginv {

/// Undirected edge between vertices `x` and `y` with conductance `c`.
struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;
  double c = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted undirected network on vertices 0..n-1.
///
/// Construction only checks structure (indices in range, no repeated vertex
/// pair). Value-level invariants such as positive conductances, no loops and
/// connectivity are reported by validate_network() and enforced by every
/// operation that assembles a matrix.
class Network {
 public:
  Network() = default;

  /// Edges are stored with x <= y, sorted by (x, y). Throws IndexOutOfRange or
  /// DuplicateEdge. `labels` is either empty or has exactly n entries;
  /// `vertex_weights` (if present) holds raw positive values, unnormalized.
  Network(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {},
          std::optional<std::vector<double>> vertex_weights = std::nullopt);

  std::size_t order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<std::vector<double>>& vertex_weights() const noexcept { return weights_; }

  /// c(x, y); 0 for non-adjacent pairs.
  double conductance(std::size_t x, std::size_t y) const;

  /// Same network with every conductance multiplied by `t`.
  Network scaled(double t) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::optional<std::vector<double>> weights_;
};

/// Strictly positive vertex function normalized to unit Euclidean norm.
class Weight {
 public:
  /// Normalizes `values`; throws ZeroWeight when an entry is not strictly
  /// positive (or not finite) and InvalidArgument for an empty vector.
  explicit Weight(Vector values);

  /// (1/sqrt(n)) * ones.
  static Weight constant(std::size_t n);

  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  const Vector& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }

 private:
  Vector values_;
};

/// Vertex potential q together with the spectral shift lambda it was built for.
struct Potential {
  Vector values;
  double lambda = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::optional<ErrorCode> error;
  std::string message;
};

ValidationReport validate_network(const Network& net);

/// Throws the Error described by validate_network() when the network is invalid.
void require_valid(const Network& net);

/// Combinatorial Laplacian: L[x,x] = sum_y c(x,y), L[x,y] = -c(x,y).
SymmetricMatrix laplacian(const Network& net);

/// q(x) = -(L omega)(x) / omega(x) + lambda, so that (L + diag q) omega = lambda omega.
Potential potential_from_weight(const Network& net, const Weight& omega, double lambda);

/// L + diag(q).
SymmetricMatrix schrodinger_matrix(const Network& net, const Potential& q);

/// Matrix-vector product A u on vertex functions.
Vector apply_operator(const SymmetricMatrix& a, const Vector& u);

/// The network's own weight (normalized), or the constant weight when none was given.
Weight network_weight(const Network& net);

}  // namespace netginv
