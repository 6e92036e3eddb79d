#include "netginv/connect.hpp"

#include "netginv/error.hpp"
#include "netginv/symmetric_factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace netginv {

namespace {

std::vector<std::size_t> distinct_sorted(std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void leave_residuals_unset(GroupInverseResult& r) {
  r.residual_commute = r.residual_projector = r.residual_kernel = std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

void ConnectionSpec::validate(std::size_t n1, std::size_t n2) const {
  if (edges.empty()) throw Error(ErrorCode::EmptyConnection, "at least one connecting edge is required");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.x >= n1 || e.y >= n2) {
      throw Error(ErrorCode::IndexOutOfRange, "connection (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                                                  ") outside networks of orders " + std::to_string(n1) + ", " +
                                                  std::to_string(n2));
    }
    if (!(e.a > 0.0) || !std::isfinite(e.a)) {
      throw Error(ErrorCode::InvalidArgument, "connection conductance must be strictly positive");
    }
    if (!seen.emplace(e.x, e.y).second) {
      throw Error(ErrorCode::DuplicateConnection,
                  "connection (" + std::to_string(e.x) + ", " + std::to_string(e.y) + ") given twice");
    }
  }
}

std::vector<std::size_t> ConnectionSpec::attachments_first() const {
  std::vector<std::size_t> xs;
  for (const auto& e : edges) xs.push_back(e.x);
  return distinct_sorted(std::move(xs));
}

std::vector<std::size_t> ConnectionSpec::attachments_second() const {
  std::vector<std::size_t> ys;
  for (const auto& e : edges) ys.push_back(e.y);
  return distinct_sorted(std::move(ys));
}

Network connect_networks(const Network& net1, const Network& net2, const ConnectionSpec& conn) {
  require_valid(net1);
  require_valid(net2);
  const std::size_t n1 = net1.order();
  conn.validate(n1, net2.order());

  std::vector<Edge> edges = net1.edges();
  for (const auto& e : net2.edges()) edges.push_back({e.x + n1, e.y + n1, e.c});
  for (const auto& c : conn.edges) edges.push_back({c.x, c.y + n1, c.a});

  std::vector<std::string> labels;
  if (!net1.labels().empty() && !net2.labels().empty()) {
    labels = net1.labels();
    labels.insert(labels.end(), net2.labels().begin(), net2.labels().end());
  }
  std::optional<std::vector<double>> weights;
  if (net1.vertex_weights() && net2.vertex_weights()) {
    const Weight merged = merged_weight(network_weight(net1), network_weight(net2));
    weights.emplace(merged.values().data(), merged.values().data() + merged.values().size());
  }
  return Network(n1 + net2.order(), std::move(edges), std::move(labels), std::move(weights));
}

Weight merged_weight(const Weight& omega1, const Weight& omega2) {
  const auto n1 = static_cast<Eigen::Index>(omega1.size());
  const auto n2 = static_cast<Eigen::Index>(omega2.size());
  const double norm = std::sqrt(omega1.values().squaredNorm() + omega2.values().squaredNorm());
  Vector values(n1 + n2);
  values << omega1.values() / norm, omega2.values() / norm;
  return Weight(std::move(values));
}

CouplingBlocks coupling_blocks(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                               const Weight& omega1, const Weight& omega2, double lambda) {
  return coupling_blocks(net1, net2, conn, merged_weight(omega1, omega2), lambda);
}

CouplingBlocks coupling_blocks(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                               const Weight& composite_weight, double lambda) {
  require_valid(net1);
  require_valid(net2);
  const std::size_t n1 = net1.order();
  const std::size_t n2 = net2.order();
  conn.validate(n1, n2);
  if (composite_weight.size() != n1 + n2) {
    throw Error(ErrorCode::DimensionMismatch, "composite weight must have n1 + n2 entries");
  }
  const Vector& omega = composite_weight.values();
  const auto i1 = static_cast<Eigen::Index>(n1);
  const auto i2 = static_cast<Eigen::Index>(n2);
  const auto off = [i1](std::size_t y) { return i1 + static_cast<Eigen::Index>(y); };

  Vector d1 = Vector::Zero(i1);
  Vector d2 = Vector::Zero(i2);
  Matrix b = Matrix::Zero(i1, i2);
  for (const auto& c : conn.edges) {
    const auto x = static_cast<Eigen::Index>(c.x);
    const auto y = static_cast<Eigen::Index>(c.y);
    d1(x) += omega(off(c.y)) / omega(x) * c.a;
    d2(y) += omega(x) / omega(off(c.y)) * c.a;
    b(x, y) = -c.a;
  }

  const Potential p1 = potential_from_weight(net1, Weight(omega.head(i1)), lambda);
  const Potential p2 = potential_from_weight(net2, Weight(omega.tail(i2)), lambda);
  Matrix h1 = schrodinger_matrix(net1, p1).matrix();
  Matrix h2 = schrodinger_matrix(net2, p2).matrix();
  h1.diagonal() += d1;
  h2.diagonal() += d2;

  auto attach1 = conn.attachments_first();
  auto attach2 = conn.attachments_second();
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(attach1.size()), static_cast<Eigen::Index>(attach2.size()));
  for (const auto& c : conn.edges) {
    const auto i = std::lower_bound(attach1.begin(), attach1.end(), c.x) - attach1.begin();
    const auto j = std::lower_bound(attach2.begin(), attach2.end(), c.y) - attach2.begin();
    rho(i, j) = std::sqrt(c.a * omega(static_cast<Eigen::Index>(c.x)) * omega(off(c.y)));
  }

  return CouplingBlocks{SymmetricMatrix::from_lower(h1),
                        SymmetricMatrix::from_lower(h2),
                        std::move(b),
                        std::move(d1),
                        std::move(d2),
                        std::move(rho),
                        std::move(attach1),
                        std::move(attach2),
                        composite_weight,
                        lambda};
}

GroupInverseResult composite_group_inverse(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                                           const GroupInverseOptions& options) {
  const std::size_t n = net1.order() + net2.order();
  const CouplingBlocks blocks = coupling_blocks(net1, net2, conn, Weight::constant(n), 0.0);
  const double entry = 1.0 / std::sqrt(static_cast<double>(n));
  BlockSystem sys{blocks.h1, blocks.h2, blocks.b,
                  Vector::Constant(static_cast<Eigen::Index>(net1.order()), entry),
                  Vector::Constant(static_cast<Eigen::Index>(net2.order()), entry)};
  return group_inverse_block(sys, options);
}

GroupInverseResult composite_schrodinger_group_inverse(const Network& net1, const Network& net2,
                                                       const ConnectionSpec& conn, const Weight& omega1,
                                                       const Weight& omega2, const GroupInverseOptions& options) {
  const CouplingBlocks blocks = coupling_blocks(net1, net2, conn, omega1, omega2, 0.0);
  const auto n1 = static_cast<Eigen::Index>(net1.order());
  const auto n2 = static_cast<Eigen::Index>(net2.order());
  BlockSystem sys{blocks.h1, blocks.h2, blocks.b, blocks.omega.values().head(n1), blocks.omega.values().tail(n2)};
  return group_inverse_block(sys, options);
}

SymmetricMatrix composite_schrodinger_inverse(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                                              const Weight& omega1, const Weight& omega2, double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::SingularSchur, "the composite Schrodinger matrix is singular for lambda = 0");
  }
  const CouplingBlocks blocks = coupling_blocks(net1, net2, conn, omega1, omega2, lambda);
  return block_inverse(blocks.h1, blocks.b, blocks.h2);
}

GroupInverseResult single_edge_group_inverse(const Network& net1, const Network& net2, std::size_t p, std::size_t q,
                                             double a, const GroupInverseOptions& options) {
  const ConnectionSpec conn{{{p, q, a}}};
  require_valid(net1);
  require_valid(net2);
  conn.validate(net1.order(), net2.order());

  const auto n1 = static_cast<Eigen::Index>(net1.order());
  const auto n2 = static_cast<Eigen::Index>(net2.order());
  const auto ip = static_cast<Eigen::Index>(p);
  const auto iq = static_cast<Eigen::Index>(q);
  const double entry = 1.0 / std::sqrt(static_cast<double>(n1 + n2));
  const Vector v = Vector::Constant(n1, entry);
  const Vector w = Vector::Constant(n2, entry);

  Matrix h1 = laplacian(net1).matrix();
  Matrix h2 = laplacian(net2).matrix();
  h1(ip, ip) += a;
  h2(iq, iq) += a;
  const auto h2f = factorize_nonsingular(SymmetricMatrix::from_lower(h2), ErrorCode::SingularH2, "H2");
  const SymmetricMatrix h2_inverse = h2f.inverse();
  const Matrix& h2_inv = h2_inverse.matrix();

  // B H2^{-1} B^T = a^2 H2^{-1}[q,q] e_p e_p^T
  Matrix s = h1;
  s(ip, ip) -= a * a * h2_inv(iq, iq);
  const SymmetricMatrix s_ginv =
      group_inverse_deflation(SymmetricMatrix::from_lower(s), v, inf_norm(h1));
  const Matrix& sg = s_ginv.matrix();

  // With g = H2^{-1} e_q: H2^{-1} B^T = -a g e_p^T and w^T H2^{-1} B^T = -a (g.w) e_p^T.
  const Vector g = h2_inv.col(iq);
  const Vector z = h2_inv * w;
  const double coeff = -a * g.dot(w);

  Matrix p_sg = sg;  // P S# = S# + coeff v S#[p,:]
  p_sg.noalias() += (coeff * v) * sg.col(ip).transpose();
  const Vector p_sg_p = p_sg.col(ip);

  Matrix x1 = p_sg;
  x1.noalias() += (coeff * p_sg_p) * v.transpose();
  x1.noalias() += (w.dot(z) * v) * v.transpose();

  Matrix k = h2_inv;
  k.noalias() += (a * a * sg(ip, ip) * g) * g.transpose();
  const Vector kw = k * w;
  Matrix x2 = k;
  x2.noalias() -= w * kw.transpose();
  x2.noalias() -= kw * w.transpose();
  x2.noalias() += (w.dot(kw) * w) * w.transpose();

  Matrix c = -(v * z.transpose());
  c.noalias() += (a * p_sg_p) * g.transpose();
  const Vector cw = c * w;
  c.noalias() -= cw * w.transpose();

  Matrix ginv(n1 + n2, n1 + n2);
  ginv.topLeftCorner(n1, n1) = x1;
  ginv.topRightCorner(n1, n2) = c;
  ginv.bottomLeftCorner(n2, n1) = c.transpose();
  ginv.bottomRightCorner(n2, n2) = x2;

  Vector u(n1 + n2);
  u << v, w;
  GroupInverseResult result;
  result.ginv = SymmetricMatrix::symmetrize(ginv);
  result.eigvec = u;
  result.h2_rcond = h2f.rcond();
  if (options.compute_residuals) {
    Matrix b = Matrix::Zero(n1, n2);
    b(ip, iq) = -a;
    fill_residuals(assemble_blocks(SymmetricMatrix::from_lower(h1), b, SymmetricMatrix::from_lower(h2)), result);
  } else {
    leave_residuals_unset(result);
  }
  return result;
}

double effective_resistance(const SymmetricMatrix& g, std::size_t x, std::size_t y) {
  if (x >= g.order() || y >= g.order()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range for a group inverse of order " +
                                                std::to_string(g.order()));
  }
  if (x == y) return 0.0;
  return g(x, x) + g(y, y) - 2.0 * g(x, y);
}

double kirchhoff_index(const SymmetricMatrix& g) {
  return static_cast<double>(g.order()) * g.matrix().trace();
}

}  // namespace netginv
