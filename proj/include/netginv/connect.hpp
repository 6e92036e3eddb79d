#pragma once

#include "netginv/blockinv.hpp"
#include "netginv/network.hpp"

#include <vector>

namespace netginv {

/// New edge between vertex `x` of the first network and vertex `y` of the second.
struct Connection {
  std::size_t x = 0;
  std::size_t y = 0;
  double a = 0.0;

  friend bool operator==(const Connection&, const Connection&) = default;
};

struct ConnectionSpec {
  std::vector<Connection> edges;

  /// Throws EmptyConnection, IndexOutOfRange, DuplicateConnection, or
  /// InvalidArgument for a conductance that is not strictly positive.
  void validate(std::size_t n1, std::size_t n2) const;

  /// Distinct attachment vertices in each network, ascending.
  std::vector<std::size_t> attachments_first() const;
  std::vector<std::size_t> attachments_second() const;
};

/// Blocks of the composite Schrodinger matrix L'_p = [[H1, B], [B^T, H2]].
struct CouplingBlocks {
  SymmetricMatrix h1;
  SymmetricMatrix h2;
  Matrix b;
  Vector d1;  // diagonal of D1, length n1
  Vector d2;  // diagonal of D2, length n2
  /// rho(i, j) = sqrt(a(x_i, y_j) omega(x_i) omega(y_j)) over the attachment
  /// vertices attach1[i], attach2[j]; zero for unconnected pairs.
  Matrix rho;
  std::vector<std::size_t> attach1;
  std::vector<std::size_t> attach2;
  Weight omega;  // weight on the composite vertex set
  double lambda = 0.0;

  SymmetricMatrix assemble() const { return assemble_blocks(h1, b, h2); }
};

/// Composite network on V1 followed by V2 (second network's indices offset by n1).
/// Vertex weights carry over when both inputs have them; labels when both have them.
Network connect_networks(const Network& net1, const Network& net2, const ConnectionSpec& conn);

/// omega(x) = omega_i(x) / sqrt(||omega_1||^2 + ||omega_2||^2) = omega_i(x) / sqrt(2).
Weight merged_weight(const Weight& omega1, const Weight& omega2);

/// Coupling blocks for the composite weight merged from omega1 and omega2:
///   D1[k] = sum_j (omega(y_j) / omega(x_k)) a_kj,  D2[k] = sum_i (omega(x_i) / omega(y_k)) a_ik,
///   H_i = L^i + diag(p_i) + D_i with p_i = q_{omega_i} + lambda,  B[x, y] = -a(x, y).
CouplingBlocks coupling_blocks(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                               const Weight& omega1, const Weight& omega2, double lambda);

/// Same with an explicit weight on the composite vertex set (length n1 + n2).
/// The constant weight (1/sqrt(n)) ones gives D_i = attached conductance sums,
/// i.e. the plain composite Laplacian when lambda = 0.
CouplingBlocks coupling_blocks(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                               const Weight& composite_weight, double lambda);

/// Group inverse of the composite Laplacian through the block formula with
/// v = (1/sqrt(n)) ones(n1), w = (1/sqrt(n)) ones(n2), n = n1 + n2.
GroupInverseResult composite_group_inverse(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                                           const GroupInverseOptions& options = {});

/// Group inverse of the singular (lambda = 0) composite Schrodinger matrix for
/// arbitrary weights, with the merged weight as kernel vector.
GroupInverseResult composite_schrodinger_group_inverse(const Network& net1, const Network& net2,
                                                       const ConnectionSpec& conn, const Weight& omega1,
                                                       const Weight& omega2, const GroupInverseOptions& options = {});

/// Inverse of the nonsingular (lambda > 0) composite Schrodinger matrix via
/// block_inverse. Throws SingularSchur when lambda <= 0 or the Schur complement is singular.
SymmetricMatrix composite_schrodinger_inverse(const Network& net1, const Network& net2, const ConnectionSpec& conn,
                                              const Weight& omega1, const Weight& omega2, double lambda);

/// Group inverse of the composite Laplacian for a single bridge (p in V1, q in V2,
/// conductance a), exploiting B = -a e_p e_q^T: the Schur complement is
/// L1 + (a - a^2 H2^{-1}[q,q]) e_p e_p^T and every product with B is an outer product.
GroupInverseResult single_edge_group_inverse(const Network& net1, const Network& net2, std::size_t p, std::size_t q,
                                             double a, const GroupInverseOptions& options = {});

/// G[x,x] + G[y,y] - 2 G[x,y].
double effective_resistance(const SymmetricMatrix& g, std::size_t x, std::size_t y);

/// n trace(G), n the order of G.
double kirchhoff_index(const SymmetricMatrix& g);

}  // namespace netginv
