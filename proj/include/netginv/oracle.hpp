#pragma once

// Slow reference implementations for verification. Nothing here shares a
// code path with the block formulas: the spectral route uses Eigen's
// self-adjoint eigensolver and the resistance route uses grounded Cholesky
// solves, while the formula path factors with LAPACK Bunch-Kaufman.

#include "netginv/network.hpp"
#include "netginv/symmetric_matrix.hpp"

namespace netginv::oracle {

struct SpectralDecomposition {
  Vector eigenvalues;  // ascending
  Matrix eigenvectors; // orthonormal columns
};

SpectralDecomposition spectral_decomposition(const SymmetricMatrix& a);

/// Relative kernel threshold: |lambda| <= kKernelThreshold * ||A||_F counts as zero.
inline constexpr double kKernelThreshold = 1e-10;

/// Q diag(1/lambda on the non-kernel eigenvalues, 0 otherwise) Q^T.
/// Throws KernelNotSimple when two or more eigenvalues fall under the threshold.
SymmetricMatrix group_inverse_spectral(const SymmetricMatrix& a);

/// Unit eigenvector of the (at most one) thresholded kernel eigenvalue, or an
/// empty vector if A is nonsingular at the threshold.
Vector spectral_kernel_vector(const SymmetricMatrix& a);

/// All-pairs effective resistances by injecting a unit current at x and
/// extracting it at y, with vertex `ground` held at potential 0.
/// Throws Disconnected (and the other validation errors).
SymmetricMatrix pairwise_resistance_bruteforce(const Network& net, std::size_t ground = 0);

}  // namespace netginv::oracle
