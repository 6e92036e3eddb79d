#pragma once

#include "netginv/symmetric_factorization.hpp"
#include "netginv/symmetric_matrix.hpp"

#include <optional>

namespace netginv {

/// A symmetric matrix partitioned as A = [[H1, B], [B^T, H2]] together with
/// the two pieces (v, w) of a unit kernel vector u = (v, w) of A.
struct BlockSystem {
  SymmetricMatrix h1;
  SymmetricMatrix h2;
  Matrix b;
  Vector v;
  Vector w;

  std::size_t n() const noexcept { return h1.order(); }
  std::size_t m() const noexcept { return h2.order(); }

  SymmetricMatrix assemble() const;
  Vector kernel_vector() const;
};

/// Assembles [[h1, b], [b^T, h2]]; throws DimensionMismatch on bad shapes.
SymmetricMatrix assemble_blocks(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2);

struct GroupInverseResult {
  SymmetricMatrix ginv;
  Vector eigvec;
  double residual_commute = 0.0;    // ||A G - G A||_F
  double residual_projector = 0.0;  // ||A G - (I - u u^T)||_F
  double residual_kernel = 0.0;     // ||G u||_2
  /// Reciprocal condition estimate of the factored diagonal block (H2), when one was factored.
  std::optional<double> h2_rcond;
};

struct GroupInverseOptions {
  /// Skip the O(N^3) residual products; residual fields are then left as NaN.
  bool compute_residuals = true;
};

/// Fills the commute, projector and kernel residuals of `result` against `a`.
void fill_residuals(const SymmetricMatrix& a, GroupInverseResult& result);

/// S = H1 - B H2^{-1} B^T. Throws SingularH2 or DimensionMismatch.
SymmetricMatrix schur_complement(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2);

/// Inverse of the assembled block matrix from the blocks S^{-1}, -S^{-1} B H2^{-1}
/// and H2^{-1}(H2 + B^T S^{-1} B) H2^{-1}. Throws SingularH2 or SingularSchur.
SymmetricMatrix block_inverse(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2);

/// Inverse assembled from both Schur complements:
/// [[S^{-1}, -H1^{-1} B Shat^{-1}], [-H2^{-1} B^T S^{-1}, Shat^{-1}]] with
/// Shat = H2 - B^T H1^{-1} B. Throws SingularH1, SingularH2 or SingularSchur.
SymmetricMatrix block_inverse_sym(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2);

/// Group inverse of a symmetric matrix S with simple kernel spanned by v,
/// computed as (S + beta vh vh^T)^{-1} - vh vh^T / beta with vh = v / ||v||.
///
/// `reference_scale` is the magnitude against which S is judged negligible
/// (for a Schur complement this is ||H1||_inf, since S arises by cancellation).
/// beta = ||S||_inf unless ||S||_inf <= 1e-12 * reference_scale, in which case
/// beta = reference_scale (or 1 when that is zero too). The kernel check is
/// ||S vh|| <= 1e-8 * max(||S||_F, reference_scale) and the simplicity check is
/// min pivot of the shifted factorization > 1e-12 * beta.
/// Throws NotKernelVector or KernelNotSimple.
SymmetricMatrix group_inverse_deflation(const SymmetricMatrix& s, const Vector& v, double reference_scale = 0.0);

/// Block group inverse of a singular symmetric A = [[H1, B], [B^T, H2]] with
/// simple zero eigenvalue, given its unit kernel vector (v, w) and invertible H2.
/// Throws SingularH2, NotKernelVector, KernelNotSimple, DimensionMismatch or
/// InvalidArgument (u not of unit norm).
GroupInverseResult group_inverse_block(const BlockSystem& sys, const GroupInverseOptions& options = {});

/// The block assembly used by group_inverse_block, given H2^{-1} and a
/// generalized inverse `s_ginv` of the Schur complement:
///   P  = I + v w^T H2^{-1} B^T
///   X1 = P S# P^T + (w^T H2^{-1} w) v v^T
///   X2 = Q (H2^{-1} + H2^{-1} B^T S# B H2^{-1}) Q,          Q = I - w w^T
///   C  = -(v w^T + P S# B) H2^{-1} Q
/// With v = w = 0 and s_ginv = S^{-1} this is the ordinary block inverse.
SymmetricMatrix assemble_block_group_inverse(const Matrix& b, const SymmetricMatrix& h2_inverse,
                                             const SymmetricMatrix& s_ginv, const Vector& v, const Vector& w);

/// Same as group_inverse_block for the bordered case m = 1, A = [[H, s], [s^T, alpha]],
/// through the scalar formulas with M = I + (w / alpha) v s^T. Throws ZeroAlpha,
/// NotKernelVector, KernelNotSimple.
GroupInverseResult group_inverse_bordered(const SymmetricMatrix& h, const Vector& s, double alpha, const Vector& u,
                                          const GroupInverseOptions& options = {});

struct VerificationReport {
  double residual_projector = 0.0;  // ||A G - (I - u u^T)||_F
  double residual_commute = 0.0;    // ||A G - G A||_F
  double residual_symmetry = 0.0;   // ||G - G^T||_F
  double residual_kernel = 0.0;     // ||G u||_2
  bool passed = false;
};

/// Checks G against the characterization A G = G A = I - u u^T, G = G^T, G u = 0.
/// Passes when every residual is <= tol. Dimension problems produce a failed
/// report with infinite residuals rather than an exception.
VerificationReport verify_group_inverse(const Matrix& a, const Matrix& g, const Vector& u, double tol);

}  // namespace netginv
