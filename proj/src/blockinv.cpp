#include "netginv/blockinv.hpp"

#include "netginv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace netginv {

namespace {

constexpr double kKernelTolerance = 1e-8;   // ||A u|| <= tol ||A||_F ||u||
constexpr double kUnitTolerance = 1e-10;    // | ||u|| - 1 |
constexpr double kNegligibleScale = 1e-12;  // S negligible against its reference scale
constexpr double kPivotTolerance = 1e-12;   // min pivot of the shifted matrix, relative to beta
constexpr double kSchurPivotTolerance = 1e-13;

void require_blocks(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2) {
  if (static_cast<std::size_t>(b.rows()) != h1.order() || static_cast<std::size_t>(b.cols()) != h2.order()) {
    throw Error(ErrorCode::DimensionMismatch,
                "B is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " but H1, H2 have orders " +
                    std::to_string(h1.order()) + ", " + std::to_string(h2.order()));
  }
}

// Factors S and rejects it when singular in absolute terms or relative to
// the scale of H1 it was obtained from by cancellation.
SymmetricFactorization factorize_schur(const SymmetricMatrix& s, double reference_scale) {
  auto f = factorize_nonsingular(s, ErrorCode::SingularSchur, "Schur complement");
  if (f.min_pivot() <= kSchurPivotTolerance * reference_scale) {
    throw Error(ErrorCode::SingularSchur, "Schur complement is negligible against the diagonal block");
  }
  return f;
}

// P G P with P = I - vh vh^T, in O(n^2).
Matrix project_out(const Matrix& g, const Vector& vh) {
  const Vector gv = g * vh;
  const double vgv = vh.dot(gv);
  Matrix out = g;
  out.noalias() -= vh * gv.transpose();
  out.noalias() -= gv * vh.transpose();
  out.noalias() += (vgv * vh) * vh.transpose();
  return out;
}

}  // namespace

SymmetricMatrix assemble_blocks(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2) {
  require_blocks(h1, b, h2);
  const auto n = static_cast<Eigen::Index>(h1.order());
  const auto m = static_cast<Eigen::Index>(h2.order());
  Matrix a(n + m, n + m);
  a.topLeftCorner(n, n) = h1.matrix();
  a.topRightCorner(n, m) = b;
  a.bottomLeftCorner(m, n) = b.transpose();
  a.bottomRightCorner(m, m) = h2.matrix();
  return SymmetricMatrix::from_lower(a);
}

SymmetricMatrix BlockSystem::assemble() const { return assemble_blocks(h1, b, h2); }

Vector BlockSystem::kernel_vector() const {
  Vector u(v.size() + w.size());
  u << v, w;
  return u;
}

void fill_residuals(const SymmetricMatrix& a, GroupInverseResult& result) {
  const auto report = verify_group_inverse(a.matrix(), result.ginv.matrix(), result.eigvec,
                                           std::numeric_limits<double>::infinity());
  result.residual_commute = report.residual_commute;
  result.residual_projector = report.residual_projector;
  result.residual_kernel = report.residual_kernel;
}

SymmetricMatrix schur_complement(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2) {
  require_blocks(h1, b, h2);
  const auto h2f = factorize_nonsingular(h2, ErrorCode::SingularH2, "H2");
  const Matrix y = h2f.solve(Matrix(b.transpose()));
  return SymmetricMatrix::symmetrize(h1.matrix() - b * y);
}

SymmetricMatrix block_inverse(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2) {
  require_blocks(h1, b, h2);
  const auto h2f = factorize_nonsingular(h2, ErrorCode::SingularH2, "H2");
  const SymmetricMatrix h2_inv = h2f.inverse();
  const Matrix y = h2_inv.matrix() * b.transpose();  // H2^{-1} B^T
  const SymmetricMatrix s = SymmetricMatrix::symmetrize(h1.matrix() - b * y);
  const SymmetricMatrix s_inv = factorize_schur(s, h1.inf_norm()).inverse();

  const auto n = static_cast<Eigen::Index>(h1.order());
  const auto m = static_cast<Eigen::Index>(h2.order());
  Matrix a_inv(n + m, n + m);
  a_inv.topLeftCorner(n, n) = s_inv.matrix();
  a_inv.bottomLeftCorner(m, n) = -y * s_inv.matrix();
  a_inv.bottomRightCorner(m, m) = h2_inv.matrix() + y * s_inv.matrix() * y.transpose();
  return SymmetricMatrix::from_lower(a_inv);
}

SymmetricMatrix block_inverse_sym(const SymmetricMatrix& h1, const Matrix& b, const SymmetricMatrix& h2) {
  require_blocks(h1, b, h2);
  const auto h1f = factorize_nonsingular(h1, ErrorCode::SingularH1, "H1");
  const auto h2f = factorize_nonsingular(h2, ErrorCode::SingularH2, "H2");
  const Matrix h1_inv_b = h1f.solve(b);                       // H1^{-1} B
  const Matrix h2_inv_bt = h2f.solve(Matrix(b.transpose()));  // H2^{-1} B^T
  const SymmetricMatrix s = SymmetricMatrix::symmetrize(h1.matrix() - b * h2_inv_bt);
  const SymmetricMatrix s_hat = SymmetricMatrix::symmetrize(h2.matrix() - b.transpose() * h1_inv_b);
  const SymmetricMatrix s_inv = factorize_schur(s, h1.inf_norm()).inverse();
  const SymmetricMatrix s_hat_inv = factorize_schur(s_hat, h2.inf_norm()).inverse();

  const auto n = static_cast<Eigen::Index>(h1.order());
  const auto m = static_cast<Eigen::Index>(h2.order());
  Matrix a_inv(n + m, n + m);
  a_inv.topLeftCorner(n, n) = s_inv.matrix();
  a_inv.topRightCorner(n, m) = -h1_inv_b * s_hat_inv.matrix();
  a_inv.bottomLeftCorner(m, n) = -h2_inv_bt * s_inv.matrix();
  a_inv.bottomRightCorner(m, m) = s_hat_inv.matrix();
  return SymmetricMatrix::symmetrize(a_inv);
}

SymmetricMatrix group_inverse_deflation(const SymmetricMatrix& s, const Vector& v, double reference_scale) {
  if (static_cast<std::size_t>(v.size()) != s.order()) {
    throw Error(ErrorCode::DimensionMismatch, "kernel vector length does not match matrix order");
  }
  const double v_norm = v.norm();
  if (!(v_norm > 0.0) || !std::isfinite(v_norm)) {
    throw Error(ErrorCode::NotKernelVector, "kernel vector is zero or not finite");
  }
  const Vector vh = v / v_norm;
  const double scale = std::max(reference_scale, 0.0);
  const double s_inf = s.inf_norm();

  const double kernel_residual = (s.matrix() * vh).norm();
  if (kernel_residual > kKernelTolerance * std::max(s.frobenius_norm(), scale)) {
    throw Error(ErrorCode::NotKernelVector, "||S v|| = " + std::to_string(kernel_residual));
  }

  double beta = s_inf;
  if (s_inf <= kNegligibleScale * scale || s_inf == 0.0) beta = scale > 0.0 ? scale : 1.0;

  Matrix shifted = s.matrix();
  shifted.noalias() += (beta * vh) * vh.transpose();
  const auto f = SymmetricFactorization::factorize(SymmetricMatrix::symmetrize(shifted));
  if (!f || f->min_pivot() <= kPivotTolerance * beta) {
    throw Error(ErrorCode::KernelNotSimple, "matrix stays singular after deflating the given kernel vector");
  }
  Matrix g = f->inverse().matrix();
  g.noalias() -= (vh / beta) * vh.transpose();
  return SymmetricMatrix::symmetrize(project_out(g, vh));
}

SymmetricMatrix assemble_block_group_inverse(const Matrix& b, const SymmetricMatrix& h2_inverse,
                                             const SymmetricMatrix& s_ginv, const Vector& v, const Vector& w) {
  const auto n = static_cast<Eigen::Index>(s_ginv.order());
  const auto m = static_cast<Eigen::Index>(h2_inverse.order());
  if (b.rows() != n || b.cols() != m || v.size() != n || w.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent block shapes in group inverse assembly");
  }
  const Matrix& h2_inv = h2_inverse.matrix();
  const Matrix& sg = s_ginv.matrix();

  const Matrix y = h2_inv * b.transpose();  // H2^{-1} B^T, m x n
  const Vector z = h2_inv * w;              // H2^{-1} w
  const Vector r = y.transpose() * w;       // (w^T H2^{-1} B^T)^T, so P = I + v r^T

  // P S#, then X1 = (P S#) P^T + (w^T z) v v^T
  Matrix p_sg = sg;
  p_sg.noalias() += v * (sg * r).transpose();
  Matrix x1 = p_sg;
  x1.noalias() += (p_sg * r) * v.transpose();
  x1.noalias() += (w.dot(z) * v) * v.transpose();

  // X2 = Q K Q with K = H2^{-1} + H2^{-1} B^T S# B H2^{-1} = H2^{-1} + Y S# Y^T
  Matrix k = h2_inv;
  k.noalias() += y * (sg * y.transpose());
  const Vector kw = k * w;
  const double wkw = w.dot(kw);
  Matrix x2 = k;
  x2.noalias() -= w * kw.transpose();
  x2.noalias() -= kw * w.transpose();
  x2.noalias() += (wkw * w) * w.transpose();

  // C = -(v z^T + P S# B H2^{-1}) Q, and B H2^{-1} = Y^T
  Matrix c = -(v * z.transpose());
  c.noalias() -= p_sg * y.transpose();
  const Vector cw = c * w;
  c.noalias() -= cw * w.transpose();

  Matrix g(n + m, n + m);
  g.topLeftCorner(n, n) = x1;
  g.topRightCorner(n, m) = c;
  g.bottomLeftCorner(m, n) = c.transpose();
  g.bottomRightCorner(m, m) = x2;
  return SymmetricMatrix::symmetrize(g);
}

GroupInverseResult group_inverse_block(const BlockSystem& sys, const GroupInverseOptions& options) {
  require_blocks(sys.h1, sys.b, sys.h2);
  if (static_cast<std::size_t>(sys.v.size()) != sys.n() || static_cast<std::size_t>(sys.w.size()) != sys.m()) {
    throw Error(ErrorCode::DimensionMismatch, "kernel vector pieces do not match the block sizes");
  }
  const Vector u = sys.kernel_vector();
  if (std::abs(u.norm() - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::InvalidArgument, "kernel vector must have unit norm, got " + std::to_string(u.norm()));
  }

  const double a_norm = std::sqrt(sys.h1.matrix().squaredNorm() + 2.0 * sys.b.squaredNorm() +
                                  sys.h2.matrix().squaredNorm());
  const Vector au_top = sys.h1.matrix() * sys.v + sys.b * sys.w;
  const Vector au_bottom = sys.b.transpose() * sys.v + sys.h2.matrix() * sys.w;
  const double au = std::sqrt(au_top.squaredNorm() + au_bottom.squaredNorm());
  if (au > kKernelTolerance * a_norm) {
    throw Error(ErrorCode::NotKernelVector, "||A u|| = " + std::to_string(au));
  }

  const auto h2f = factorize_nonsingular(sys.h2, ErrorCode::SingularH2, "H2");
  const SymmetricMatrix h2_inv = h2f.inverse();
  const SymmetricMatrix s = SymmetricMatrix::symmetrize(sys.h1.matrix() - sys.b * (h2_inv.matrix() * sys.b.transpose()));
  const SymmetricMatrix s_ginv = group_inverse_deflation(s, sys.v, sys.h1.inf_norm());

  GroupInverseResult result;
  result.ginv = assemble_block_group_inverse(sys.b, h2_inv, s_ginv, sys.v, sys.w);
  result.eigvec = u;
  result.h2_rcond = h2f.rcond();
  if (options.compute_residuals) {
    fill_residuals(sys.assemble(), result);
  } else {
    result.residual_commute = result.residual_projector = result.residual_kernel =
        std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

GroupInverseResult group_inverse_bordered(const SymmetricMatrix& h, const Vector& s, double alpha, const Vector& u,
                                          const GroupInverseOptions& options) {
  if (alpha == 0.0) throw Error(ErrorCode::ZeroAlpha, "corner entry alpha must be nonzero");
  const auto n = static_cast<Eigen::Index>(h.order());
  if (s.size() != n || u.size() != n + 1) {
    throw Error(ErrorCode::DimensionMismatch, "bordered system needs |s| = n and |u| = n + 1");
  }
  if (std::abs(u.norm() - 1.0) > kUnitTolerance) {
    throw Error(ErrorCode::InvalidArgument, "kernel vector must have unit norm, got " + std::to_string(u.norm()));
  }
  const Vector v = u.head(n);
  const double w = u(n);

  const double a_norm = std::sqrt(h.matrix().squaredNorm() + 2.0 * s.squaredNorm() + alpha * alpha);
  const Vector au_top = h.matrix() * v + s * w;
  const double au_bottom = s.dot(v) + alpha * w;
  const double au = std::sqrt(au_top.squaredNorm() + au_bottom * au_bottom);
  if (au > kKernelTolerance * a_norm) {
    throw Error(ErrorCode::NotKernelVector, "||A u|| = " + std::to_string(au));
  }

  Matrix schur = h.matrix();
  schur.noalias() -= (s / alpha) * s.transpose();
  const SymmetricMatrix s_ginv = group_inverse_deflation(SymmetricMatrix::symmetrize(schur), v, h.inf_norm());
  const Matrix& sg = s_ginv.matrix();

  // M = I + (w / alpha) v s^T
  const double t = w / alpha;
  Matrix m_sg = sg;
  m_sg.noalias() += (t * v) * (sg * s).transpose();
  Matrix x1 = m_sg;
  x1.noalias() += (m_sg * s) * (t * v).transpose();
  x1.noalias() += ((w * w / alpha) * v) * v.transpose();

  const double one_minus = 1.0 - w * w;
  const Vector c = -(one_minus / alpha) * (w * v + m_sg * s);
  const double x2 = one_minus * one_minus / (alpha * alpha) * (alpha + s.dot(sg * s));

  Matrix g(n + 1, n + 1);
  g.topLeftCorner(n, n) = x1;
  g.topRightCorner(n, 1) = c;
  g.bottomLeftCorner(1, n) = c.transpose();
  g(n, n) = x2;

  GroupInverseResult result;
  result.ginv = SymmetricMatrix::symmetrize(g);
  result.eigvec = u;
  if (options.compute_residuals) {
    Matrix corner(1, 1);
    corner(0, 0) = alpha;
    fill_residuals(assemble_blocks(h, Matrix(s), SymmetricMatrix::from_lower(corner)), result);
  } else {
    result.residual_commute = result.residual_projector = result.residual_kernel =
        std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

VerificationReport verify_group_inverse(const Matrix& a, const Matrix& g, const Vector& u, double tol) {
  VerificationReport report;
  const auto n = a.rows();
  if (a.cols() != n || g.rows() != n || g.cols() != n || u.size() != n) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    report.residual_projector = report.residual_commute = report.residual_symmetry = report.residual_kernel = inf;
    report.passed = false;
    return report;
  }
  const Matrix ag = a * g;
  const Matrix ga = g * a;
  Matrix projector = -(u * u.transpose());
  projector.diagonal().array() += 1.0;
  report.residual_projector = (ag - projector).norm();
  report.residual_commute = (ag - ga).norm();
  report.residual_symmetry = (g - g.transpose()).norm();
  report.residual_kernel = (g * u).norm();
  report.passed = report.residual_projector <= tol && report.residual_commute <= tol &&
                  report.residual_symmetry <= tol && report.residual_kernel <= tol;
  return report;
}

}  // namespace netginv
