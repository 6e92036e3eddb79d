#include "netginv/oracle.hpp"

#include "netginv/error.hpp"

#include <cmath>
#include <string>

namespace netginv::oracle {

SpectralDecomposition spectral_decomposition(const SymmetricMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

struct Thresholded {
  SpectralDecomposition spectrum;
  Eigen::Index kernel_count = 0;
  Eigen::Index kernel_index = -1;
};

Thresholded threshold(const SymmetricMatrix& a) {
  Thresholded t{spectral_decomposition(a)};
  const double cutoff = kKernelThreshold * a.frobenius_norm();
  for (Eigen::Index i = 0; i < t.spectrum.eigenvalues.size(); ++i) {
    if (std::abs(t.spectrum.eigenvalues(i)) <= cutoff) {
      ++t.kernel_count;
      t.kernel_index = i;
    }
  }
  if (t.kernel_count > 1) {
    throw Error(ErrorCode::KernelNotSimple,
                std::to_string(t.kernel_count) + " eigenvalues below the kernel threshold");
  }
  return t;
}

}  // namespace

SymmetricMatrix group_inverse_spectral(const SymmetricMatrix& a) {
  const Thresholded t = threshold(a);
  Vector inv = t.spectrum.eigenvalues.cwiseInverse();
  if (t.kernel_index >= 0) inv(t.kernel_index) = 0.0;
  const Matrix& q = t.spectrum.eigenvectors;
  return SymmetricMatrix::symmetrize(q * inv.asDiagonal() * q.transpose());
}

Vector spectral_kernel_vector(const SymmetricMatrix& a) {
  const Thresholded t = threshold(a);
  if (t.kernel_index < 0) return Vector();
  return t.spectrum.eigenvectors.col(t.kernel_index);
}

SymmetricMatrix pairwise_resistance_bruteforce(const Network& net, std::size_t ground) {
  require_valid(net);
  const std::size_t n = net.order();
  if (ground >= n) throw Error(ErrorCode::IndexOutOfRange, "ground vertex out of range");
  Matrix r = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (n == 1) return SymmetricMatrix::from_lower(r);

  // Grounded Laplacian: drop the row and column of `ground`.
  const auto keep = [&](std::size_t x) { return static_cast<Eigen::Index>(x < ground ? x : x - 1); };
  const auto m = static_cast<Eigen::Index>(n - 1);
  Matrix grounded = Matrix::Zero(m, m);
  for (const auto& e : net.edges()) {
    if (e.x != ground) grounded(keep(e.x), keep(e.x)) += e.c;
    if (e.y != ground) grounded(keep(e.y), keep(e.y)) += e.c;
    if (e.x != ground && e.y != ground) {
      grounded(keep(e.x), keep(e.y)) -= e.c;
      grounded(keep(e.y), keep(e.x)) -= e.c;
    }
  }
  const Eigen::LLT<Matrix> llt(grounded);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::Disconnected, "grounded Laplacian is not positive definite");

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Vector current = Vector::Zero(m);
      if (x != ground) current(keep(x)) += 1.0;
      if (y != ground) current(keep(y)) -= 1.0;
      const Vector potential = llt.solve(current);
      const double px = x == ground ? 0.0 : potential(keep(x));
      const double py = y == ground ? 0.0 : potential(keep(y));
      r(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = px - py;
    }
  }
  return SymmetricMatrix::from_lower(r);
}

}  // namespace netginv::oracle
