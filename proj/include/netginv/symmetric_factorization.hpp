#pragma once

#include "netginv/error.hpp"
#include "netginv/symmetric_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netginv {

/// Bunch-Kaufman factorization P A P^T = L D L^T of a dense symmetric
/// (possibly indefinite) matrix, backed by LAPACK dsytrf.
class SymmetricFactorization {
 public:
  /// Returns nullopt when LAPACK reports an exactly zero pivot block.
  static std::optional<SymmetricFactorization> factorize(const SymmetricMatrix& a);

  std::size_t order() const noexcept { return static_cast<std::size_t>(factors_.rows()); }

  Matrix solve(const Matrix& rhs) const;
  Vector solve(const Vector& rhs) const;
  SymmetricMatrix inverse() const;

  /// Smallest eigenvalue magnitude over the 1x1 and 2x2 pivot blocks of D.
  double min_pivot() const noexcept { return min_pivot_; }

  /// LAPACK dsycon estimate of 1 / (||A||_1 ||A^-1||_1).
  double rcond() const noexcept { return rcond_; }

 private:
  SymmetricFactorization() = default;

  Matrix factors_;  // column-major, lower triangle holds L and D
  std::vector<int> pivots_;
  double min_pivot_ = 0.0;
  double rcond_ = 0.0;
};

/// Reciprocal condition estimate below which a factored matrix is treated as singular.
inline constexpr double kSingularRcond = 1e-14;

/// Factorizes `a`, throwing Error(code) when it is exactly or numerically
/// (rcond < kSingularRcond) singular. `what` names the matrix in the message.
SymmetricFactorization factorize_nonsingular(const SymmetricMatrix& a, ErrorCode code, const std::string& what);

}  // namespace netginv
