#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace netginv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense real symmetric matrix. The stored entries satisfy A(i,j) == A(j,i)
/// bit-for-bit: every constructor mirrors or averages the two triangles.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  /// Zero matrix of the given order.
  explicit SymmetricMatrix(std::size_t order);

  /// Symmetrizes by averaging, (M + M^T) / 2. Throws NotSymmetric when the
  /// relative asymmetry ||M - M^T||_F / max(1, ||M||_F) exceeds `tolerance`,
  /// and DimensionMismatch for a non-square input.
  explicit SymmetricMatrix(const Matrix& m, double tolerance = 1e-8);

  static SymmetricMatrix identity(std::size_t order);

  /// (M + M^T) / 2 without an asymmetry check. Throws DimensionMismatch for a non-square input.
  static SymmetricMatrix symmetrize(const Matrix& m);

  /// Builds from the lower triangle only; the strict upper triangle of `m` is ignored.
  static SymmetricMatrix from_lower(const Matrix& m);

  std::size_t order() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return data_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
  const Matrix& matrix() const noexcept { return data_; }

  double frobenius_norm() const { return data_.norm(); }
  /// Maximum absolute row sum.
  double inf_norm() const;

  SymmetricMatrix operator+(const SymmetricMatrix& other) const;
  SymmetricMatrix operator-(const SymmetricMatrix& other) const;
  SymmetricMatrix operator*(double s) const;

 private:
  struct Trusted {};
  SymmetricMatrix(Matrix m, Trusted) : data_(std::move(m)) {}

  Matrix data_;
};

inline SymmetricMatrix operator*(double s, const SymmetricMatrix& a) { return a * s; }

/// Frobenius norm of a - b divided by max(||b||_F, floor).
double relative_frobenius(const Matrix& a, const Matrix& b, double floor = 1e-300);

double inf_norm(const Matrix& m);

}  // namespace netginv
