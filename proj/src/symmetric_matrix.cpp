#include "netginv/symmetric_matrix.hpp"

#include "netginv/error.hpp"

#include <algorithm>
#include <string>

namespace netginv {

SymmetricMatrix::SymmetricMatrix(std::size_t order)
    : data_(Matrix::Zero(static_cast<Eigen::Index>(order), static_cast<Eigen::Index>(order))) {}

SymmetricMatrix::SymmetricMatrix(const Matrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "symmetric matrix must be square, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  const double asym = (m - m.transpose()).norm();
  if (asym > tolerance * std::max(1.0, m.norm())) {
    throw Error(ErrorCode::NotSymmetric, "asymmetry " + std::to_string(asym) + " exceeds tolerance");
  }
  data_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t order) {
  const auto n = static_cast<Eigen::Index>(order);
  return SymmetricMatrix(Matrix::Identity(n, n), Trusted{});
}

SymmetricMatrix SymmetricMatrix::symmetrize(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "symmetric matrix must be square");
  }
  return SymmetricMatrix(0.5 * (m + m.transpose()), Trusted{});
}

SymmetricMatrix SymmetricMatrix::from_lower(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "symmetric matrix must be square");
  }
  Matrix full = m.triangularView<Eigen::Lower>();
  full.triangularView<Eigen::StrictlyUpper>() = m.transpose().triangularView<Eigen::StrictlyUpper>();
  return SymmetricMatrix(std::move(full), Trusted{});
}

double SymmetricMatrix::inf_norm() const { return netginv::inf_norm(data_); }

SymmetricMatrix SymmetricMatrix::operator+(const SymmetricMatrix& other) const {
  if (order() != other.order()) throw Error(ErrorCode::DimensionMismatch, "order mismatch in sum");
  return SymmetricMatrix(data_ + other.data_, Trusted{});
}

SymmetricMatrix SymmetricMatrix::operator-(const SymmetricMatrix& other) const {
  if (order() != other.order()) throw Error(ErrorCode::DimensionMismatch, "order mismatch in difference");
  return SymmetricMatrix(data_ - other.data_, Trusted{});
}

SymmetricMatrix SymmetricMatrix::operator*(double s) const { return SymmetricMatrix(data_ * s, Trusted{}); }

double relative_frobenius(const Matrix& a, const Matrix& b, double floor) {
  return (a - b).norm() / std::max(b.norm(), floor);
}

double inf_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace netginv
