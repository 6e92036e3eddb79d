#include "netginv/symmetric_factorization.hpp"

#include "netginv/error.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace netginv {

namespace {

double block_min_eigen_magnitude(double a, double b, double c) {
  // eigenvalues of [[a, b], [b, c]]
  const double mean = 0.5 * (a + c);
  const double radius = std::hypot(0.5 * (a - c), b);
  return std::min(std::abs(mean - radius), std::abs(mean + radius));
}

}  // namespace

std::optional<SymmetricFactorization> SymmetricFactorization::factorize(const SymmetricMatrix& a) {
  SymmetricFactorization f;
  const auto n = static_cast<lapack_int>(a.order());
  f.factors_ = a.matrix();
  f.pivots_.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    f.min_pivot_ = std::numeric_limits<double>::infinity();
    f.rcond_ = 1.0;
    return f;
  }
  const double anorm = a.inf_norm();
  const lapack_int info =
      LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, f.factors_.data(), n, f.pivots_.data());
  if (info < 0) {
    throw Error(ErrorCode::InvalidArgument, "dsytrf rejected argument " + std::to_string(-info));
  }
  if (info > 0) return std::nullopt;

  double min_pivot = std::numeric_limits<double>::infinity();
  for (lapack_int k = 0; k < n;) {
    if (f.pivots_[static_cast<std::size_t>(k)] > 0) {
      min_pivot = std::min(min_pivot, std::abs(f.factors_(k, k)));
      ++k;
    } else {
      min_pivot = std::min(min_pivot, block_min_eigen_magnitude(f.factors_(k, k), f.factors_(k + 1, k),
                                                                f.factors_(k + 1, k + 1)));
      k += 2;
    }
  }
  f.min_pivot_ = min_pivot;

  double rcond = 0.0;
  const lapack_int cinfo = LAPACKE_dsycon(LAPACK_COL_MAJOR, 'L', n, f.factors_.data(), n,
                                          f.pivots_.data(), anorm, &rcond);
  f.rcond_ = cinfo == 0 ? rcond : 0.0;
  return f;
}

Matrix SymmetricFactorization::solve(const Matrix& rhs) const {
  if (static_cast<std::size_t>(rhs.rows()) != order()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(rhs.rows()) +
                                                  " rows, factorization has order " + std::to_string(order()));
  }
  Matrix x = rhs;
  if (x.size() == 0) return x;
  const auto n = static_cast<lapack_int>(order());
  const lapack_int info = LAPACKE_dsytrs(LAPACK_COL_MAJOR, 'L', n, static_cast<lapack_int>(x.cols()),
                                         factors_.data(), n, pivots_.data(), x.data(), n);
  if (info != 0) throw Error(ErrorCode::InvalidArgument, "dsytrs failed");
  return x;
}

Vector SymmetricFactorization::solve(const Vector& rhs) const {
  Matrix x = solve(Matrix(rhs));
  return x.col(0);
}

SymmetricMatrix SymmetricFactorization::inverse() const {
  const auto n = static_cast<lapack_int>(order());
  Matrix inv = factors_;
  if (n > 0) {
    const lapack_int info =
        LAPACKE_dsytri(LAPACK_COL_MAJOR, 'L', n, inv.data(), n, pivots_.data());
    if (info != 0) throw Error(ErrorCode::InvalidArgument, "dsytri failed");
  }
  return SymmetricMatrix::from_lower(inv);
}

SymmetricFactorization factorize_nonsingular(const SymmetricMatrix& a, ErrorCode code, const std::string& what) {
  auto f = SymmetricFactorization::factorize(a);
  if (!f) throw Error(code, what + " has an exactly zero pivot");
  if (f->rcond() < kSingularRcond) {
    throw Error(code, what + " is numerically singular (rcond " + std::to_string(f->rcond()) + ")");
  }
  return std::move(*f);
}

}  // namespace netginv
