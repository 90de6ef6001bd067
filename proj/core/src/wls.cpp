#include <rwls/wls.hpp>

#include <rwls/errors.hpp>

#include <Eigen/Cholesky>
#include <Eigen/OrderingMethods>
#include <Eigen/QR>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseQR>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>
#include <sstream>

namespace rwls {

namespace {

void check_shapes(Index m, Index n, const Vector& weights, const Matrix& values) {
  if (weights.size() != m || values.rows() != m) {
    throw InvalidArgument("least squares: weights/values do not match the collocation rows");
  }
  if (n > m) {
    std::ostringstream os;
    os << "least squares: more unknowns (" << n << ") than data (" << m << ")";
    throw RankDeficientError(os.str());
  }
  for (Index i = 0; i < m; ++i) {
    if (!(weights(i) > 0.0)) throw InvalidArgument("least squares: weights must be positive");
  }
}

[[noreturn]] void rank_failure(Index rank, Index n) {
  std::ostringstream os;
  os << "least squares: collocation matrix has rank " << rank << " < " << n;
  throw RankDeficientError(os.str());
}

template <typename Factorization>
void check_pivots(const Factorization& ldlt, const char* what) {
  const Vector d = ldlt.vectorD();
  const double dmax = d.cwiseAbs().maxCoeff();
  if (!(d.minCoeff() > kRankRelative * dmax)) {
    throw RankDeficientError(std::string(what) + ": regularized system is singular");
  }
}

}  // namespace

Matrix solve_wls(const Matrix& B, const Vector& weights, const Matrix& values) {
  check_shapes(B.rows(), B.cols(), weights, values);
  const Vector sw = weights.cwiseSqrt();
  // heavy rows first keeps Householder QR accurate under widely spread weights
  std::vector<Index> order(static_cast<std::size_t>(B.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return sw(a) * B.row(a).cwiseAbs().maxCoeff() > sw(b) * B.row(b).cwiseAbs().maxCoeff();
  });
  Matrix A(B.rows(), B.cols());
  Matrix rhs(B.rows(), values.cols());
  for (Index r = 0; r < B.rows(); ++r) {
    const Index i = order[static_cast<std::size_t>(r)];
    A.row(r) = sw(i) * B.row(i);
    rhs.row(r) = sw(i) * values.row(i);
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(A);
  qr.setThreshold(kRankRelative);
  if (qr.rank() < B.cols()) rank_failure(qr.rank(), B.cols());
  return qr.solve(rhs);
}

Matrix solve_wls(const SparseRowMatrix& B, const Vector& weights, const Matrix& values) {
  check_shapes(B.rows(), B.cols(), weights, values);
  const Vector sw = weights.cwiseSqrt();
  SparseMatrix A = sw.asDiagonal() * B;
  A.makeCompressed();
  double colmax = 0.0;
  for (Index j = 0; j < A.outerSize(); ++j) colmax = std::max(colmax, A.col(j).norm());
  Eigen::SparseQR<SparseMatrix, Eigen::COLAMDOrdering<int>> qr;
  qr.setPivotThreshold(kRankRelative * colmax);
  qr.compute(A);
  if (qr.info() != Eigen::Success) throw RankDeficientError("least squares: sparse QR failed");
  if (qr.rank() < B.cols()) rank_failure(qr.rank(), B.cols());
  const Matrix rhs = sw.asDiagonal() * values;
  Matrix c(B.cols(), values.cols());
  for (Index k = 0; k < values.cols(); ++k) c.col(k) = qr.solve(rhs.col(k));
  return c;
}

Matrix solve_penalized_wls(const Matrix& B, const Vector& weights, const Matrix& values,
                           const PenaltyMatrix& penalty, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("penalized least squares: lambda must be >= 0");
  if (lambda == 0.0) return solve_wls(B, weights, values);
  if (weights.size() != B.rows() || values.rows() != B.rows() || penalty.size() != B.cols()) {
    throw InvalidArgument("penalized least squares: dimension mismatch");
  }
  const Matrix BtW = B.transpose() * weights.asDiagonal();
  const Matrix M = 0.5 * (BtW * B) + lambda * penalty.dense();
  const Matrix rhs = 0.5 * (BtW * values);
  Eigen::LDLT<Matrix> ldlt(M);
  if (ldlt.info() != Eigen::Success) throw RankDeficientError("penalized least squares: factorization failed");
  check_pivots(ldlt, "penalized least squares");
  return ldlt.solve(rhs);
}

Matrix solve_penalized_wls(const SparseRowMatrix& B, const Vector& weights, const Matrix& values,
                           const PenaltyMatrix& penalty, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("penalized least squares: lambda must be >= 0");
  if (lambda == 0.0) return solve_wls(B, weights, values);
  if (weights.size() != B.rows() || values.rows() != B.rows() || penalty.size() != B.cols()) {
    throw InvalidArgument("penalized least squares: dimension mismatch");
  }
  const SparseMatrix Bc = B;
  const SparseMatrix BtW = Bc.transpose() * weights.asDiagonal();
  SparseMatrix M = 0.5 * (BtW * Bc) + lambda * penalty.sparse();
  M.makeCompressed();
  const Matrix rhs = 0.5 * (BtW * values);
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(M);
  if (ldlt.info() != Eigen::Success) throw RankDeficientError("penalized least squares: factorization failed");
  check_pivots(ldlt, "penalized least squares");
  Matrix c(B.cols(), values.cols());
  for (Index k = 0; k < values.cols(); ++k) c.col(k) = ldlt.solve(rhs.col(k));
  return c;
}

}  // namespace rwls
