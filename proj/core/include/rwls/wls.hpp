#pragma once

#include <rwls/point_cloud.hpp>
#include <rwls/spline_function.hpp>
#include <rwls/thin_plate.hpp>
#include <rwls/types.hpp>

#include <vector>

namespace rwls {

/// Columns of W^{1/2} B whose pivot falls below this fraction of the largest
/// one make the least-squares system rank deficient.
inline constexpr double kRankRelative = 1e-12;

/// Weighted least squares: minimizes sum_i w_i ||(B c)_i - f_i||^2.
///
/// Solved by column-pivoted Householder QR of W^{1/2} B, one factorization
/// shared by all D value columns. Throws RankDeficientError when B lacks
/// full column rank.
Matrix solve_wls(const Matrix& B, const Vector& weights, const Matrix& values);

/// Sparse variant (sparse QR with COLAMD ordering) for large collocation matrices.
Matrix solve_wls(const SparseRowMatrix& B, const Vector& weights, const Matrix& values);

/// Penalized weighted least squares:
///   argmin 1/2 sum_i w_i ||(B c)_i - f_i||^2 + lambda c^T P c,
/// i.e. (1/2 B^T W B + lambda P) c = 1/2 B^T W f. lambda == 0 falls back to solve_wls.
Matrix solve_penalized_wls(const Matrix& B, const Vector& weights, const Matrix& values,
                           const PenaltyMatrix& penalty, double lambda);

Matrix solve_penalized_wls(const SparseRowMatrix& B, const Vector& weights, const Matrix& values,
                           const PenaltyMatrix& penalty, double lambda);

struct FitMetrics {
  std::vector<double> errors;  ///< e_i = ||v(x_i) - f_i||_2
  double rmse = 0.0;
  double max = 0.0;
};

FitMetrics metrics(const SplineFunction& f, const WeightedPointCloud& cloud);

/// Metrics from precomputed fitted values (one row per point).
FitMetrics metrics_from_values(const RowMatrix& fitted, const RowMatrix& values);

}  // namespace rwls
