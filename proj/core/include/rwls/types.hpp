#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <cstddef>
#include <span>
#include <vector>

namespace rwls {

using Index = Eigen::Index;

/// Column-major dense matrix; coefficient blocks are n x D.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Row-major dense matrix, used for point sets so that each point is a
/// contiguous row.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using SparseMatrix = Eigen::SparseMatrix<double>;
using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// A point in parameter space.
using PointView = std::span<const double>;

/// Partial derivative order per parametric direction.
using MultiIndex = std::vector<int>;

/// One nonzero basis function value at a point.
struct BasisValue {
  Index index;
  double value;
};

using BasisValues = std::vector<BasisValue>;

/// Axis-aligned box in parameter space.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dimension() const { return lower.size(); }
  bool contains(PointView x, double slack = 0.0) const;
};

inline PointView row_view(const RowMatrix& points, Index i) {
  return {points.row(i).data(), static_cast<std::size_t>(points.cols())};
}

}  // namespace rwls
