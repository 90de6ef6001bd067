#include <rwls/collocation.hpp>

#include <rwls/errors.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <vector>

namespace rwls {

Matrix collocation_matrix(const FunctionSpace& space, const RowMatrix& sites) {
  Matrix B = Matrix::Zero(sites.rows(), space.dimension());
  for (Index i = 0; i < sites.rows(); ++i) {
    for (const auto& [j, v] : space.eval_basis(row_view(sites, i))) B(i, j) = v;
  }
  return B;
}

SparseRowMatrix collocation_sparse(const FunctionSpace& space, const RowMatrix& sites) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index i = 0; i < sites.rows(); ++i) {
    for (const auto& [j, v] : space.eval_basis(row_view(sites, i))) {
      if (v != 0.0) triplets.emplace_back(i, j, v);
    }
  }
  SparseRowMatrix B(sites.rows(), space.dimension());
  B.setFromTriplets(triplets.begin(), triplets.end());
  return B;
}

double determinant(const Matrix& square) {
  if (square.rows() != square.cols()) throw InvalidArgument("determinant of a non-square matrix");
  if (square.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Matrix>(square).determinant();
}

bool is_nonsingular(const Matrix& square, double det) {
  double scale = 1.0;
  for (Index i = 0; i < square.rows(); ++i) scale *= square.row(i).cwiseAbs().maxCoeff();
  return std::abs(det) >= kSingularRelative * scale && scale > 0.0;
}

bool schoenberg_whitney_admissible(const KnotVector& knots, std::span<const double> sites) {
  const Index n = knots.dimension();
  if (static_cast<Index>(sites.size()) != n) {
    throw InvalidArgument("Schoenberg-Whitney check needs exactly n sites");
  }
  std::vector<double> xi(sites.begin(), sites.end());
  std::sort(xi.begin(), xi.end());
  if (std::adjacent_find(xi.begin(), xi.end()) != xi.end()) return false;

  const auto& t = knots.knots();
  const int k = knots.order();
  for (Index j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const double x = xi[uj];
    const double left = t[uj];
    const double right = t[uj + static_cast<std::size_t>(k)];
    // beta_j is right-continuous: nonzero at its left knot only when that
    // knot has full multiplicity; nonzero at its right knot only at the
    // closed right end of the domain.
    const bool left_ok = left < x || (x == left && t[uj + static_cast<std::size_t>(k) - 1] == left);
    const bool right_ok = x < right || (x == right && x == knots.upper() && j == n - 1);
    if (!left_ok || !right_ok) return false;
  }
  return true;
}

}  // namespace rwls
