#pragma once

#include <rwls/function_space.hpp>
#include <rwls/types.hpp>

#include <vector>

namespace rwls {

/// Symmetric positive semi-definite n x n matrix P with
/// P(j, l) = integral over the domain of sum_{|a| = 2} (2 choose a) d^a beta_j d^a beta_l.
///
/// For a bivariate space this is the thin-plate energy (ss + 2 st + tt); for
/// a curve it is the integral of the squared second derivative. c^T P c is
/// the energy of the function with coefficients c (summed over value columns).
class PenaltyMatrix {
 public:
  explicit PenaltyMatrix(SparseMatrix matrix) : matrix_(std::move(matrix)) {}

  const SparseMatrix& sparse() const { return matrix_; }
  Matrix dense() const { return Matrix(matrix_); }
  Index size() const { return matrix_.rows(); }

  /// sum over value columns of c_k^T P c_k.
  double energy(const Matrix& coefficients) const;

 private:
  SparseMatrix matrix_;
};

/// Exact assembly by per-cell Gauss-Legendre quadrature with (max degree + 1)
/// points per direction. Requires degree >= 2 in every direction.
PenaltyMatrix assemble_thin_plate(const FunctionSpace& space);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int points);

}  // namespace rwls
