#pragma once

#include <rwls/function_space.hpp>
#include <rwls/knot_vector.hpp>

#include <vector>

namespace rwls {

/// Tensor-product B-spline space built from one knot vector per direction.
///
/// Basis index j is lexicographic over the per-direction indices with the
/// last direction running fastest.
class SplineSpace final : public FunctionSpace {
 public:
  explicit SplineSpace(std::vector<KnotVector> directions);
  explicit SplineSpace(KnotVector direction);

  std::string_view kind() const override { return "tensor"; }
  Index dimension() const override { return dimension_; }
  int parametric_dimension() const override { return static_cast<int>(directions_.size()); }
  Box domain() const override;
  std::vector<int> degrees() const override;

  BasisValues eval_basis(PointView x) const override;
  BasisValues eval_basis_derivatives(PointView x, const MultiIndex& order) const override;
  std::vector<Box> integration_cells() const override;

  const std::vector<KnotVector>& directions() const { return directions_; }
  const KnotVector& direction(int d) const { return directions_[static_cast<std::size_t>(d)]; }

  /// Per-direction function counts.
  std::vector<Index> shape() const;
  /// Per-direction cell counts.
  std::vector<Index> element_shape() const;

  Index flatten(const std::vector<Index>& multi) const;
  std::vector<Index> unflatten(Index j) const;

  /// Greville abscissae of every tensor basis function, one row per function.
  RowMatrix greville_points() const;

 private:
  std::vector<KnotVector> directions_;
  Index dimension_ = 0;
};

/// Polynomials of the given degree on [lower, upper], in the Bernstein basis
/// (a single-span clamped spline space).
SplineSpace make_polynomial_space(double lower, double upper, int degree);

}  // namespace rwls
