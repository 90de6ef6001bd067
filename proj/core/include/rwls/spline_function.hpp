#pragma once

#include <rwls/function_space.hpp>
#include <rwls/types.hpp>

#include <memory>

namespace rwls {

/// v = sum_j c_j beta_j over a shared, immutable space; c is n x D.
class SplineFunction {
 public:
  SplineFunction(std::shared_ptr<const FunctionSpace> space, Matrix coefficients);

  const FunctionSpace& space() const { return *space_; }
  const std::shared_ptr<const FunctionSpace>& space_ptr() const { return space_; }
  const Matrix& coefficients() const { return coefficients_; }
  int value_dimension() const { return static_cast<int>(coefficients_.cols()); }

  Vector evaluate(PointView x) const;
  Vector evaluate_derivative(PointView x, const MultiIndex& order) const;

  /// Values at every row of `points`, one output row per point.
  RowMatrix evaluate_all(const RowMatrix& points) const;

 private:
  std::shared_ptr<const FunctionSpace> space_;
  Matrix coefficients_;
};

}  // namespace rwls
