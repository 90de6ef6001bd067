#include <rwls/spline_function.hpp>

#include <rwls/errors.hpp>

#include <sstream>

namespace rwls {

SplineFunction::SplineFunction(std::shared_ptr<const FunctionSpace> space, Matrix coefficients)
    : space_(std::move(space)), coefficients_(std::move(coefficients)) {
  if (!space_) throw InvalidArgument("spline function: null space");
  if (coefficients_.rows() != space_->dimension()) {
    std::ostringstream os;
    os << "spline function: " << coefficients_.rows() << " coefficient rows for a space of dimension "
       << space_->dimension();
    throw InvalidArgument(os.str());
  }
  if (coefficients_.cols() < 1) throw InvalidArgument("spline function: no value components");
}

Vector SplineFunction::evaluate(PointView x) const {
  Vector v = Vector::Zero(coefficients_.cols());
  for (const auto& [j, b] : space_->eval_basis(x)) v += b * coefficients_.row(j).transpose();
  return v;
}

Vector SplineFunction::evaluate_derivative(PointView x, const MultiIndex& order) const {
  Vector v = Vector::Zero(coefficients_.cols());
  for (const auto& [j, b] : space_->eval_basis_derivatives(x, order)) {
    v += b * coefficients_.row(j).transpose();
  }
  return v;
}

RowMatrix SplineFunction::evaluate_all(const RowMatrix& points) const {
  RowMatrix out(points.rows(), coefficients_.cols());
  for (Index i = 0; i < points.rows(); ++i) out.row(i) = evaluate(row_view(points, i)).transpose();
  return out;
}

}  // namespace rwls
