#include <rwls/errors.hpp>
#include <rwls/wls.hpp>

#include <algorithm>
#include <cmath>

namespace rwls {

FitMetrics metrics_from_values(const RowMatrix& fitted, const RowMatrix& values) {
  if (fitted.rows() != values.rows() || fitted.cols() != values.cols()) {
    throw InvalidArgument("metrics: fitted and observed values differ in shape");
  }
  FitMetrics m;
  m.errors.resize(static_cast<std::size_t>(values.rows()));
  double sum = 0.0;
  for (Index i = 0; i < values.rows(); ++i) {
    const double e = (fitted.row(i) - values.row(i)).norm();
    m.errors[static_cast<std::size_t>(i)] = e;
    sum += e * e;
    m.max = std::max(m.max, e);
  }
  m.rmse = values.rows() > 0 ? std::sqrt(sum / static_cast<double>(values.rows())) : 0.0;
  return m;
}

FitMetrics metrics(const SplineFunction& f, const WeightedPointCloud& cloud) {
  return metrics_from_values(f.evaluate_all(cloud.sites()), cloud.values());
}

}  // namespace rwls
