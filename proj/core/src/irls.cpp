#include <rwls/decomposition.hpp>

#include <rwls/collocation.hpp>
#include <rwls/errors.hpp>
#include <rwls/wls.hpp>

#include <algorithm>
#include <cmath>
#include <optional>

namespace rwls {

double lp_objective(const SplineFunction& f, const WeightedPointCloud& cloud, double p) {
  const RowMatrix r = f.evaluate_all(cloud.sites()) - cloud.values();
  double sum = 0.0;
  for (Index i = 0; i < r.rows(); ++i) {
    for (Index d = 0; d < r.cols(); ++d) sum += std::pow(std::abs(r(i, d)), p);
  }
  return sum;
}

IrlsResult irls_solve(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                      const IrlsOptions& options) {
  if (!space) throw InvalidArgument("irls: null space");
  if (!(options.p > 1.0 && options.p < 2.0)) throw InvalidArgument("irls: p must lie in (1, 2)");
  if (options.max_iterations < 1) throw InvalidArgument("irls: need at least one iteration");
  if (!(options.delta > 0.0)) throw InvalidArgument("irls: delta must be positive");

  const double exponent =
      options.exponent == IrlsExponent::halved ? 0.5 * (options.p - 2.0) : options.p - 2.0;
  const Matrix B = collocation_matrix(*space, cloud.sites());

  std::optional<Decomposition> dec;
  if (options.use_decomposition) dec.emplace(decompose(space, cloud));

  auto solve = [&](const Vector& w) {
    if (dec) return dec->reweighted(w).combined_function();
    return SplineFunction(space, solve_wls(B, w, cloud.values()));
  };

  Vector w = cloud.weights();
  SplineFunction u = solve(w);
  IrlsResult result{u, {lp_objective(u, cloud, options.p)}, w};
  for (int k = 0; k < options.max_iterations; ++k) {
    const RowMatrix r = u.evaluate_all(cloud.sites()) - cloud.values();
    for (Index i = 0; i < r.rows(); ++i) w(i) = std::pow(std::max(options.delta, r.row(i).norm()), exponent);
    u = solve(w);
    result.objective.push_back(lp_objective(u, cloud, options.p));
  }
  result.function = u;
  result.weights = w;
  return result;
}

}  // namespace rwls
