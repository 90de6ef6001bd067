#pragma once

#include <rwls/function_space.hpp>
#include <rwls/hierarchical.hpp>
#include <rwls/point_cloud.hpp>
#include <rwls/spline_function.hpp>
#include <rwls/spline_space.hpp>
#include <rwls/thin_plate.hpp>
#include <rwls/types.hpp>

#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwls {

enum class WeightMode {
  error_driven,  ///< type I: 1 + e, type II: 1 / (1 + e)
  fixed_factor,  ///< type I: rho, type II: 1 / rho
  irls,          ///< type I as error_driven, type II: 1 / max(delta, e)
};

struct WeightRule {
  WeightMode mode = WeightMode::error_driven;
  double factor = 1.25;  ///< rho for fixed_factor
  double delta = 1e-6;   ///< floor for irls
};

/// Parses "error", "fixed:<rho>" or "irls:<delta>".
WeightRule parse_weight_rule(std::string_view text);

struct FitConfig {
  double tol_one = 1e-3;
  /// Unmarked-and-type-I points must reach max error <= tol_two; type II
  /// points leave the active set once their error reaches it.
  double tol_two = std::numeric_limits<double>::infinity();
  double eps = 1e-3;      ///< refinement threshold (adaptive fit)
  double lambda = 0.0;    ///< thin-plate penalty weight
  int max_iterations = 100;
  int max_levels = 5;
  WeightRule rule;
  /// Reweight every marked point each iteration, not only the violators.
  bool update_all_marked = false;
  /// Refine the neighbours of marked cells as well.
  bool buffer = true;

  void validate() const;
};

/// Multiplies the weights of the marked points in `update` by the rule's factor.
/// Other weights are returned unchanged.
Vector update_weights(std::span<const double> errors, const Vector& weights, const std::vector<Marker>& markers,
                      const std::vector<char>& update, const WeightRule& rule);

struct IterationRecord {
  int iteration = 0;
  Index dofs = 0;
  double rmse = 0.0;
  double max = 0.0;
  double max_type_one = 0.0;     ///< over the active type I markers
  double max_not_type_two = 0.0; ///< over every point not marked type II
  Index count_type_one = 0;
  Index count_type_two = 0;
  Index refined_cells = 0;
};

enum class StopReason { converged, no_update, iteration_cap, level_cap };
std::string_view to_string(StopReason reason);

struct FitReport {
  std::vector<IterationRecord> iterations;
  SplineFunction function;
  Vector weights;
  std::vector<Marker> markers;  ///< markers still active at the end
  StopReason stop = StopReason::converged;
};

/// Marker-driven reweighted least squares in a fixed space.
FitReport rwls_fit(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                   const FitConfig& config);

/// Indices whose error under the unit-weight least-squares fit exceeds eps.
std::vector<Index> init_markers_from_ls(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                                        double eps, double lambda = 0.0);

/// Reweighted least squares with adaptive dyadic refinement of a hierarchical space.
/// Throws StagnationError when refinement adds no degrees of freedom twice in a row.
FitReport adaptive_rwls_fit(const SplineSpace& base, const WeightedPointCloud& cloud, const FitConfig& config);

/// Collocation (and penalty) assembled once for repeated weighted solves;
/// penalized when lambda > 0, sparse once m * n is large.
class FitSolver {
 public:
  FitSolver(const FunctionSpace& space, const RowMatrix& sites, double lambda);
  Matrix solve(const Vector& weights, const RowMatrix& values) const;

 private:
  double lambda_;
  bool dense_;
  Matrix dense_matrix_;
  SparseRowMatrix sparse_matrix_;
  std::unique_ptr<PenaltyMatrix> penalty_;
};

/// One-shot FitSolver.
Matrix fit_coefficients(const FunctionSpace& space, const RowMatrix& sites, const Vector& weights,
                        const RowMatrix& values, double lambda);

/// Three exponential peaks on [-1, 1]^2.
double evaluate_3peaks(double x, double y);

/// Univariate test curves 1..3 on [0, 1]: a rectified sine with a tanh
/// envelope, a narrow Gaussian bump and a steep tanh of a cosine.
double evaluate_test_curve(int id, double x);

}  // namespace rwls
