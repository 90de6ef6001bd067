#pragma once

#include <rwls/function_space.hpp>
#include <rwls/point_cloud.hpp>
#include <rwls/spline_function.hpp>
#include <rwls/types.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace rwls {

/// Largest C(m, n) the subset machinery agrees to enumerate.
inline constexpr std::uint64_t kSubsetCap = 1'000'000;

/// C(m, n), saturating at UINT64_MAX.
std::uint64_t binomial(Index m, Index n);

/// Calls `visit` with every n-subset of {0, ..., m-1} in lexicographic order.
/// Throws CombinatorialCapError when C(m, n) > cap.
void for_each_subset(Index m, Index n, const std::function<void(std::span<const Index>)>& visit,
                     std::uint64_t cap = kSubsetCap);

std::vector<std::vector<Index>> enumerate_subsets(Index m, Index n, std::uint64_t cap = kSubsetCap);

/// Interpolation problem on the points indexed by K.
struct SubsetCertificate {
  std::vector<Index> subset;  ///< sorted, size n
  double det = 0.0;           ///< |B_K|
  bool admissible = false;
  double lambda = 0.0;        ///< omega_K * det^2
  Matrix coefficients;        ///< n x D interpolant, empty when not admissible
};

SubsetCertificate interpolate_subset(const FunctionSpace& space, const WeightedPointCloud& cloud,
                                     std::span<const Index> subset);

/// The weighted least-squares fit written as the lambda-weighted average of
/// all admissible n-point interpolants.
class Decomposition {
 public:
  /// `collocation` is the full m x n matrix B; det(B^T W B) is computed from it.
  Decomposition(std::shared_ptr<const FunctionSpace> space, Matrix collocation, Vector weights,
                std::vector<SubsetCertificate> certificates);

  const FunctionSpace& space() const { return *space_; }
  const std::shared_ptr<const FunctionSpace>& space_ptr() const { return space_; }
  const std::vector<SubsetCertificate>& certificates() const { return certificates_; }
  const Vector& weights() const { return weights_; }

  std::size_t total_count() const { return certificates_.size(); }
  std::size_t admissible_count() const;

  /// Sum of lambda_K over admissible subsets.
  double normalizer() const { return normalizer_; }
  /// det(B^T W B), computed independently.
  double gram_determinant() const { return gram_determinant_; }
  /// |normalizer - det(B^T W B)| / |det(B^T W B)|.
  double cauchy_binet_residual() const;

  /// sum_K lambda_K v_K(x) / sum_K lambda_K.
  Vector reconstruct(PointView x) const;
  Vector reconstruct_derivative(PointView x, const MultiIndex& order) const;

  /// Componentwise min and max of d^order v_K(x) over admissible K.
  std::pair<Vector, Vector> derivative_bounds(PointView x, const MultiIndex& order) const;

  /// The averaged coefficients as a function on the space.
  SplineFunction combined_function() const;

  /// Same interpolants, lambda_K recomputed for new weights.
  Decomposition reweighted(const Vector& weights) const;

 private:
  template <typename Visit>
  void for_each_admissible(PointView x, const MultiIndex* order, Visit&& visit) const;

  std::shared_ptr<const FunctionSpace> space_;
  Matrix collocation_;
  Vector weights_;
  std::vector<SubsetCertificate> certificates_;
  double normalizer_ = 0.0;
  double gram_determinant_ = 0.0;
};

/// Enumerates every n-subset of the cloud. Throws CombinatorialCapError past
/// the cap and RankDeficientError when no subset is admissible.
Decomposition decompose(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                        std::uint64_t cap = kSubsetCap);

/// WLS fit with the weights of the points in I replaced by `magnitude`.
/// For large magnitudes this approaches the fit constrained to interpolate
/// the I-points. An empty I gives the plain fit.
SplineFunction weight_limit_solution(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                                     std::span<const Index> subset, double magnitude);

enum class IrlsExponent {
  halved,    ///< w = |r|^{(p-2)/2}
  standard,  ///< w = |r|^{p-2}
};

struct IrlsOptions {
  double p = 1.5;
  int max_iterations = 20;
  IrlsExponent exponent = IrlsExponent::standard;
  double delta = 1e-8;  ///< residual floor
  /// Reweight the subset decomposition instead of re-solving; only usable
  /// under the subset cap.
  bool use_decomposition = false;
};

struct IrlsResult {
  SplineFunction function;
  /// objective[0] is the starting fit (cloud weights), then one entry per
  /// reweighted iterate: sum_i sum_d |u(x_i) - f_i|_d^p.
  std::vector<double> objective;
  Vector weights;
};

/// Iteratively reweighted least squares for the l^p fitting problem, 1 < p < 2.
/// Point weights use the Euclidean residual norm, floored at delta.
IrlsResult irls_solve(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                      const IrlsOptions& options);

/// sum_i sum_d |r_id|^p for the residuals of f on the cloud.
double lp_objective(const SplineFunction& f, const WeightedPointCloud& cloud, double p);

}  // namespace rwls
