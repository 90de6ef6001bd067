#pragma once

#include <rwls/types.hpp>

#include <span>
#include <utility>
#include <vector>

namespace rwls {

/// Univariate knot vector t_0 <= ... <= t_{len-1} for B-splines of a given degree.
///
/// The number of basis functions is n = len - (degree + 1). Every breakpoint
/// multiplicity is in [1, degree + 1]. When `clamped` is set, both end
/// knots must have multiplicity exactly degree + 1.
///
/// The parametric domain is [t_d, t_n]. Knot spans are half-open except the
/// last nonempty one, which is closed: evaluation at the right end returns
/// the limit from the left.
class KnotVector {
 public:
  KnotVector(int degree, std::vector<double> knots, bool clamped = true);

  int degree() const { return degree_; }
  int order() const { return degree_ + 1; }
  Index dimension() const { return static_cast<Index>(knots_.size()) - order(); }
  bool clamped() const { return clamped_; }

  const std::vector<double>& knots() const { return knots_; }
  double operator[](std::size_t i) const { return knots_[i]; }

  double lower() const { return knots_[degree_]; }
  double upper() const { return knots_[static_cast<std::size_t>(dimension())]; }
  bool contains(double x) const { return x >= lower() && x <= upper(); }

  /// Distinct knot values inside the domain, in increasing order.
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  /// Number of nonempty spans (cells) in the domain.
  Index num_elements() const { return static_cast<Index>(breakpoints_.size()) - 1; }

  /// Knot span index mu with t_mu <= x < t_{mu+1}, degree <= mu < n.
  /// Throws DomainError when x is outside the domain.
  Index find_span(double x) const;

  /// Cell index (position among nonempty spans) containing x.
  Index element_index(double x) const;

  /// Inclusive range of cells covered by the support of basis function j.
  std::pair<Index, Index> support_elements(Index j) const;

  /// Values of the degree+1 basis functions nonzero on `span`, i.e. the
  /// functions span-degree .. span, at x.
  std::vector<double> basis_functions(Index span, double x) const;

  /// Derivatives of order 0..max_order of the degree+1 basis functions
  /// nonzero on `span`; result[r][i] is the r-th derivative of function
  /// span-degree+i. Orders above the degree are zero.
  std::vector<std::vector<double>> basis_derivatives(Index span, double x, int max_order) const;

  /// Knot averages (t_{j+1} + ... + t_{j+d}) / d; for degree 0 the span midpoints.
  std::vector<double> greville() const;

  /// Multiplicity of each breakpoint, aligned with breakpoints().
  std::vector<int> multiplicities() const;

 private:
  int degree_;
  std::vector<double> knots_;
  bool clamped_;
  std::vector<double> breakpoints_;
};

/// Clamped knot vector on [lower, upper] with the given strictly increasing
/// interior breakpoints (each of multiplicity one).
KnotVector make_open_knot_vector(double lower, double upper, int degree,
                                 std::span<const double> interior_breakpoints);

/// Clamped knot vector on [lower, upper] with `interior_count` equispaced
/// interior knots.
KnotVector make_uniform_knot_vector(double lower, double upper, int degree, int interior_count);

/// Averaging knot placement for sorted sites in [0, 1] and n basis functions.
///
/// With n == sites.size() this is the classical rule: interior knot j is the
/// mean of sites j .. j+d-1 (0-based, j = 1 .. n-d-1). With fewer functions
/// than sites the sequence is first resampled at n equispaced quantiles.
KnotVector averaging_knots(std::span<const double> sites, Index n, int degree);

}  // namespace rwls
