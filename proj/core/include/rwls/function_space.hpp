#pragma once

#include <rwls/types.hpp>

#include <string_view>
#include <vector>

namespace rwls {

/// A finite-dimensional space of real functions on a box, spanned by a basis
/// that can be evaluated pointwise.
///
/// Implementations are immutable once built and safe to share between threads.
class FunctionSpace {
 public:
  virtual ~FunctionSpace() = default;

  virtual std::string_view kind() const = 0;
  virtual Index dimension() const = 0;
  virtual int parametric_dimension() const = 0;
  virtual Box domain() const = 0;
  /// Polynomial degree per direction.
  virtual std::vector<int> degrees() const = 0;

  /// Nonzero basis functions at x. Throws DomainError when x is outside the domain.
  virtual BasisValues eval_basis(PointView x) const = 0;

  /// Partial derivative of the nonzero basis functions; `order` has one entry per
  /// direction. Throws InvalidArgument when an order exceeds that direction's degree.
  virtual BasisValues eval_basis_derivatives(PointView x, const MultiIndex& order) const = 0;

  /// Cells on which every basis function is a single polynomial piece.
  virtual std::vector<Box> integration_cells() const = 0;

  /// Throws DomainError unless x lies in the domain (with a tiny relative slack).
  void check_point(PointView x) const;
};

}  // namespace rwls
