#pragma once

#include <rwls/types.hpp>

#include <cstdint>
#include <vector>

namespace rwls {

class FunctionSpace;

/// Per-point label used by the reweighting schemes.
enum class Marker : std::uint8_t {
  plain = 0,
  type_one = 1,  ///< feature to preserve; weight grows
  type_two = 2,  ///< noise or outlier; weight shrinks
};

/// Sites x_i in R^N with values f_i in R^D, positive weights and markers.
class WeightedPointCloud {
 public:
  /// Unit weights, no markers.
  WeightedPointCloud(RowMatrix sites, RowMatrix values);
  WeightedPointCloud(RowMatrix sites, RowMatrix values, Vector weights);
  WeightedPointCloud(RowMatrix sites, RowMatrix values, Vector weights, std::vector<Marker> markers);

  Index size() const { return sites_.rows(); }
  int parametric_dimension() const { return static_cast<int>(sites_.cols()); }
  int value_dimension() const { return static_cast<int>(values_.cols()); }

  const RowMatrix& sites() const { return sites_; }
  const RowMatrix& values() const { return values_; }
  const Vector& weights() const { return weights_; }
  const std::vector<Marker>& markers() const { return markers_; }

  PointView site(Index i) const { return row_view(sites_, i); }

  /// Indices carrying the given marker, increasing.
  std::vector<Index> indices_with(Marker m) const;

  WeightedPointCloud with_weights(Vector weights) const;
  WeightedPointCloud with_markers(std::vector<Marker> markers) const;

  /// Largest absolute value entry, at least 1; used to scale tolerances.
  double data_scale() const;

  /// Throws DomainError unless every site lies in the space's domain.
  void check_inside(const FunctionSpace& space) const;

 private:
  void validate() const;

  RowMatrix sites_;
  RowMatrix values_;
  Vector weights_;
  std::vector<Marker> markers_;
};

}  // namespace rwls
