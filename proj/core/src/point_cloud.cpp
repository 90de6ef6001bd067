#include <rwls/point_cloud.hpp>

#include <rwls/errors.hpp>
#include <rwls/function_space.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rwls {

WeightedPointCloud::WeightedPointCloud(RowMatrix sites, RowMatrix values)
    : WeightedPointCloud(std::move(sites), std::move(values), Vector()) {}

WeightedPointCloud::WeightedPointCloud(RowMatrix sites, RowMatrix values, Vector weights)
    : WeightedPointCloud(std::move(sites), std::move(values), std::move(weights), {}) {}

WeightedPointCloud::WeightedPointCloud(RowMatrix sites, RowMatrix values, Vector weights,
                                       std::vector<Marker> markers)
    : sites_(std::move(sites)),
      values_(std::move(values)),
      weights_(std::move(weights)),
      markers_(std::move(markers)) {
  if (weights_.size() == 0) weights_ = Vector::Ones(sites_.rows());
  if (markers_.empty()) markers_.assign(static_cast<std::size_t>(sites_.rows()), Marker::plain);
  validate();
}

void WeightedPointCloud::validate() const {
  const Index m = sites_.rows();
  if (m < 1) throw InvalidArgument("point cloud: need at least one point");
  if (sites_.cols() < 1 || values_.cols() < 1) {
    throw InvalidArgument("point cloud: sites and values need at least one column");
  }
  if (values_.rows() != m || weights_.size() != m || static_cast<Index>(markers_.size()) != m) {
    throw InvalidArgument("point cloud: sites, values, weights and markers differ in length");
  }
  for (Index i = 0; i < m; ++i) {
    if (!(weights_(i) > 0.0) || !std::isfinite(weights_(i))) {
      std::ostringstream os;
      os << "point cloud: weight of point " << i << " must be positive and finite";
      throw InvalidArgument(os.str());
    }
  }
  if (!sites_.allFinite() || !values_.allFinite()) {
    throw InvalidArgument("point cloud: non-finite site or value");
  }
}

std::vector<Index> WeightedPointCloud::indices_with(Marker m) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < markers_.size(); ++i) {
    if (markers_[i] == m) out.push_back(static_cast<Index>(i));
  }
  return out;
}

WeightedPointCloud WeightedPointCloud::with_weights(Vector weights) const {
  return WeightedPointCloud(sites_, values_, std::move(weights), markers_);
}

WeightedPointCloud WeightedPointCloud::with_markers(std::vector<Marker> markers) const {
  return WeightedPointCloud(sites_, values_, weights_, std::move(markers));
}

double WeightedPointCloud::data_scale() const {
  return std::max(1.0, values_.cwiseAbs().maxCoeff());
}

void WeightedPointCloud::check_inside(const FunctionSpace& space) const {
  for (Index i = 0; i < size(); ++i) space.check_point(site(i));
}

}  // namespace rwls
