#include <rwls/spline_space.hpp>

#include <rwls/errors.hpp>

#include <algorithm>
#include <sstream>

namespace rwls {

bool Box::contains(PointView x, double slack) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t d = 0; d < lower.size(); ++d) {
    const double s = slack * (upper[d] - lower[d]);
    if (!(x[d] >= lower[d] - s && x[d] <= upper[d] + s)) return false;
  }
  return true;
}

namespace {
constexpr double kDomainSlack = 1e-12;
}

void FunctionSpace::check_point(PointView x) const {
  const Box box = domain();
  if (x.size() != box.dimension()) {
    std::ostringstream os;
    os << "point has " << x.size() << " coordinates, space expects " << box.dimension();
    throw InvalidArgument(os.str());
  }
  if (!box.contains(x, kDomainSlack)) {
    std::ostringstream os;
    os.precision(17);
    os << "point (";
    for (std::size_t d = 0; d < x.size(); ++d) os << (d ? ", " : "") << x[d];
    os << ") outside domain";
    throw DomainError(os.str());
  }
}

SplineSpace::SplineSpace(std::vector<KnotVector> directions) : directions_(std::move(directions)) {
  if (directions_.empty()) throw InvalidArgument("spline space: need at least one direction");
  dimension_ = 1;
  for (const auto& kv : directions_) dimension_ *= kv.dimension();
}

SplineSpace::SplineSpace(KnotVector direction)
    : SplineSpace(std::vector<KnotVector>{std::move(direction)}) {}

Box SplineSpace::domain() const {
  Box b;
  for (const auto& kv : directions_) {
    b.lower.push_back(kv.lower());
    b.upper.push_back(kv.upper());
  }
  return b;
}

std::vector<int> SplineSpace::degrees() const {
  std::vector<int> d;
  for (const auto& kv : directions_) d.push_back(kv.degree());
  return d;
}

std::vector<Index> SplineSpace::shape() const {
  std::vector<Index> s;
  for (const auto& kv : directions_) s.push_back(kv.dimension());
  return s;
}

std::vector<Index> SplineSpace::element_shape() const {
  std::vector<Index> s;
  for (const auto& kv : directions_) s.push_back(kv.num_elements());
  return s;
}

Index SplineSpace::flatten(const std::vector<Index>& multi) const {
  Index j = 0;
  for (std::size_t d = 0; d < directions_.size(); ++d) j = j * directions_[d].dimension() + multi[d];
  return j;
}

std::vector<Index> SplineSpace::unflatten(Index j) const {
  std::vector<Index> multi(directions_.size());
  for (std::size_t d = directions_.size(); d-- > 0;) {
    const Index nd = directions_[d].dimension();
    multi[d] = j % nd;
    j /= nd;
  }
  return multi;
}

namespace {

// Tensor product of per-direction (first index, values) blocks.
BasisValues tensor_combine(const SplineSpace& space, const std::vector<Index>& first,
                           const std::vector<std::vector<double>>& values) {
  const std::size_t N = values.size();
  std::size_t total = 1;
  for (const auto& v : values) total *= v.size();
  BasisValues out;
  out.reserve(total);
  std::vector<std::size_t> counter(N, 0);
  for (std::size_t c = 0; c < total; ++c) {
    double v = 1.0;
    Index j = 0;
    for (std::size_t d = 0; d < N; ++d) {
      v *= values[d][counter[d]];
      j = j * space.direction(static_cast<int>(d)).dimension() + first[d] + static_cast<Index>(counter[d]);
    }
    out.push_back({j, v});
    for (std::size_t d = N; d-- > 0;) {
      if (++counter[d] < values[d].size()) break;
      counter[d] = 0;
    }
  }
  return out;
}

}  // namespace

BasisValues SplineSpace::eval_basis(PointView x) const {
  check_point(x);
  std::vector<Index> first(directions_.size());
  std::vector<std::vector<double>> values(directions_.size());
  for (std::size_t d = 0; d < directions_.size(); ++d) {
    const auto& kv = directions_[d];
    const double xd = std::clamp(x[d], kv.lower(), kv.upper());
    const Index span = kv.find_span(xd);
    first[d] = span - kv.degree();
    values[d] = kv.basis_functions(span, xd);
  }
  return tensor_combine(*this, first, values);
}

BasisValues SplineSpace::eval_basis_derivatives(PointView x, const MultiIndex& order) const {
  if (order.size() != directions_.size()) {
    throw InvalidArgument("derivative order must have one entry per direction");
  }
  for (std::size_t d = 0; d < directions_.size(); ++d) {
    if (order[d] < 0 || order[d] > directions_[d].degree()) {
      std::ostringstream os;
      os << "derivative order " << order[d] << " exceeds degree " << directions_[d].degree()
         << " in direction " << d;
      throw InvalidArgument(os.str());
    }
  }
  check_point(x);
  std::vector<Index> first(directions_.size());
  std::vector<std::vector<double>> values(directions_.size());
  for (std::size_t d = 0; d < directions_.size(); ++d) {
    const auto& kv = directions_[d];
    const double xd = std::clamp(x[d], kv.lower(), kv.upper());
    const Index span = kv.find_span(xd);
    first[d] = span - kv.degree();
    if (order[d] == 0) {
      values[d] = kv.basis_functions(span, xd);
    } else {
      values[d] = kv.basis_derivatives(span, xd, order[d])[static_cast<std::size_t>(order[d])];
    }
  }
  return tensor_combine(*this, first, values);
}

std::vector<Box> SplineSpace::integration_cells() const {
  const std::size_t N = directions_.size();
  std::vector<Box> cells;
  std::size_t total = 1;
  for (const auto& kv : directions_) total *= static_cast<std::size_t>(kv.num_elements());
  cells.reserve(total);
  std::vector<std::size_t> counter(N, 0);
  for (std::size_t c = 0; c < total; ++c) {
    Box b;
    for (std::size_t d = 0; d < N; ++d) {
      const auto& bp = directions_[d].breakpoints();
      b.lower.push_back(bp[counter[d]]);
      b.upper.push_back(bp[counter[d] + 1]);
    }
    cells.push_back(std::move(b));
    for (std::size_t d = N; d-- > 0;) {
      if (++counter[d] < static_cast<std::size_t>(directions_[d].num_elements())) break;
      counter[d] = 0;
    }
  }
  return cells;
}

RowMatrix SplineSpace::greville_points() const {
  const std::size_t N = directions_.size();
  std::vector<std::vector<double>> g;
  for (const auto& kv : directions_) g.push_back(kv.greville());
  RowMatrix pts(dimension_, static_cast<Index>(N));
  for (Index j = 0; j < dimension_; ++j) {
    const auto multi = unflatten(j);
    for (std::size_t d = 0; d < N; ++d) pts(j, static_cast<Index>(d)) = g[d][static_cast<std::size_t>(multi[d])];
  }
  return pts;
}

SplineSpace make_polynomial_space(double lower, double upper, int degree) {
  return SplineSpace(make_open_knot_vector(lower, upper, degree, {}));
}

}  // namespace rwls
