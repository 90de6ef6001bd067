#include <rwls/decomposition.hpp>

#include <rwls/collocation.hpp>
#include <rwls/errors.hpp>
#include <rwls/wls.hpp>

#include <Eigen/LU>

#include <cassert>
#include <cmath>
#include <sstream>

namespace rwls {

namespace {

Matrix select_rows(const Matrix& M, std::span<const Index> rows) {
  Matrix out(static_cast<Index>(rows.size()), M.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Index>(r)) = M.row(rows[r]);
  return out;
}

Matrix select_rows(const RowMatrix& M, std::span<const Index> rows) {
  Matrix out(static_cast<Index>(rows.size()), M.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.row(static_cast<Index>(r)) = M.row(rows[r]);
  return out;
}

double subset_weight(const Vector& weights, std::span<const Index> subset) {
  double w = 1.0;
  for (Index i : subset) w *= weights(i);
  return w;
}

SubsetCertificate certify(const Matrix& BK, const Matrix& fK, const Vector& weights, std::span<const Index> subset) {
  SubsetCertificate cert;
  cert.subset.assign(subset.begin(), subset.end());
  Eigen::PartialPivLU<Matrix> lu(BK);
  cert.det = lu.determinant();
  cert.admissible = is_nonsingular(BK, cert.det);
  cert.lambda = subset_weight(weights, subset) * cert.det * cert.det;
  if (cert.admissible) cert.coefficients = lu.solve(fK);
  return cert;
}

}  // namespace

SubsetCertificate interpolate_subset(const FunctionSpace& space, const WeightedPointCloud& cloud,
                                     std::span<const Index> subset) {
  if (static_cast<Index>(subset.size()) != space.dimension()) {
    throw InvalidArgument("interpolate_subset: subset size must equal the space dimension");
  }
  for (Index i : subset) {
    if (i < 0 || i >= cloud.size()) throw InvalidArgument("interpolate_subset: index out of range");
  }
  RowMatrix sites(static_cast<Index>(subset.size()), cloud.parametric_dimension());
  for (std::size_t r = 0; r < subset.size(); ++r) sites.row(static_cast<Index>(r)) = cloud.sites().row(subset[r]);
  return certify(collocation_matrix(space, sites), select_rows(cloud.values(), subset), cloud.weights(), subset);
}

Decomposition::Decomposition(std::shared_ptr<const FunctionSpace> space, Matrix collocation, Vector weights,
                             std::vector<SubsetCertificate> certificates)
    : space_(std::move(space)),
      collocation_(std::move(collocation)),
      weights_(std::move(weights)),
      certificates_(std::move(certificates)) {
  if (weights_.size() != collocation_.rows()) throw InvalidArgument("decomposition: weight count mismatch");
  const Matrix gram = collocation_.transpose() * weights_.asDiagonal() * collocation_;
  gram_determinant_ = Eigen::PartialPivLU<Matrix>(gram).determinant();
  for (const auto& c : certificates_) {
    if (c.admissible) normalizer_ += c.lambda;
  }
  if (!(normalizer_ > 0.0)) {
    throw RankDeficientError("decomposition: no admissible subset, the least-squares problem is rank deficient");
  }
}

std::size_t Decomposition::admissible_count() const {
  std::size_t n = 0;
  for (const auto& c : certificates_) n += c.admissible ? 1 : 0;
  return n;
}

double Decomposition::cauchy_binet_residual() const {
  return std::abs(normalizer_ - gram_determinant_) / std::abs(gram_determinant_);
}

template <typename Visit>
void Decomposition::for_each_admissible(PointView x, const MultiIndex* order, Visit&& visit) const {
  const BasisValues basis = order ? space_->eval_basis_derivatives(x, *order) : space_->eval_basis(x);
  const auto D = certificates_.empty() ? Index{0} : certificates_.front().coefficients.cols();
  Vector value(D);
  for (const auto& c : certificates_) {
    if (!c.admissible) continue;
    value.setZero(c.coefficients.cols());
    for (const auto& b : basis) value += b.value * c.coefficients.row(b.index).transpose();
    visit(c, value);
  }
}

Vector Decomposition::reconstruct(PointView x) const {
  Vector sum;
  for_each_admissible(x, nullptr, [&](const SubsetCertificate& c, const Vector& v) {
    if (sum.size() == 0) sum = Vector::Zero(v.size());
    sum += c.lambda * v;
  });
  return sum / normalizer_;
}

Vector Decomposition::reconstruct_derivative(PointView x, const MultiIndex& order) const {
  Vector sum;
  for_each_admissible(x, &order, [&](const SubsetCertificate& c, const Vector& v) {
    if (sum.size() == 0) sum = Vector::Zero(v.size());
    sum += c.lambda * v;
  });
  return sum / normalizer_;
}

std::pair<Vector, Vector> Decomposition::derivative_bounds(PointView x, const MultiIndex& order) const {
  Vector lo, hi;
  for_each_admissible(x, &order, [&](const SubsetCertificate&, const Vector& v) {
    if (lo.size() == 0) {
      lo = v;
      hi = v;
    } else {
      lo = lo.cwiseMin(v);
      hi = hi.cwiseMax(v);
    }
  });
  return {lo, hi};
}

SplineFunction Decomposition::combined_function() const {
  Matrix sum;
  for (const auto& c : certificates_) {
    if (!c.admissible) continue;
    if (sum.size() == 0) sum = Matrix::Zero(c.coefficients.rows(), c.coefficients.cols());
    sum += c.lambda * c.coefficients;
  }
  return SplineFunction(space_, sum / normalizer_);
}

Decomposition Decomposition::reweighted(const Vector& weights) const {
  if (weights.size() != weights_.size()) throw InvalidArgument("decomposition: weight count mismatch");
  for (Index i = 0; i < weights.size(); ++i) {
    if (!(weights(i) > 0.0)) throw InvalidArgument("decomposition: weights must be positive");
  }
  std::vector<SubsetCertificate> certs = certificates_;
  for (auto& c : certs) c.lambda = subset_weight(weights, c.subset) * c.det * c.det;
  return Decomposition(space_, collocation_, weights, std::move(certs));
}

Decomposition decompose(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                        std::uint64_t cap) {
  if (!space) throw InvalidArgument("decompose: null space");
  const Index n = space->dimension();
  const Index m = cloud.size();
  if (n > m) {
    std::ostringstream os;
    os << "decompose: space dimension " << n << " exceeds the number of points " << m;
    throw RankDeficientError(os.str());
  }
  const Matrix B = collocation_matrix(*space, cloud.sites());
  const Matrix F = cloud.values();
  std::vector<SubsetCertificate> certs;
  certs.reserve(static_cast<std::size_t>(binomial(m, n) > cap ? 0 : binomial(m, n)));
  for_each_subset(m, n, [&](std::span<const Index> k) {
    certs.push_back(certify(select_rows(B, k), select_rows(F, k), cloud.weights(), k));
  }, cap);
  Decomposition dec(std::move(space), B, cloud.weights(), std::move(certs));
  assert(dec.cauchy_binet_residual() < 1e-6);
  return dec;
}

SplineFunction weight_limit_solution(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                                     std::span<const Index> subset, double magnitude) {
  if (!space) throw InvalidArgument("weight_limit_solution: null space");
  Vector w = cloud.weights();
  if (!subset.empty()) {
    if (!(magnitude > 0.0) || !std::isfinite(magnitude)) {
      throw InvalidArgument("weight_limit_solution: magnitude must be positive and finite");
    }
    if (static_cast<Index>(subset.size()) > space->dimension()) {
      throw InvalidArgument("weight_limit_solution: |I| must not exceed the space dimension");
    }
    for (Index i : subset) {
      if (i < 0 || i >= cloud.size()) throw InvalidArgument("weight_limit_solution: index out of range");
      w(i) = magnitude;
    }
  }
  Matrix c = solve_wls(collocation_matrix(*space, cloud.sites()), w, cloud.values());
  return SplineFunction(std::move(space), std::move(c));
}

}  // namespace rwls
