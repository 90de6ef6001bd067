#include <rwls/knot_vector.hpp>

#include <rwls/errors.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace rwls {

namespace {

std::string describe(double x, double lo, double hi) {
  std::ostringstream os;
  os.precision(17);
  os << "point " << x << " outside domain [" << lo << ", " << hi << "]";
  return os.str();
}

}  // namespace

KnotVector::KnotVector(int degree, std::vector<double> knots, bool clamped)
    : degree_(degree), knots_(std::move(knots)), clamped_(clamped) {
  if (degree_ < 0) throw InvalidArgument("knot vector: negative degree");
  const auto k = static_cast<std::size_t>(order());
  if (knots_.size() < k + 1) {
    throw InvalidArgument("knot vector: need at least degree + 2 knots (dimension >= 1)");
  }
  for (double t : knots_) {
    if (!std::isfinite(t)) throw InvalidArgument("knot vector: non-finite knot");
  }
  if (!std::is_sorted(knots_.begin(), knots_.end())) {
    throw InvalidArgument("knot vector: knots must be non-decreasing");
  }
  for (std::size_t i = 0; i < knots_.size();) {
    std::size_t j = i;
    while (j < knots_.size() && knots_[j] == knots_[i]) ++j;
    if (j - i > k) {
      std::ostringstream os;
      os << "knot vector: knot " << knots_[i] << " has multiplicity " << (j - i)
         << " > order " << k;
      throw InvalidArgument(os.str());
    }
    i = j;
  }
  if (clamped_) {
    const bool left = std::all_of(knots_.begin(), knots_.begin() + static_cast<long>(k),
                                  [&](double t) { return t == knots_.front(); });
    const bool right = std::all_of(knots_.end() - static_cast<long>(k), knots_.end(),
                                   [&](double t) { return t == knots_.back(); });
    if (!left || !right) {
      throw InvalidArgument("knot vector: clamped knot vector needs end multiplicity degree + 1");
    }
  }
  if (!(lower() < upper())) throw InvalidArgument("knot vector: empty parametric domain");

  const auto n = static_cast<std::size_t>(dimension());
  for (std::size_t i = static_cast<std::size_t>(degree_); i <= n; ++i) {
    if (breakpoints_.empty() || knots_[i] != breakpoints_.back()) breakpoints_.push_back(knots_[i]);
  }
}

Index KnotVector::find_span(double x) const {
  if (!contains(x)) throw DomainError(describe(x, lower(), upper()));
  const Index n = dimension();
  const auto& t = knots_;
  if (x >= t[static_cast<std::size_t>(n)]) {
    // right end: last nonempty span
    Index mu = n - 1;
    while (t[static_cast<std::size_t>(mu)] == t[static_cast<std::size_t>(mu + 1)]) --mu;
    return mu;
  }
  // largest mu in [degree, n-1] with t_mu <= x
  auto first = t.begin() + degree_;
  auto last = t.begin() + n;
  auto it = std::upper_bound(first, last + 1, x);
  return static_cast<Index>(it - t.begin()) - 1;
}

Index KnotVector::element_index(double x) const {
  if (!contains(x)) throw DomainError(describe(x, lower(), upper()));
  if (x >= breakpoints_.back()) return num_elements() - 1;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return static_cast<Index>(it - breakpoints_.begin()) - 1;
}

std::pair<Index, Index> KnotVector::support_elements(Index j) const {
  const double a = std::max(knots_[static_cast<std::size_t>(j)], lower());
  const double b = std::min(knots_[static_cast<std::size_t>(j + order())], upper());
  auto lo = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), a) - breakpoints_.begin();
  auto hi = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), b) - breakpoints_.begin();
  return {static_cast<Index>(lo), static_cast<Index>(hi) - 1};
}

std::vector<double> KnotVector::basis_functions(Index span, double x) const {
  // Cox-de Boor triangle, evaluated in place.
  const int p = degree_;
  const auto& t = knots_;
  const auto mu = static_cast<std::size_t>(span);
  std::vector<double> N(static_cast<std::size_t>(p) + 1, 0.0);
  std::vector<double> left(static_cast<std::size_t>(p) + 1), right(static_cast<std::size_t>(p) + 1);
  N[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    left[uj] = x - t[mu + 1 - uj];
    right[uj] = t[mu + uj] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      const double temp = N[ur] / (right[ur + 1] + left[uj - ur]);
      N[ur] = saved + right[ur + 1] * temp;
      saved = left[uj - ur] * temp;
    }
    N[uj] = saved;
  }
  return N;
}

std::vector<std::vector<double>> KnotVector::basis_derivatives(Index span, double x,
                                                               int max_order) const {
  const int p = degree_;
  const auto up = static_cast<std::size_t>(p);
  const auto& t = knots_;
  const auto mu = static_cast<std::size_t>(span);
  const int nd = std::min(max_order, p);

  // ndu holds basis values (upper triangle) and knot differences (lower).
  std::vector<std::vector<double>> ndu(up + 1, std::vector<double>(up + 1, 0.0));
  std::vector<double> left(up + 1), right(up + 1);
  ndu[0][0] = 1.0;
  for (std::size_t j = 1; j <= up; ++j) {
    left[j] = x - t[mu + 1 - j];
    right[j] = t[mu + j] - x;
    double saved = 0.0;
    for (std::size_t r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }

  std::vector<std::vector<double>> ders(static_cast<std::size_t>(max_order) + 1,
                                        std::vector<double>(up + 1, 0.0));
  for (std::size_t j = 0; j <= up; ++j) ders[0][j] = ndu[j][p];

  std::vector<std::vector<double>> a(2, std::vector<double>(up + 1, 0.0));
  for (int r = 0; r <= p; ++r) {
    std::size_t s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= nd; ++k) {
      double d = 0.0;
      const int rk = r - k;
      const int pk = p - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[static_cast<std::size_t>(pk + 1)][static_cast<std::size_t>(rk)];
        d = a[s2][0] * ndu[static_cast<std::size_t>(rk)][static_cast<std::size_t>(pk)];
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        a[s2][uj] = (a[s1][uj] - a[s1][uj - 1]) /
                    ndu[static_cast<std::size_t>(pk + 1)][static_cast<std::size_t>(rk + j)];
        d += a[s2][uj] * ndu[static_cast<std::size_t>(rk + j)][static_cast<std::size_t>(pk)];
      }
      if (r <= pk) {
        a[s2][static_cast<std::size_t>(k)] =
            -a[s1][static_cast<std::size_t>(k - 1)] / ndu[static_cast<std::size_t>(pk + 1)][static_cast<std::size_t>(r)];
        d += a[s2][static_cast<std::size_t>(k)] * ndu[static_cast<std::size_t>(r)][static_cast<std::size_t>(pk)];
      }
      ders[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] = d;
      std::swap(s1, s2);
    }
  }

  double factor = p;
  for (int k = 1; k <= nd; ++k) {
    for (std::size_t j = 0; j <= up; ++j) ders[static_cast<std::size_t>(k)][j] *= factor;
    factor *= (p - k);
  }
  return ders;
}

std::vector<double> KnotVector::greville() const {
  const Index n = dimension();
  std::vector<double> g(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (degree_ == 0) {
      g[uj] = 0.5 * (knots_[uj] + knots_[uj + 1]);
      continue;
    }
    double s = 0.0;
    for (int i = 1; i <= degree_; ++i) s += knots_[uj + static_cast<std::size_t>(i)];
    g[uj] = s / degree_;
  }
  return g;
}

std::vector<int> KnotVector::multiplicities() const {
  std::vector<int> mult;
  mult.reserve(breakpoints_.size());
  for (double b : breakpoints_) {
    mult.push_back(static_cast<int>(std::count(knots_.begin(), knots_.end(), b)));
  }
  return mult;
}

KnotVector make_open_knot_vector(double lower, double upper, int degree,
                                 std::span<const double> interior_breakpoints) {
  if (degree < 0) throw InvalidArgument("open knot vector: negative degree");
  if (!(lower < upper)) throw InvalidArgument("open knot vector: empty domain");
  double prev = lower;
  for (double b : interior_breakpoints) {
    if (!(b > lower && b < upper)) {
      throw InvalidArgument("open knot vector: interior breakpoint outside the open domain");
    }
    if (!(b > prev)) throw InvalidArgument("open knot vector: breakpoints must be strictly increasing");
    prev = b;
  }
  std::vector<double> t;
  t.reserve(interior_breakpoints.size() + 2 * static_cast<std::size_t>(degree + 1));
  t.insert(t.end(), static_cast<std::size_t>(degree + 1), lower);
  t.insert(t.end(), interior_breakpoints.begin(), interior_breakpoints.end());
  t.insert(t.end(), static_cast<std::size_t>(degree + 1), upper);
  return KnotVector(degree, std::move(t), true);
}

KnotVector make_uniform_knot_vector(double lower, double upper, int degree, int interior_count) {
  if (interior_count < 0) throw InvalidArgument("uniform knot vector: negative interior count");
  std::vector<double> interior(static_cast<std::size_t>(interior_count));
  for (int i = 0; i < interior_count; ++i) {
    interior[static_cast<std::size_t>(i)] =
        lower + (upper - lower) * static_cast<double>(i + 1) / static_cast<double>(interior_count + 1);
  }
  return make_open_knot_vector(lower, upper, degree, interior);
}

KnotVector averaging_knots(std::span<const double> sites, Index n, int degree) {
  const auto m = static_cast<Index>(sites.size());
  if (degree < 1) throw InvalidArgument("averaging knots: degree must be at least 1");
  if (n > m) throw InvalidArgument("averaging knots: more basis functions than sites");
  if (n < degree + 1) throw InvalidArgument("averaging knots: need at least degree + 1 functions");
  if (!std::is_sorted(sites.begin(), sites.end())) {
    throw InvalidArgument("averaging knots: sites must be sorted");
  }

  std::vector<double> u(sites.begin(), sites.end());
  if (n < m) {
    // resample at n equispaced quantiles of the site sequence
    std::vector<double> q(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
      const double pos = static_cast<double>(i) * static_cast<double>(m - 1) / static_cast<double>(n - 1);
      const auto lo = static_cast<std::size_t>(std::floor(pos));
      const auto hi = std::min(lo + 1, static_cast<std::size_t>(m - 1));
      const double w = pos - static_cast<double>(lo);
      q[static_cast<std::size_t>(i)] = (1.0 - w) * u[lo] + w * u[hi];
    }
    q.front() = u.front();
    q.back() = u.back();
    u = std::move(q);
  }

  const Index interior = n - (degree + 1);
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n + degree + 1));
  t.insert(t.end(), static_cast<std::size_t>(degree + 1), u.front());
  for (Index j = 1; j <= interior; ++j) {
    double s = 0.0;
    for (Index i = j; i < j + degree; ++i) s += u[static_cast<std::size_t>(i)];
    t.push_back(s / degree);
  }
  t.insert(t.end(), static_cast<std::size_t>(degree + 1), u.back());
  return KnotVector(degree, std::move(t), true);
}

}  // namespace rwls
