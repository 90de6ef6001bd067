#include <rwls/thin_plate.hpp>

#include <rwls/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>
#include <utility>

namespace rwls {

double PenaltyMatrix::energy(const Matrix& coefficients) const {
  double e = 0.0;
  for (Index k = 0; k < coefficients.cols(); ++k) {
    const Vector c = coefficients.col(k);
    e += c.dot(matrix_ * c);
  }
  return e;
}

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

}  // namespace

QuadratureRule gauss_legendre(int points) {
  if (points < 1) throw InvalidArgument("quadrature: need at least one point");
  const int n = points;
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      const auto [pn, pm] = legendre(n, x);
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pn, pm] = legendre(n, x);
    dp = n * (x * pn - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

namespace {

struct SecondOrderTerm {
  MultiIndex order;
  double multinomial;  // 2! / a!
};

std::vector<SecondOrderTerm> second_order_terms(int N) {
  std::vector<SecondOrderTerm> terms;
  for (int a = 0; a < N; ++a) {
    for (int b = a; b < N; ++b) {
      MultiIndex order(static_cast<std::size_t>(N), 0);
      order[static_cast<std::size_t>(a)] += 1;
      order[static_cast<std::size_t>(b)] += 1;
      terms.push_back({order, a == b ? 1.0 : 2.0});
    }
  }
  return terms;
}

}  // namespace

PenaltyMatrix assemble_thin_plate(const FunctionSpace& space) {
  const auto degrees = space.degrees();
  for (int d : degrees) {
    if (d < 2) throw InvalidArgument("thin-plate energy needs degree >= 2 in every direction");
  }
  const int N = space.parametric_dimension();
  const int q = *std::max_element(degrees.begin(), degrees.end()) + 1;
  const QuadratureRule rule = gauss_legendre(q);
  const auto terms = second_order_terms(N);

  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> point(static_cast<std::size_t>(N));
  std::vector<std::size_t> counter(static_cast<std::size_t>(N));
  std::size_t qtotal = 1;
  for (int d = 0; d < N; ++d) qtotal *= static_cast<std::size_t>(q);

  std::unordered_map<Index, Index> local_of;
  std::vector<Index> global;
  Matrix local;

  for (const Box& cell : space.integration_cells()) {
    local_of.clear();
    global.clear();
    // collect every function touching the cell from its centre
    for (int d = 0; d < N; ++d) {
      const auto ud = static_cast<std::size_t>(d);
      point[ud] = 0.5 * (cell.lower[ud] + cell.upper[ud]);
    }
    for (const auto& bv : space.eval_basis(point)) {
      if (local_of.emplace(bv.index, static_cast<Index>(global.size())).second) global.push_back(bv.index);
    }
    local = Matrix::Zero(static_cast<Index>(global.size()), static_cast<Index>(global.size()));

    std::fill(counter.begin(), counter.end(), 0);
    for (std::size_t c = 0; c < qtotal; ++c) {
      double w = 1.0;
      for (int d = 0; d < N; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        const double half = 0.5 * (cell.upper[ud] - cell.lower[ud]);
        point[ud] = cell.lower[ud] + half * (rule.nodes[counter[ud]] + 1.0);
        w *= half * rule.weights[counter[ud]];
      }
      for (const auto& term : terms) {
        const BasisValues vals = space.eval_basis_derivatives(point, term.order);
        const double tw = w * term.multinomial;
        for (const auto& a : vals) {
          auto ia = local_of.find(a.index);
          if (ia == local_of.end()) continue;
          for (const auto& b : vals) {
            auto ib = local_of.find(b.index);
            if (ib == local_of.end()) continue;
            local(ia->second, ib->second) += tw * a.value * b.value;
          }
        }
      }
      for (std::size_t d = static_cast<std::size_t>(N); d-- > 0;) {
        if (++counter[d] < static_cast<std::size_t>(q)) break;
        counter[d] = 0;
      }
    }
    for (Index a = 0; a < local.rows(); ++a) {
      for (Index b = 0; b < local.cols(); ++b) {
        if (local(a, b) != 0.0) {
          triplets.emplace_back(global[static_cast<std::size_t>(a)], global[static_cast<std::size_t>(b)], local(a, b));
        }
      }
    }
  }

  SparseMatrix P(space.dimension(), space.dimension());
  P.setFromTriplets(triplets.begin(), triplets.end());
  return PenaltyMatrix(std::move(P));
}

}  // namespace rwls
