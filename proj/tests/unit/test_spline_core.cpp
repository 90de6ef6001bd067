#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <rwls/collocation.hpp>
#include <rwls/errors.hpp>
#include <rwls/knot_vector.hpp>
#include <rwls/parameterization.hpp>
#include <rwls/spline_function.hpp>
#include <rwls/spline_space.hpp>

#include <Eigen/LU>

#include <cmath>
#include <map>

using namespace rwls;

namespace {

std::map<Index, double> as_map(const BasisValues& v) {
  std::map<Index, double> m;
  for (const auto& b : v) m[b.index] += b.value;
  return m;
}

double eval1(const SplineSpace& s, double x) {
  double sum = 0.0;
  for (const auto& b : s.eval_basis(std::vector<double>{x})) sum += b.value;
  return sum;
}

SplineSpace cubic_space() {
  const std::vector<double> interior{0.1, 0.25, 0.5, 0.55, 0.8};
  return SplineSpace(make_open_knot_vector(0, 1, 3, interior));
}

}  // namespace

TEST_CASE("open knot vectors") {
  const std::vector<double> interior{-5.0 / 3.0, 5.0 / 3.0};
  const KnotVector t = make_open_knot_vector(-5, 5, 2, interior);
  const std::vector<double> expected{-5, -5, -5, -5.0 / 3.0, 5.0 / 3.0, 5, 5, 5};
  CHECK(t.knots() == expected);
  CHECK(t.dimension() == 5);

  const KnotVector lin = make_open_knot_vector(0, 1, 1, {});
  CHECK(lin.knots() == std::vector<double>{0, 0, 1, 1});
  CHECK(lin.dimension() == 2);

  const std::vector<double> three{0.25, 0.5, 0.75};
  CHECK(make_open_knot_vector(0, 1, 3, three).dimension() == 7);

  const std::vector<double> decreasing{0.5, 0.25};
  CHECK_THROWS_AS(make_open_knot_vector(0, 1, 2, decreasing), InvalidArgument);
  const std::vector<double> outside{0.5, 1.5};
  CHECK_THROWS_AS(make_open_knot_vector(0, 1, 2, outside), InvalidArgument);
  const std::vector<double> on_end{0.0, 0.5};
  CHECK_THROWS_AS(make_open_knot_vector(0, 1, 2, on_end), InvalidArgument);
}

TEST_CASE("knot vector validation") {
  CHECK_THROWS_AS(KnotVector(2, {0, 0, 0, 0.5, 0.4, 1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(KnotVector(1, {0, 0, 0.5, 0.5, 0.5, 1, 1}), InvalidArgument);  // multiplicity 3 > k
  CHECK_THROWS_AS(KnotVector(2, {0, 0, 1, 1, 1, 1}), InvalidArgument);           // not clamped at the left
  CHECK_NOTHROW(KnotVector(2, {0, 0, 1, 2, 3, 3}, false));
  CHECK_THROWS_AS(KnotVector(-1, {0, 1}), InvalidArgument);
}

TEST_CASE("basis evaluation: examples") {
  const SplineSpace hats(make_open_knot_vector(0, 1, 1, {}));
  auto v = as_map(hats.eval_basis(std::vector<double>{0.25}));
  CHECK(v.size() == 2);
  CHECK(v[0] == doctest::Approx(0.75));
  CHECK(v[1] == doctest::Approx(0.25));

  const SplineSpace q(fixture::quadratic_knots());
  auto left = as_map(q.eval_basis(std::vector<double>{-5}));
  CHECK(left[0] == 1.0);
  for (const auto& [j, val] : left) {
    if (j != 0) CHECK(val == 0.0);
  }

  // frozen from the recursive definition below: 1/8, 3/4, 1/8 on functions 2..4 (1-based)
  auto mid = as_map(q.eval_basis(std::vector<double>{0.0}));
  CHECK(mid[1] == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(mid[2] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(mid[3] == doctest::Approx(0.125).epsilon(1e-14));
  const auto& t = q.direction(0).knots();
  for (int j = 0; j < 5; ++j) CHECK(mid[j] == doctest::Approx(oracle::bspline(t, j, 2, 0.0)).epsilon(1e-14));

  CHECK_THROWS_AS(q.eval_basis(std::vector<double>{5.5}), DomainError);
  CHECK_THROWS_AS(q.eval_basis(std::vector<double>{-6}), DomainError);
}

TEST_CASE("basis evaluation matches the recursive definition") {
  const SplineSpace s = cubic_space();
  const auto& t = s.direction(0).knots();
  auto g = oracle::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = trial == 0 ? 1.0 : oracle::uniform(g, 0, 1);
    auto v = as_map(s.eval_basis(std::vector<double>{x}));
    for (Index j = 0; j < s.dimension(); ++j) {
      CHECK(v[j] == doctest::Approx(oracle::bspline(t, static_cast<int>(j), 3, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("partition of unity, non-negativity and local support") {
  const SplineSpace s = cubic_space();
  const SplineSpace tensor({make_open_knot_vector(-1, 2, 2, std::vector<double>{0, 0.5}),
                            make_open_knot_vector(0, 1, 3, std::vector<double>{0.3})});
  auto g = oracle::rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const double x = oracle::uniform(g, 0, 1);
    double sum = 0.0;
    for (const auto& b : s.eval_basis(std::vector<double>{x})) {
      CHECK(b.value >= 0.0);
      const auto& t = s.direction(0).knots();
      if (b.value > 0.0) {
        CHECK(x >= t[static_cast<std::size_t>(b.index)]);
        CHECK(x <= t[static_cast<std::size_t>(b.index) + 4]);
      }
      sum += b.value;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);

    const std::vector<double> p{oracle::uniform(g, -1, 2), oracle::uniform(g, 0, 1)};
    double tsum = 0.0;
    const auto tv = tensor.eval_basis(p);
    CHECK(tv.size() <= 12);
    for (const auto& b : tv) {
      CHECK(b.value >= 0.0);
      tsum += b.value;
    }
    CHECK(std::abs(tsum - 1.0) <= 1e-12);
  }
}

TEST_CASE("tensor ordering: last direction fastest") {
  const KnotVector a = make_open_knot_vector(0, 1, 1, std::vector<double>{0.5});
  const KnotVector b = make_open_knot_vector(0, 1, 2, {});
  const SplineSpace s({a, b});
  CHECK(s.dimension() == 9);
  CHECK(s.flatten({1, 2}) == 5);
  CHECK(s.unflatten(5) == std::vector<Index>{1, 2});
  const std::vector<double> p{0.3, 0.6};
  const SplineSpace sa(a), sb(b);
  auto va = as_map(sa.eval_basis(std::vector<double>{0.3}));
  auto vb = as_map(sb.eval_basis(std::vector<double>{0.6}));
  for (const auto& bv : s.eval_basis(p)) {
    const auto m = s.unflatten(bv.index);
    CHECK(bv.value == doctest::Approx(va[m[0]] * vb[m[1]]));
  }
}

TEST_CASE("basis derivatives") {
  const SplineSpace hats(make_open_knot_vector(0, 1, 1, {}));
  const std::vector<double> x{0.25};
  auto d = as_map(hats.eval_basis_derivatives(x, {1}));
  CHECK(d[0] == doctest::Approx(-1.0));
  CHECK(d[1] == doctest::Approx(1.0));

  const SplineSpace s = cubic_space();
  auto zero = as_map(s.eval_basis_derivatives(std::vector<double>{0.37}, {0}));
  auto plain = as_map(s.eval_basis(std::vector<double>{0.37}));
  CHECK(zero == plain);

  CHECK_THROWS_AS(s.eval_basis_derivatives(std::vector<double>{0.3}, {4}), InvalidArgument);
  CHECK_THROWS_AS(s.eval_basis_derivatives(std::vector<double>{0.3}, {1, 0}), InvalidArgument);

  auto g = oracle::rng(5);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const double x0 = oracle::uniform(g, 0.01, 0.99);
    auto dv = as_map(s.eval_basis_derivatives(std::vector<double>{x0}, {1}));
    for (Index j = 0; j < s.dimension(); ++j) {
      auto f = [&](double y) { return as_map(s.eval_basis(std::vector<double>{y}))[j]; };
      const double fd = oracle::central_difference(f, x0, h);
      CHECK(std::abs(dv[j] - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }

  // second derivatives against the recursive definition differentiated numerically
  const auto& t = s.direction(0).knots();
  for (int trial = 0; trial < 20; ++trial) {
    const double x0 = oracle::uniform(g, 0.01, 0.99);
    auto d2 = as_map(s.eval_basis_derivatives(std::vector<double>{x0}, {2}));
    for (int j = 0; j < 9; ++j) {
      const double hh = 1e-4;
      const double fd = (oracle::bspline(t, j, 3, x0 + hh) - 2 * oracle::bspline(t, j, 3, x0) +
                         oracle::bspline(t, j, 3, x0 - hh)) / (hh * hh);
      CHECK(std::abs(d2[j] - fd) <= 1e-3 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST_CASE("collocation matrices") {
  const SplineSpace s = cubic_space();
  const RowMatrix g = s.greville_points();
  const Matrix B = collocation_matrix(s, g);
  const auto n = static_cast<std::size_t>(s.dimension());
  oracle::Mat Bo(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Bo[i][j] = B(static_cast<Index>(i), static_cast<Index>(j));
  const double d = oracle::det_laplace(Bo);
  CHECK(std::abs(d) > 1e-6);
  CHECK(determinant(B) == doctest::Approx(d).epsilon(1e-10));
  CHECK(is_nonsingular(B, determinant(B)));

  const SplineSpace constant(make_open_knot_vector(0, 1, 0, {}));
  RowMatrix pts(3, 1);
  pts << 0.1, 0.5, 1.0;
  const Matrix ones = collocation_matrix(constant, pts);
  CHECK(ones.cols() == 1);
  CHECK(ones.isApprox(Matrix::Ones(3, 1)));

  const Matrix B7 = collocation_matrix(*fixture::quadratic_spline(), fixture::seven_sites());
  CHECK(B7.rows() == 7);
  CHECK(B7.cols() == 5);
  for (Index i = 0; i < 7; ++i) {
    CHECK(B7.row(i).sum() == doctest::Approx(1.0));
    CHECK((B7.row(i).array() != 0.0).count() <= 3);
  }
  const SparseRowMatrix S = collocation_sparse(*fixture::quadratic_spline(), fixture::seven_sites());
  CHECK(Matrix(S).isApprox(B7));

  RowMatrix bad(1, 1);
  bad << 7.0;
  CHECK_THROWS_AS(collocation_matrix(s, bad), DomainError);
}

TEST_CASE("Schoenberg-Whitney admissibility") {
  const KnotVector t = fixture::quadratic_knots();
  const RowMatrix x = fixture::seven_sites();
  auto pick = [&](std::vector<int> k) {
    std::vector<double> out;
    for (int i : k) out.push_back(x(i - 1, 0));
    return out;
  };
  CHECK_FALSE(schoenberg_whitney_admissible(t, pick({1, 2, 3, 4, 5})));
  CHECK(schoenberg_whitney_admissible(t, pick({1, 2, 3, 4, 7})));
  CHECK_THROWS_AS(schoenberg_whitney_admissible(t, pick({1, 2, 3})), InvalidArgument);

  const KnotVector poly = make_open_knot_vector(-5, 5, 2, {});
  CHECK(schoenberg_whitney_admissible(poly, std::vector<double>{-4, 0.5, 3}));

  // equivalence with nonsingular minors over all 21 subsets
  const Matrix B = collocation_matrix(SplineSpace(t), x);
  int admissible = 0;
  for (const auto& k : oracle::subsets(7, 5)) {
    oracle::Mat BK;
    std::vector<double> sites;
    Matrix M(5, 5);
    for (std::size_t r = 0; r < 5; ++r) {
      BK.emplace_back();
      for (Index j = 0; j < 5; ++j) {
        BK.back().push_back(B(k[r], j));
        M(static_cast<Index>(r), j) = B(k[r], j);
      }
      sites.push_back(x(k[r], 0));
    }
    const bool sw = schoenberg_whitney_admissible(t, sites);
    const bool nonsingular = is_nonsingular(M, oracle::det_laplace(BK));
    CHECK(sw == nonsingular);
    admissible += sw ? 1 : 0;
  }
  CHECK(admissible == 20);
}

TEST_CASE("spline functions") {
  auto space = std::make_shared<const SplineSpace>(cubic_space());
  Matrix c(9, 2);
  c.col(0).setConstant(2.5);
  c.col(1).setConstant(-1.0);
  const SplineFunction f(space, c);
  auto g = oracle::rng(9);
  for (int i = 0; i < 50; ++i) {
    const std::vector<double> x{oracle::uniform(g, 0, 1)};
    const Vector v = f.evaluate(x);
    CHECK(v(0) == doctest::Approx(2.5));
    CHECK(v(1) == doctest::Approx(-1.0));
    const Vector d = f.evaluate_derivative(x, {1});
    CHECK(std::abs(d(0)) < 1e-12);
    CHECK(std::abs(d(1)) < 1e-12);
  }
  // interpolation at the Greville abscissae
  const RowMatrix gp = space->greville_points();
  Vector data(9);
  data << 0.3, -1, 2, 0.5, 0.1, 4, -2, 1, 0;
  const Matrix B = collocation_matrix(*space, gp);
  const SplineFunction interp(space, B.partialPivLu().solve(data));
  for (Index i = 0; i < 9; ++i) CHECK(std::abs(interp.evaluate(row_view(gp, i))(0) - data(i)) < 1e-10);

  CHECK_THROWS_AS(SplineFunction(space, Matrix::Zero(7, 1)), InvalidArgument);
  CHECK_THROWS_AS(f.evaluate(std::vector<double>{1.5}), DomainError);
}

TEST_CASE("parameterization") {
  RowMatrix pts(5, 2);
  pts << 0, 0, 1, 1, 2, 2, 3, 3, 4, 4;
  const auto u = parameterize(pts, ParameterizationMethod::uniform);
  CHECK(u == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  const auto c = parameterize(pts, ParameterizationMethod::chord);
  for (std::size_t i = 0; i < 5; ++i) CHECK(c[i] == doctest::Approx(u[i]));

  RowMatrix seg(3, 1);
  seg << 0, 1, 4;
  const auto s = parameterize(seg, ParameterizationMethod::chord);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == doctest::Approx(0.25));
  CHECK(s[2] == 1.0);

  RowMatrix dup(3, 1);
  dup << 0, 0, 1;
  CHECK_THROWS_AS(parameterize(dup, ParameterizationMethod::chord), InvalidArgument);
  CHECK_THROWS_AS(parameterize(RowMatrix(1, 1), ParameterizationMethod::uniform), InvalidArgument);
  CHECK(parse_parameterization("chord") == ParameterizationMethod::chord);
  CHECK_THROWS_AS(parse_parameterization("centripetal"), InvalidArgument);
}

TEST_CASE("averaging knots") {
  std::vector<double> u(12);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = static_cast<double>(i) / 11.0;

  const KnotVector t = averaging_knots(u, 12, 3);
  CHECK(t.dimension() == 12);
  // interior knot j (1-based) is the mean of sites j+1 .. j+3 (1-based)
  for (std::size_t j = 1; j <= 12 - 4; ++j) {
    const double mean = (u[j] + u[j + 1] + u[j + 2]) / 3.0;
    CHECK(t.knots()[3 + j] == doctest::Approx(mean).epsilon(1e-14));
  }
  CHECK(t.lower() == 0.0);
  CHECK(t.upper() == 1.0);

  const KnotVector lin = averaging_knots(u, 12, 1);
  for (std::size_t j = 1; j <= 10; ++j) CHECK(lin.knots()[1 + j] == doctest::Approx(u[j]));

  // fewer functions than sites: uniform interior spacing for uniform sites
  const KnotVector few = averaging_knots(u, 8, 3);
  CHECK(few.dimension() == 8);
  const auto& k = few.knots();
  CHECK(k[4] == doctest::Approx(2.0 / 7.0));
  for (std::size_t j = 4; j < 7; ++j) CHECK(k[j + 1] - k[j] == doctest::Approx(k[5] - k[4]).epsilon(1e-10));

  CHECK_THROWS_AS(averaging_knots(u, 13, 3), InvalidArgument);
}
