#pragma once

#include <rwls/knot_vector.hpp>
#include <rwls/point_cloud.hpp>
#include <rwls/spline_space.hpp>

#include <memory>
#include <random>

namespace fixture {

// The seven observations of the small verification example.
inline rwls::RowMatrix seven_sites() {
  rwls::RowMatrix x(7, 1);
  x << -4.5, -3.5, -2.2, -1.2, 0.8, 2.2, 4.0;
  return x;
}

inline rwls::RowMatrix seven_values() {
  rwls::RowMatrix f(7, 1);
  f << -2, 0, -1, 2.8, 2.9, 0.5, -2;
  return f;
}

/// Weights uniformly distributed on (0, 1), fixed seed.
inline rwls::Vector random_weights(rwls::Index m, unsigned seed = 7) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  rwls::Vector w(m);
  for (rwls::Index i = 0; i < m; ++i) w(i) = u(g);
  return w;
}

inline rwls::WeightedPointCloud seven_cloud(bool weighted = true) {
  if (!weighted) return {seven_sites(), seven_values()};
  return {seven_sites(), seven_values(), random_weights(7)};
}

inline rwls::KnotVector quadratic_knots() {
  return rwls::KnotVector(2, {-5, -5, -5, -5.0 / 3.0, 5.0 / 3.0, 5, 5, 5});
}

inline std::shared_ptr<const rwls::SplineSpace> quadratic_spline() {
  return std::make_shared<const rwls::SplineSpace>(quadratic_knots());
}

inline std::shared_ptr<const rwls::SplineSpace> quadratic_poly() {
  return std::make_shared<const rwls::SplineSpace>(rwls::make_polynomial_space(-5, 5, 2));
}

}  // namespace fixture
