#include <rwls/fitting.hpp>

#include <rwls/errors.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace rwls {

double evaluate_3peaks(double x, double y) {
  auto peak = [](double a, double b) { return 2.0 / (3.0 * std::exp(std::hypot(a, b))); };
  return peak(10.0 * x - 3.0, 10.0 * y - 3.0) + peak(10.0 * x + 3.0, 10.0 * y + 3.0) + peak(10.0 * x, 10.0 * y);
}

double evaluate_test_curve(int id, double x) {
  using std::numbers::pi;
  switch (id) {
    case 1:
      return std::abs(9.0 * std::sin(3.0 * pi * x) / (std::tanh(-1.5 * x + 1.0) + 1.0));
    case 2: {
      const double s = (x - 0.5) / 0.02;
      return std::exp(-s * s) / (0.02 * std::sqrt(pi));
    }
    case 3:
      return std::tanh(std::cos(2.0 * pi * x) / 0.05);
    default:
      throw InvalidArgument("test curve id must be 1, 2 or 3, got " + std::to_string(id));
  }
}

}  // namespace rwls
