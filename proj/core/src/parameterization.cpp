#include <rwls/parameterization.hpp>

#include <rwls/errors.hpp>

#include <sstream>
#include <string>

namespace rwls {

ParameterizationMethod parse_parameterization(std::string_view name) {
  if (name == "uniform") return ParameterizationMethod::uniform;
  if (name == "chord") return ParameterizationMethod::chord;
  throw InvalidArgument("unknown parameterization '" + std::string(name) + "'");
}

std::vector<double> parameterize(const RowMatrix& values, ParameterizationMethod method) {
  const Index m = values.rows();
  if (m < 2) throw InvalidArgument("parameterization needs at least two points");
  std::vector<double> u(static_cast<std::size_t>(m));

  if (method == ParameterizationMethod::uniform) {
    for (Index i = 0; i < m; ++i) u[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(m - 1);
    u.back() = 1.0;
    return u;
  }

  u[0] = 0.0;
  for (Index i = 1; i < m; ++i) {
    const double len = (values.row(i) - values.row(i - 1)).norm();
    if (!(len > 0.0)) {
      std::ostringstream os;
      os << "chord parameterization: points " << i - 1 << " and " << i << " coincide";
      throw InvalidArgument(os.str());
    }
    u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i - 1)] + len;
  }
  const double total = u.back();
  for (auto& x : u) x /= total;
  u.back() = 1.0;
  return u;
}

}  // namespace rwls
