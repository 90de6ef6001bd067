#include "space_options.hpp"

#include <rwls/errors.hpp>
#include <rwls/knot_vector.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rwls::cli {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

namespace {

template <typename T>
T parse_one(const std::string& s, const char* what) {
  T v{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  if (first < last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw InvalidArgument(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

template <typename T>
std::vector<T> broadcast(std::vector<T> v, std::size_t n, const char* what) {
  if (v.size() == 1) v.resize(n, v.front());
  if (v.size() != n) {
    std::ostringstream os;
    os << what << ": expected 1 or " << n << " values, got " << v.size();
    throw InvalidArgument(os.str());
  }
  return v;
}

}  // namespace

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_one<double>(s, "number"));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_one<int>(s, "integer"));
  return out;
}

std::vector<std::pair<double, double>> resolve_domain(const std::string& domain, const RowMatrix& sites) {
  const auto N = static_cast<std::size_t>(sites.cols());
  std::vector<std::pair<double, double>> out;
  if (!domain.empty()) {
    for (const auto& part : split(domain, ';')) {
      const auto ab = parse_doubles(part);
      if (ab.size() != 2 || !(ab[0] < ab[1])) throw InvalidArgument("--domain entries must be 'lower,upper' with lower < upper");
      out.emplace_back(ab[0], ab[1]);
    }
    return broadcast(out, N, "--domain");
  }
  for (Index d = 0; d < sites.cols(); ++d) {
    const double lo = sites.col(d).minCoeff();
    const double hi = sites.col(d).maxCoeff();
    if (!(lo < hi)) throw InvalidArgument("sites are degenerate in some direction; pass --domain");
    out.emplace_back(lo, hi);
  }
  return out;
}

SplineSpace build_space(const SpaceOptions& o, const RowMatrix& sites) {
  const auto N = static_cast<std::size_t>(sites.cols());
  if (N == 0) throw InvalidArgument("no site coordinates");
  const auto degrees = broadcast(parse_ints(o.degree), N, "--degree");
  std::vector<KnotVector> dirs;

  if (o.basis == "poly") {
    const auto dom = resolve_domain(o.domain, sites);
    for (std::size_t d = 0; d < N; ++d) dirs.push_back(make_open_knot_vector(dom[d].first, dom[d].second, degrees[d], {}));
    return SplineSpace(std::move(dirs));
  }
  if (o.basis != "spline") throw InvalidArgument("--basis must be poly or spline");

  if (o.knots == "uniform") {
    std::vector<int> interior;
    if (!o.mesh.empty()) {
      for (const auto& s : split(o.mesh, 'x')) interior.push_back(parse_one<int>(s, "--mesh entry") - 1);
      interior = broadcast(interior, N, "--mesh");
    } else {
      interior = broadcast(parse_ints(o.interior), N, "--interior-knots");
    }
    const auto dom = resolve_domain(o.domain, sites);
    for (std::size_t d = 0; d < N; ++d) {
      if (interior[d] < 0) throw InvalidArgument("interior knot count must be >= 0");
      dirs.push_back(make_uniform_knot_vector(dom[d].first, dom[d].second, degrees[d], interior[d]));
    }
    return SplineSpace(std::move(dirs));
  }
  if (o.knots == "averaging") {
    if (N != 1) throw InvalidArgument("--knots averaging supports curves (one site coordinate) only");
    const auto interior = parse_ints(o.interior);
    if (interior.size() != 1 || interior[0] < 0) throw InvalidArgument("--interior-knots must be one count >= 0");
    std::vector<double> s(sites.col(0).data(), sites.col(0).data() + sites.rows());
    std::sort(s.begin(), s.end());
    return SplineSpace(averaging_knots(s, interior[0] + degrees[0] + 1, degrees[0]));
  }
  const auto lists = split(o.knots, ';');
  if (lists.size() != N) throw InvalidArgument("--knots: need one knot list per direction");
  for (std::size_t d = 0; d < N; ++d) dirs.emplace_back(degrees[d], parse_doubles(lists[d]));
  return SplineSpace(std::move(dirs));
}

}  // namespace rwls::cli
