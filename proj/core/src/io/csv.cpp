#include <rwls/io/csv.hpp>

#include <rwls/errors.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

namespace rwls::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << source << ':' << line << ": " << what;
  throw IoError(os.str());
}

// Matches "<prefix><k>" and returns k, or 0.
int column_number(std::string_view name, char prefix) {
  if (name.size() < 2 || name.front() != prefix) return 0;
  int k = 0;
  const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size() || k < 1) return 0;
  return k;
}

}  // namespace

bool PointTable::has_markers() const {
  if (!markers) return false;
  for (Marker m : *markers) {
    if (m != Marker::plain) return true;
  }
  return false;
}

WeightedPointCloud PointTable::to_cloud() const {
  if (sites.cols() == 0) throw InvalidArgument("point table has no site columns (x1..xN)");
  return to_cloud(sites);
}

WeightedPointCloud PointTable::to_cloud(RowMatrix s) const {
  Vector w = weights ? *weights : Vector::Ones(values.rows());
  std::vector<Marker> mk = markers ? *markers : std::vector<Marker>(static_cast<std::size_t>(values.rows()), Marker::plain);
  return WeightedPointCloud(std::move(s), values, std::move(w), std::move(mk));
}

PointTable read_point_table(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  int N = 0, D = 0;
  bool has_w = false, has_marker = false;
  std::vector<std::vector<double>> rows;
  std::vector<double> weight_col;
  std::vector<Marker> marker_col;
  std::size_t ncols = 0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto fields = split(view);
    if (header.empty()) {
      std::size_t c = 0;
      while (c < fields.size() && column_number(fields[c], 'x') == N + 1) ++N, ++c;
      while (c < fields.size() && column_number(fields[c], 'f') == D + 1) ++D, ++c;
      if (c < fields.size() && fields[c] == "w") has_w = true, ++c;
      if (c < fields.size() && fields[c] == "marker") has_marker = true, ++c;
      if (D == 0) fail(source, lineno, "header must name value columns f1..fD");
      if (c != fields.size()) {
        fail(source, lineno, "unexpected header column '" + std::string(fields[c]) +
                                 "' (expected x1..xN, f1..fD, optional w, optional marker)");
      }
      for (auto f : fields) header.emplace_back(f);
      ncols = fields.size();
      continue;
    }
    if (fields.size() != ncols) {
      std::ostringstream os;
      os << "expected " << ncols << " columns, found " << fields.size();
      fail(source, lineno, os.str());
    }
    std::vector<double> row(static_cast<std::size_t>(N + D));
    for (std::size_t c = 0; c < ncols; ++c) {
      double v = 0.0;
      const auto f = fields[c];
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
        fail(source, lineno, "column '" + header[c] + "': not a finite number: '" + std::string(f) + "'");
      }
      if (c < row.size()) {
        row[c] = v;
      } else if (has_w && c == row.size()) {
        if (!(v > 0.0)) fail(source, lineno, "weight must be positive");
        weight_col.push_back(v);
      } else {
        if (v != 0.0 && v != 1.0 && v != 2.0) fail(source, lineno, "marker must be 0, 1 or 2");
        marker_col.push_back(static_cast<Marker>(static_cast<int>(v)));
      }
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) fail(source, lineno, "read error");
  if (header.empty()) fail(source, lineno, "missing header");
  if (rows.empty()) fail(source, lineno, "no data rows");

  PointTable t;
  const auto m = static_cast<Index>(rows.size());
  t.sites.resize(m, N);
  t.values.resize(m, D);
  for (Index i = 0; i < m; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    for (int d = 0; d < N; ++d) t.sites(i, d) = r[static_cast<std::size_t>(d)];
    for (int d = 0; d < D; ++d) t.values(i, d) = r[static_cast<std::size_t>(N + d)];
  }
  if (has_w) t.weights = Eigen::Map<const Vector>(weight_col.data(), m);
  if (has_marker) t.markers = std::move(marker_col);
  return t;
}

PointTable read_point_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_point_table(in, path.string());
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void write_point_cloud(std::ostream& out, const WeightedPointCloud& cloud) {
  for (int d = 0; d < cloud.parametric_dimension(); ++d) out << 'x' << d + 1 << ',';
  for (int d = 0; d < cloud.value_dimension(); ++d) out << 'f' << d + 1 << ',';
  out << "w,marker\n";
  for (Index i = 0; i < cloud.size(); ++i) {
    for (int d = 0; d < cloud.parametric_dimension(); ++d) out << format_double(cloud.sites()(i, d)) << ',';
    for (int d = 0; d < cloud.value_dimension(); ++d) out << format_double(cloud.values()(i, d)) << ',';
    out << format_double(cloud.weights()(i)) << ','
        << static_cast<int>(cloud.markers()[static_cast<std::size_t>(i)]) << '\n';
  }
}

void write_point_cloud(const std::filesystem::path& path, const WeightedPointCloud& cloud) {
  auto out = open_output(path);
  write_point_cloud(out, cloud);
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_report(std::ostream& out, const FitReport& report) {
  out << "iteration,dofs,rmse,max,max_KI,max_notKII,count_KI,count_KII,refined_cells\n";
  for (const auto& r : report.iterations) {
    out << r.iteration << ',' << r.dofs << ',' << format_double(r.rmse) << ',' << format_double(r.max) << ','
        << format_double(r.max_type_one) << ',' << format_double(r.max_not_type_two) << ',' << r.count_type_one
        << ',' << r.count_type_two << ',' << r.refined_cells << '\n';
  }
}

void write_mesh(std::ostream& out, const HierarchicalSpace& space) {
  const int N = space.parametric_dimension();
  out << "level";
  for (int d = 0; d < N; ++d) out << ",x" << d + 1 << "_min,x" << d + 1 << "_max";
  out << '\n';
  for (const auto& cell : space.leaf_cells()) {
    const Box b = space.cell_box(cell);
    out << cell.level;
    for (std::size_t d = 0; d < b.dimension(); ++d) out << ',' << format_double(b.lower[d]) << ',' << format_double(b.upper[d]);
    out << '\n';
  }
}

}  // namespace rwls::io
