#pragma once

#include <rwls/fitting.hpp>
#include <rwls/hierarchical.hpp>
#include <rwls/point_cloud.hpp>
#include <rwls/types.hpp>

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rwls::io {

/// Raw content of a point-cloud CSV file.
///
/// Header: x1..xN, f1..fD, then optionally w and marker (0 plain, 1 type I,
/// 2 type II). N may be zero when sites are to be computed from the values.
/// Lines starting with '#' and blank lines are ignored.
struct PointTable {
  RowMatrix sites;
  RowMatrix values;
  std::optional<Vector> weights;
  std::optional<std::vector<Marker>> markers;

  Index size() const { return values.rows(); }
  bool has_markers() const;
  /// Requires N >= 1. Missing weights default to 1, missing markers to plain.
  WeightedPointCloud to_cloud() const;
  /// Same, with externally computed sites.
  WeightedPointCloud to_cloud(RowMatrix sites) const;
};

/// Throws IoError with "<source>:<line>: ..." diagnostics.
PointTable read_point_table(std::istream& in, const std::string& source = "<input>");
PointTable read_point_table(const std::filesystem::path& path);

void write_point_cloud(std::ostream& out, const WeightedPointCloud& cloud);
void write_point_cloud(const std::filesystem::path& path, const WeightedPointCloud& cloud);

/// One row per iteration.
void write_report(std::ostream& out, const FitReport& report);

/// One row per leaf cell: level and per-direction bounds.
void write_mesh(std::ostream& out, const HierarchicalSpace& space);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

/// Opens a file for writing; throws IoError on failure.
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace rwls::io
