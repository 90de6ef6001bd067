#pragma once

#include <rwls/spline_space.hpp>
#include <rwls/types.hpp>

#include <memory>
#include <string>
#include <vector>

namespace rwls::cli {

/// Space flags shared by the commands. List-valued flags separate
/// directions with ';' and entries with ','.
struct SpaceOptions {
  std::string basis = "spline";
  std::string degree = "3";
  std::string knots = "uniform";
  std::string interior = "10";
  std::string domain;  ///< "a,b[;c,d]"; default: the sites' bounding box
  std::string mesh;    ///< "RxC": cells per direction, overrides interior
};

std::vector<std::string> split(const std::string& text, char sep);
std::vector<double> parse_doubles(const std::string& text);
std::vector<int> parse_ints(const std::string& text);

/// Per-direction [lower, upper]; from `domain` when set, else the sites' bounding box.
std::vector<std::pair<double, double>> resolve_domain(const std::string& domain, const RowMatrix& sites);

SplineSpace build_space(const SpaceOptions& options, const RowMatrix& sites);

}  // namespace rwls::cli
