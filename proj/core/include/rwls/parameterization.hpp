#pragma once

#include <rwls/types.hpp>

#include <string_view>
#include <vector>

namespace rwls {

enum class ParameterizationMethod { uniform, chord };

ParameterizationMethod parse_parameterization(std::string_view name);

/// Sites in [0, 1] for an ordered sequence of values (one row per point).
///
/// `uniform` spaces the sites evenly; `chord` uses normalized cumulative
/// chord length and rejects zero-length consecutive segments.
std::vector<double> parameterize(const RowMatrix& values, ParameterizationMethod method);

}  // namespace rwls
