#pragma once

#include <rwls/spline_function.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace rwls::io {

/// JSON model document:
///   {"kind": "tensor" | "hierarchical", "degree": [...], "knots": [[...], ...],
///    "coefficients": [[c_1 ... c_D], ...]}
/// Hierarchical models also carry "levels", "subdomains" (flat cell indices
/// per level) and "active" (local function indices per level).
std::string model_to_json(const SplineFunction& f);
SplineFunction model_from_json(const std::string& text);

void write_model(const std::filesystem::path& path, const SplineFunction& f);
SplineFunction read_model(const std::filesystem::path& path);

}  // namespace rwls::io
