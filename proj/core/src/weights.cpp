#include <rwls/fitting.hpp>

#include <rwls/collocation.hpp>
#include <rwls/errors.hpp>
#include <rwls/thin_plate.hpp>
#include <rwls/wls.hpp>

#include <charconv>
#include <cmath>
#include <string>

namespace rwls {

WeightRule parse_weight_rule(std::string_view text) {
  auto number = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidArgument("weight rule: bad number in '" + std::string(text) + "'");
    }
    return v;
  };
  WeightRule rule;
  if (text == "error") return rule;
  if (text.starts_with("fixed:")) {
    rule.mode = WeightMode::fixed_factor;
    rule.factor = number(text.substr(6));
    if (!(rule.factor >= 1.0) || !std::isfinite(rule.factor)) {
      throw InvalidArgument("weight rule: fixed factor must be >= 1");
    }
    return rule;
  }
  if (text.starts_with("irls:")) {
    rule.mode = WeightMode::irls;
    rule.delta = number(text.substr(5));
    if (!(rule.delta > 0.0)) throw InvalidArgument("weight rule: irls floor must be positive");
    return rule;
  }
  throw InvalidArgument("weight rule: expected error, fixed:<rho> or irls:<delta>, got '" + std::string(text) + "'");
}

void FitConfig::validate() const {
  if (!(tol_one > 0.0)) throw InvalidArgument("fit config: tol_I must be positive");
  if (!(tol_two > 0.0)) throw InvalidArgument("fit config: tol_II must be positive");
  if (!(eps > 0.0)) throw InvalidArgument("fit config: eps must be positive");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("fit config: lambda must be >= 0");
  if (max_iterations < 1) throw InvalidArgument("fit config: max iterations must be >= 1");
  if (max_levels < 1) throw InvalidArgument("fit config: max levels must be >= 1");
  if (rule.mode == WeightMode::fixed_factor && !(rule.factor >= 1.0)) {
    throw InvalidArgument("fit config: fixed factor must be >= 1");
  }
  if (rule.mode == WeightMode::irls && !(rule.delta > 0.0)) {
    throw InvalidArgument("fit config: irls floor must be positive");
  }
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::converged: return "converged";
    case StopReason::no_update: return "no_update";
    case StopReason::iteration_cap: return "iteration_cap";
    case StopReason::level_cap: return "level_cap";
  }
  return "unknown";
}

Vector update_weights(std::span<const double> errors, const Vector& weights, const std::vector<Marker>& markers,
                      const std::vector<char>& update, const WeightRule& rule) {
  const auto m = static_cast<std::size_t>(weights.size());
  if (errors.size() != m || markers.size() != m || update.size() != m) {
    throw InvalidArgument("update_weights: size mismatch");
  }
  Vector out = weights;
  for (std::size_t i = 0; i < m; ++i) {
    if (!update[i]) continue;
    const double e = errors[i];
    const auto ii = static_cast<Index>(i);
    if (markers[i] == Marker::type_one) {
      out(ii) *= rule.mode == WeightMode::fixed_factor ? rule.factor : 1.0 + e;
    } else if (markers[i] == Marker::type_two) {
      switch (rule.mode) {
        case WeightMode::error_driven: out(ii) /= 1.0 + e; break;
        case WeightMode::fixed_factor: out(ii) /= rule.factor; break;
        case WeightMode::irls: out(ii) /= std::max(rule.delta, e); break;
      }
    }
  }
  return out;
}

FitSolver::FitSolver(const FunctionSpace& space, const RowMatrix& sites, double lambda) : lambda_(lambda) {
  constexpr Index kDenseLimit = 250'000;
  if (!(lambda >= 0.0)) throw InvalidArgument("least squares: lambda must be >= 0");
  dense_ = sites.rows() * space.dimension() <= kDenseLimit;
  if (dense_) {
    dense_matrix_ = collocation_matrix(space, sites);
  } else {
    sparse_matrix_ = collocation_sparse(space, sites);
  }
  if (lambda > 0.0) penalty_ = std::make_unique<PenaltyMatrix>(assemble_thin_plate(space));
}

Matrix FitSolver::solve(const Vector& weights, const RowMatrix& values) const {
  const Matrix f = values;
  if (penalty_) {
    return dense_ ? solve_penalized_wls(dense_matrix_, weights, f, *penalty_, lambda_)
                  : solve_penalized_wls(sparse_matrix_, weights, f, *penalty_, lambda_);
  }
  return dense_ ? solve_wls(dense_matrix_, weights, f) : solve_wls(sparse_matrix_, weights, f);
}

Matrix fit_coefficients(const FunctionSpace& space, const RowMatrix& sites, const Vector& weights,
                        const RowMatrix& values, double lambda) {
  return FitSolver(space, sites, lambda).solve(weights, values);
}

}  // namespace rwls
