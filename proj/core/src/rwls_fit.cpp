#include <rwls/fitting.hpp>

#include <rwls/errors.hpp>
#include <rwls/wls.hpp>

#include <algorithm>

namespace rwls {

namespace {

IterationRecord summarize(int iteration, Index dofs, const FitMetrics& met, const std::vector<Marker>& markers) {
  IterationRecord r;
  r.iteration = iteration;
  r.dofs = dofs;
  r.rmse = met.rmse;
  r.max = met.max;
  for (std::size_t i = 0; i < markers.size(); ++i) {
    const double e = met.errors[i];
    if (markers[i] == Marker::type_one) {
      r.max_type_one = std::max(r.max_type_one, e);
      ++r.count_type_one;
    }
    if (markers[i] == Marker::type_two) {
      ++r.count_type_two;
    } else {
      r.max_not_type_two = std::max(r.max_not_type_two, e);
    }
  }
  return r;
}

}  // namespace

FitReport rwls_fit(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                   const FitConfig& config) {
  if (!space) throw InvalidArgument("rwls_fit: null space");
  config.validate();
  cloud.check_inside(*space);
  const FitSolver solver(*space, cloud.sites(), config.lambda);
  const auto& markers = cloud.markers();
  Vector w = cloud.weights();
  std::vector<IterationRecord> records;
  std::vector<char> update(markers.size());

  for (int it = 1;; ++it) {
    SplineFunction f(space, solver.solve(w, cloud.values()));
    const FitMetrics met = metrics(f, cloud);
    records.push_back(summarize(it, space->dimension(), met, markers));
    const IterationRecord& rec = records.back();

    auto finish = [&](StopReason why) { return FitReport{std::move(records), std::move(f), w, markers, why}; };
    if (rec.max_type_one <= config.tol_one && rec.max_not_type_two <= config.tol_two) {
      return finish(StopReason::converged);
    }
    bool any = false;
    for (std::size_t i = 0; i < markers.size(); ++i) {
      const double e = met.errors[i];
      update[i] = (markers[i] == Marker::type_one && (config.update_all_marked || e > config.tol_one)) ||
                  (markers[i] == Marker::type_two && (config.update_all_marked || e < config.tol_two));
      any = any || update[i];
    }
    if (!any) return finish(StopReason::no_update);
    if (it >= config.max_iterations) return finish(StopReason::iteration_cap);
    w = update_weights(met.errors, w, markers, update, config.rule);
  }
}

std::vector<Index> init_markers_from_ls(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud,
                                        double eps, double lambda) {
  if (!space) throw InvalidArgument("init_markers_from_ls: null space");
  if (!(eps > 0.0)) throw InvalidArgument("init_markers_from_ls: eps must be positive");
  cloud.check_inside(*space);
  const Vector ones = Vector::Ones(cloud.size());
  SplineFunction f(space, fit_coefficients(*space, cloud.sites(), ones, cloud.values(), lambda));
  const FitMetrics met = metrics(f, cloud);
  std::vector<Index> out;
  for (Index i = 0; i < cloud.size(); ++i) {
    if (met.errors[static_cast<std::size_t>(i)] > eps) out.push_back(i);
  }
  return out;
}

FitReport adaptive_rwls_fit(const SplineSpace& base, const WeightedPointCloud& cloud, const FitConfig& config) {
  config.validate();
  cloud.check_inside(base);
  auto h = std::make_shared<const HierarchicalSpace>(base);
  std::vector<Marker> markers = cloud.markers();
  Vector w = cloud.weights();
  std::vector<IterationRecord> records;
  std::vector<char> update(markers.size());
  int stalled = 0;

  for (int it = 1;; ++it) {
    const FitSolver solver(*h, cloud.sites(), config.lambda);
    SplineFunction f(h, solver.solve(w, cloud.values()));
    const FitMetrics met = metrics(f, cloud);
    records.push_back(summarize(it, h->dimension(), met, markers));

    auto finish = [&](StopReason why) { return FitReport{std::move(records), std::move(f), w, markers, why}; };
    if (met.max <= config.eps) return finish(StopReason::converged);

    for (std::size_t i = 0; i < markers.size(); ++i) {
      const double e = met.errors[i];
      if (markers[i] == Marker::type_one && e <= config.tol_one) markers[i] = Marker::plain;
      if (markers[i] == Marker::type_two && e >= config.tol_two) markers[i] = Marker::plain;
      update[i] = markers[i] != Marker::plain;
    }
    if (it >= config.max_levels) return finish(StopReason::level_cap);

    std::vector<CellId> cells = mark_cells(*h, cloud.sites(), met.errors, config.eps);
    std::erase_if(cells, [&](const CellId& c) { return c.level + 1 >= config.max_levels; });
    if (cells.empty()) return finish(StopReason::level_cap);

    w = update_weights(met.errors, w, markers, update, config.rule);
    auto refined = std::make_shared<const HierarchicalSpace>(h->refine(cells, config.buffer));
    records.back().refined_cells = static_cast<Index>(cells.size());
    if (refined->dimension() == h->dimension()) {
      if (++stalled >= 2) throw StagnationError("adaptive fit: refinement added no degrees of freedom twice in a row");
    } else {
      stalled = 0;
    }
    h = std::move(refined);
  }
}

}  // namespace rwls
