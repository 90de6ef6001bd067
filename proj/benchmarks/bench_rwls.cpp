#include <rwls/collocation.hpp>
#include <rwls/decomposition.hpp>
#include <rwls/fitting.hpp>
#include <rwls/knot_vector.hpp>
#include <rwls/spline_space.hpp>
#include <rwls/wls.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

using namespace rwls;

namespace {

WeightedPointCloud peaks(int side) {
  const Index m = static_cast<Index>(side) * side;
  RowMatrix x(m, 2), f(m, 1);
  for (Index i = 0; i < m; ++i) {
    x(i, 0) = -1.0 + 2.0 * static_cast<double>(i % side) / (side - 1);
    x(i, 1) = -1.0 + 2.0 * static_cast<double>(i / side) / (side - 1);
    f(i, 0) = evaluate_3peaks(x(i, 0), x(i, 1));
  }
  return {x, f};
}

SplineSpace square(int cells, int degree) {
  return SplineSpace(
      {make_uniform_knot_vector(-1, 1, degree, cells - 1), make_uniform_knot_vector(-1, 1, degree, cells - 1)});
}

}  // namespace

static void BM_EvalBasis(benchmark::State& state) {
  const SplineSpace space(make_uniform_knot_vector(0, 1, static_cast<int>(state.range(0)), 50));
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> x(1);
  for (auto _ : state) {
    x[0] = u(g);
    benchmark::DoNotOptimize(space.eval_basis(x));
  }
}
BENCHMARK(BM_EvalBasis)->Arg(1)->Arg(3)->Arg(5);

static void BM_Collocation2D(benchmark::State& state) {
  const auto cloud = peaks(static_cast<int>(state.range(0)));
  const SplineSpace space = square(15, 3);
  for (auto _ : state) benchmark::DoNotOptimize(collocation_sparse(space, cloud.sites()));
  state.SetItemsProcessed(state.iterations() * cloud.size());
}
BENCHMARK(BM_Collocation2D)->Arg(50)->Arg(100);

static void BM_SolveWlsDense(benchmark::State& state) {
  const auto m = static_cast<Index>(state.range(0));
  const SplineSpace space(make_uniform_knot_vector(0, 1, 3, 30));
  RowMatrix x(m, 1), f(m, 1);
  for (Index i = 0; i < m; ++i) {
    x(i, 0) = static_cast<double>(i) / static_cast<double>(m - 1);
    f(i, 0) = evaluate_test_curve(3, x(i, 0));
  }
  const Matrix B = collocation_matrix(space, x);
  const Vector w = Vector::Ones(m);
  for (auto _ : state) benchmark::DoNotOptimize(solve_wls(B, w, f));
}
BENCHMARK(BM_SolveWlsDense)->Arg(100)->Arg(1000);

static void BM_FitSolver2D(benchmark::State& state) {
  const auto cloud = peaks(100);
  const SplineSpace space = square(15, 3);
  const double lambda = state.range(0) ? 1e-6 : 0.0;
  const FitSolver solver(space, cloud.sites(), lambda);
  for (auto _ : state) benchmark::DoNotOptimize(solver.solve(cloud.weights(), cloud.values()));
}
BENCHMARK(BM_FitSolver2D)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Decompose(benchmark::State& state) {
  const auto m = static_cast<Index>(state.range(0));
  auto space = std::make_shared<const SplineSpace>(make_uniform_knot_vector(0, 1, 2, 2));
  RowMatrix x(m, 1), f(m, 1);
  for (Index i = 0; i < m; ++i) {
    x(i, 0) = (static_cast<double>(i) + 0.5) / static_cast<double>(m);
    f(i, 0) = std::sin(6.0 * x(i, 0));
  }
  const WeightedPointCloud cloud(x, f);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(space, cloud));
  state.counters["subsets"] = static_cast<double>(binomial(m, space->dimension()));
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_RwlsCurve(benchmark::State& state) {
  const Index m = 150;
  RowMatrix x(m, 1), f(m, 1);
  std::vector<Marker> mk(static_cast<std::size_t>(m), Marker::plain);
  for (Index i = 0; i < m; ++i) {
    x(i, 0) = static_cast<double>(i) / static_cast<double>(m - 1);
    f(i, 0) = evaluate_test_curve(3, x(i, 0));
    if (std::abs(x(i, 0) - 0.25) < 0.01 || std::abs(x(i, 0) - 0.75) < 0.01) mk[static_cast<std::size_t>(i)] = Marker::type_one;
  }
  const WeightedPointCloud cloud(x, f, Vector::Ones(m), mk);
  auto space = std::make_shared<const SplineSpace>(make_uniform_knot_vector(0, 1, 3, 30));
  FitConfig cfg;
  cfg.tol_one = 1e-4;
  cfg.rule = parse_weight_rule("fixed:1.25");
  for (auto _ : state) benchmark::DoNotOptimize(rwls_fit(space, cloud, cfg));
}
BENCHMARK(BM_RwlsCurve)->Unit(benchmark::kMillisecond);

static void BM_AdaptivePeaks(benchmark::State& state) {
  const auto cloud = peaks(60);
  FitConfig cfg;
  cfg.eps = 2e-3;
  cfg.tol_one = 2e-2;
  cfg.lambda = 1e-6;
  cfg.max_levels = 3;
  cfg.rule = parse_weight_rule("fixed:1.25");
  for (auto _ : state) benchmark::DoNotOptimize(adaptive_rwls_fit(square(8, 3), cloud, cfg));
}
BENCHMARK(BM_AdaptivePeaks)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
