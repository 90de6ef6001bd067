// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance                 run every criterion
//   acceptance 7 8             run a subset
//   acceptance --dump-curves D write the three curve point clouds of criterion 7 to D

#include "fixtures.hpp"
#include "oracles.hpp"

#include <rwls/collocation.hpp>
#include <rwls/decomposition.hpp>
#include <rwls/errors.hpp>
#include <rwls/fitting.hpp>
#include <rwls/hierarchical.hpp>
#include <rwls/io/csv.hpp>
#include <rwls/io/model.hpp>
#include <rwls/knot_vector.hpp>
#include <rwls/wls.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace rwls;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<double> column(const Matrix& m) { return {m.data(), m.data() + m.rows()}; }

oracle::Mat to_rows(const Matrix& m) {
  oracle::Mat r(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return r;
}

// Largest relative deviation of the decomposition from the direct fit on a grid over [-5, 5].
double reconstruction_gap(const Decomposition& dec, const SplineFunction& direct, int samples) {
  double scale = 0.0, gap = 0.0;
  for (int s = 0; s < samples; ++s) {
    const std::vector<double> x{-5.0 + 10.0 * s / (samples - 1)};
    const double a = dec.reconstruct(x)(0), b = direct.evaluate(x)(0);
    scale = std::max(scale, std::abs(b));
    gap = std::max(gap, std::abs(a - b));
  }
  return gap / scale;
}

SplineFunction direct_fit(std::shared_ptr<const FunctionSpace> space, const WeightedPointCloud& cloud) {
  const Matrix B = collocation_matrix(*space, cloud.sites());
  return SplineFunction(space, solve_wls(B, cloud.weights(), cloud.values()));
}

// ---- 1, 2: small decompositions

Outcome polynomial_case() {
  const auto space = fixture::quadratic_poly();
  const auto cloud = fixture::seven_cloud();
  const auto dec = decompose(space, cloud);
  const double gap = reconstruction_gap(dec, direct_fit(space, cloud), 101);
  const bool ok = dec.total_count() == 35 && dec.admissible_count() == 35 && gap <= 1e-9;
  return {ok, std::to_string(dec.admissible_count()) + "/" + std::to_string(dec.total_count()) +
                  " admissible, relative gap " + sci(gap)};
}

Outcome spline_case() {
  const auto space = fixture::quadratic_spline();
  const auto cloud = fixture::seven_cloud();
  const auto dec = decompose(space, cloud);
  const double gap = reconstruction_gap(dec, direct_fit(space, cloud), 101);

  // the first five points all lie left of the second interior knot
  const auto& first = dec.certificates().front();
  std::vector<double> sites;
  for (Index i : first.subset) sites.push_back(cloud.sites()(i, 0));
  const bool sw = schoenberg_whitney_admissible(fixture::quadratic_knots(), sites);
  const bool rejected = first.subset == std::vector<Index>{0, 1, 2, 3, 4} && !first.admissible && !sw;

  const bool ok = dec.total_count() == 21 && dec.admissible_count() == 20 && rejected && gap <= 1e-9;
  return {ok, std::to_string(dec.admissible_count()) + "/" + std::to_string(dec.total_count()) +
                  " admissible, {1..5} rejected by determinant " + (first.admissible ? "no" : "yes") +
                  " and Schoenberg-Whitney " + (sw ? "no" : "yes") + ", relative gap " + sci(gap)};
}

// ---- 3: Cauchy-Binet on random instances

Outcome cauchy_binet() {
  auto g = oracle::rng(2024);
  int done = 0, attempts = 0;
  double worst = 0.0;
  while (done < 50 && attempts < 1000) {
    ++attempts;
    const int m = 4 + static_cast<int>(g() % 7);  // 4..10
    std::shared_ptr<const SplineSpace> space;
    if (g() % 3 == 0) {
      space = std::make_shared<const SplineSpace>(make_polynomial_space(0, 1, 1 + static_cast<int>(g() % 4)));
    } else {
      const int degree = 1 + static_cast<int>(g() % 3);
      const int interior = static_cast<int>(g() % 3);
      space = std::make_shared<const SplineSpace>(make_uniform_knot_vector(0, 1, degree, interior));
    }
    const Index n = space->dimension();
    if (n > 6 || n > m) continue;
    std::vector<double> s;
    for (int i = 0; i < m; ++i) s.push_back(oracle::uniform(g, 0, 1));
    std::sort(s.begin(), s.end());
    RowMatrix x(m, 1), f(m, 1);
    Vector w(m);
    for (int i = 0; i < m; ++i) {
      x(i, 0) = s[static_cast<std::size_t>(i)];
      f(i, 0) = oracle::uniform(g, -2, 2);
      w(i) = oracle::uniform(g, 0.05, 1.0);
    }
    const WeightedPointCloud cloud(x, f, w);
    const Matrix B = collocation_matrix(*space, x);
    const double gram = oracle::det_laplace(to_rows(Matrix(B.transpose() * w.asDiagonal() * B)));
    if (std::abs(gram) < 1e-14) continue;  // sites missed a span
    const auto dec = decompose(space, cloud);
    worst = std::max(worst, rel(dec.normalizer(), gram));
    ++done;
  }
  return {done == 50 && worst <= 1e-8, std::to_string(done) + " instances, worst relative residual " + sci(worst)};
}

// ---- 4: weight limits

Outcome weight_limits() {
  double worst_interp = 0.0, worst_single = 0.0, worst_det = 0.0, worst_exact = 0.0;
  int subsets = 0, within = 0;
  std::string worst_subset;
  for (const auto& space : {fixture::quadratic_poly(), fixture::quadratic_spline()}) {
    const auto cloud = fixture::seven_cloud();
    const double scale = cloud.data_scale();
    const auto dec = decompose(space, cloud);
    for (const auto& cert : dec.certificates()) {
      if (!cert.admissible) continue;
      const auto u = weight_limit_solution(space, cloud, cert.subset, 1e12);
      // the same fit through the convex combination, which needs no solve at this weight
      Vector w = cloud.weights();
      for (Index i : cert.subset) w(i) = 1e12;
      const auto exact = dec.reweighted(w);
      double residual = 0.0, exact_residual = 0.0;
      for (Index i : cert.subset) {
        residual = std::max(residual, std::abs(u.evaluate(cloud.site(i))(0) - cloud.values()(i, 0)) / scale);
        exact_residual =
            std::max(exact_residual, std::abs(exact.reconstruct(cloud.site(i))(0) - cloud.values()(i, 0)) / scale);
      }
      ++subsets;
      within += residual <= 1e-6 ? 1 : 0;
      if (residual > worst_interp) {
        worst_interp = residual;
        worst_exact = exact_residual;
        worst_det = cert.det;
        worst_subset.clear();
        for (Index i : cert.subset) worst_subset += (worst_subset.empty() ? "" : ",") + std::to_string(i + 1);
      }
    }

    const Matrix B = collocation_matrix(*space, cloud.sites());
    const auto rows = to_rows(B);
    const std::vector<double> w(cloud.weights().data(), cloud.weights().data() + cloud.size());
    const std::vector<double> f = column(cloud.values());
    for (Index i = 0; i < cloud.size(); ++i) {
      const std::vector<Index> I{i};
      const auto u = weight_limit_solution(space, cloud, I, 1e10);
      const std::vector<double> c = oracle::limit_coefficients(rows, w, f, {static_cast<int>(i)});
      const SplineFunction limit(space, Eigen::Map<const Matrix>(c.data(), static_cast<Index>(c.size()), 1));
      for (int s = 0; s <= 100; ++s) {
        const std::vector<double> x{-5.0 + 0.1 * s};
        worst_single = std::max(worst_single, std::abs(u.evaluate(x)(0) - limit.evaluate(x)(0)) / scale);
      }
    }
  }
  const bool ok = within == subsets && worst_single <= 1e-6;
  return {ok, std::to_string(within) + "/" + std::to_string(subsets) + " |I|=n subsets interpolate within 1e-6; worst " +
                  sci(worst_interp) + " at I={" + worst_subset + "} with |B_I| " + sci(worst_det) +
                  " (convex combination gives " + sci(worst_exact) + "); worst |I|=1 deviation " + sci(worst_single)};
}

// ---- 5: derivative identity and sandwich bounds

Outcome derivative_identity() {
  auto g = oracle::rng(55);
  double worst_identity = 0.0, worst_outside = 0.0;
  for (const auto& space : {fixture::quadratic_poly(), fixture::quadratic_spline()}) {
    const auto cloud = fixture::seven_cloud();
    const auto dec = decompose(space, cloud);
    const auto direct = direct_fit(space, cloud);
    for (int r = 0; r <= 2; ++r) {
      double scale = 0.0;
      std::vector<double> id_gap, out_gap;
      for (int k = 0; k < 100; ++k) {
        const std::vector<double> x{oracle::uniform(g, -5, 5)};
        const double a = dec.reconstruct_derivative(x, {r})(0);
        const double b = direct.evaluate_derivative(x, {r})(0);
        const auto [lo, hi] = dec.derivative_bounds(x, {r});
        scale = std::max(scale, std::abs(b));
        id_gap.push_back(std::abs(a - b));
        out_gap.push_back(std::max({0.0, lo(0) - b, b - hi(0)}));
      }
      scale = std::max(scale, 1e-300);
      worst_identity = std::max(worst_identity, *std::max_element(id_gap.begin(), id_gap.end()) / scale);
      worst_outside = std::max(worst_outside, *std::max_element(out_gap.begin(), out_gap.end()) / scale);
    }
  }
  const bool ok = worst_identity <= 1e-8 && worst_outside <= 1e-8;
  return {ok, "orders 0..2 at 100 points, worst identity gap " + sci(worst_identity) + ", worst bound violation " +
                  sci(worst_outside)};
}

// ---- 6: IRLS

Outcome irls() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& space : {fixture::quadratic_poly(), fixture::quadratic_spline()}) {
    const auto cloud = fixture::seven_cloud(false);
    IrlsOptions opt;
    opt.p = 1.5;
    opt.max_iterations = 20;
    opt.exponent = IrlsExponent::standard;
    const auto r = irls_solve(space, cloud, opt);
    bool monotone = r.objective.size() == 21;
    for (std::size_t k = 1; k < r.objective.size(); ++k) monotone = monotone && r.objective[k] <= r.objective[k - 1];
    const double ls = lp_objective(direct_fit(space, cloud), cloud, 1.5);
    const double final_obj = lp_objective(r.function, cloud, 1.5);
    ok = ok && monotone && final_obj <= ls;
    detail << (space->dimension() == 3 ? "poly" : "spline") << ": LS " << sci(ls) << " -> " << sci(final_obj)
           << (monotone ? " monotone" : " NOT monotone") << "; ";
  }
  std::string d = detail.str();
  d.resize(d.size() - 2);
  return {ok, d};
}

// ---- 7: curve reweighting with feature-weighted abscissae

struct CurveSetup {
  int id;
  Index points;
  int interior_knots;
  std::vector<double> features;
};

const std::vector<CurveSetup> kCurves{{1, 62, 37, {1.0 / 3.0, 2.0 / 3.0}}, {2, 88, 47, {0.5}}, {3, 71, 47, {0.25, 0.75}}};
constexpr double kBumpHeight = 4.0;
constexpr double kBumpWidth = 0.03;
constexpr double kMarkerFraction = 0.1;

// Sites x_i = F^{-1}(i / (m - 1)) for the density rho(x) = 1 + A sum_j exp(-((x - c_j) / s)^2) on [0, 1].
std::vector<double> feature_weighted_sites(Index m, const std::vector<double>& features) {
  const int grid = 20001;
  auto rho = [&](double x) {
    double r = 1.0;
    for (double c : features) r += kBumpHeight * std::exp(-std::pow((x - c) / kBumpWidth, 2));
    return r;
  };
  std::vector<double> cdf(grid, 0.0);
  const double h = 1.0 / (grid - 1);
  for (int k = 1; k < grid; ++k) cdf[k] = cdf[k - 1] + 0.5 * h * (rho((k - 1) * h) + rho(k * h));
  std::vector<double> x(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    const double t = cdf.back() * static_cast<double>(i) / static_cast<double>(m - 1);
    const int k = std::clamp(static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), t) - cdf.begin()), 1, grid - 1);
    x[static_cast<std::size_t>(i)] = (k - 1) * h + (t - cdf[k - 1]) / (cdf[k] - cdf[k - 1]) * h;
  }
  x.front() = 0.0;
  x.back() = 1.0;
  return x;
}

// Type I markers: the points with the steepest one-sided slope, ties to the lower index.
WeightedPointCloud curve_cloud(const CurveSetup& c) {
  const auto x = feature_weighted_sites(c.points, c.features);
  RowMatrix sites(c.points, 1), values(c.points, 1);
  std::vector<double> slope(x.size());
  for (Index i = 0; i < c.points; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    sites(i, 0) = xi;
    values(i, 0) = evaluate_test_curve(c.id, xi);
    const double lo = std::max(0.0, xi - 1e-6), hi = std::min(1.0, xi + 1e-6);
    slope[static_cast<std::size_t>(i)] =
        std::abs(evaluate_test_curve(c.id, hi) - evaluate_test_curve(c.id, lo)) / (hi - lo);
  }
  std::vector<Index> order(x.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return slope[static_cast<std::size_t>(a)] > slope[static_cast<std::size_t>(b)];
  });
  std::vector<Marker> markers(x.size(), Marker::plain);
  const auto count = static_cast<std::size_t>(std::lround(kMarkerFraction * static_cast<double>(c.points)));
  for (std::size_t k = 0; k < count; ++k) markers[static_cast<std::size_t>(order[k])] = Marker::type_one;
  return {sites, values, Vector::Ones(c.points), markers};
}

std::shared_ptr<const SplineSpace> curve_space(const CurveSetup& c, const WeightedPointCloud& cloud) {
  const std::vector<double> x(cloud.sites().data(), cloud.sites().data() + cloud.size());
  return std::make_shared<const SplineSpace>(averaging_knots(x, c.interior_knots + 4, 3));
}

double marker_max(const SplineFunction& f, const WeightedPointCloud& cloud) {
  const auto e = metrics(f, cloud).errors;
  double worst = 0.0;
  for (Index i : cloud.indices_with(Marker::type_one)) worst = std::max(worst, e[static_cast<std::size_t>(i)]);
  return worst;
}

Outcome curve_reweighting() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : kCurves) {
    const auto start = std::chrono::steady_clock::now();
    const auto cloud = curve_cloud(c);
    const auto space = curve_space(c, cloud);
    const double ls = marker_max(direct_fit(space, cloud), cloud);
    FitConfig cfg;
    cfg.tol_one = 1e-4;
    cfg.max_iterations = 100;
    cfg.rule = parse_weight_rule("fixed:1.25");
    const auto r = rwls_fit(space, cloud, cfg);
    const double rw = marker_max(r.function, cloud);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = rw < 1e-4 && r.iterations.size() <= 100 && ls >= 10.0 * rw && seconds < 10.0;
    ok = ok && pass;
    detail << "f" << c.id << " (" << cloud.indices_with(Marker::type_one).size() << " markers): LS " << sci(ls)
           << ", rWLS " << sci(rw) << " in " << r.iterations.size() << " it, x" << sci(ls / rw) << "; ";
  }
  std::string d = detail.str();
  d.resize(d.size() - 2);
  return {ok, d};
}

void dump_curves(const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& c : kCurves) {
    io::write_point_cloud(dir / ("f" + std::to_string(c.id) + ".csv"), curve_cloud(c));
  }
}

// ---- 8, 9: three peaks

WeightedPointCloud peaks_grid(int side) {
  const Index m = static_cast<Index>(side) * side;
  RowMatrix x(m, 2), f(m, 1);
  for (Index i = 0; i < m; ++i) {
    x(i, 0) = -1.0 + 2.0 * static_cast<double>(i % side) / (side - 1);
    x(i, 1) = -1.0 + 2.0 * static_cast<double>(i / side) / (side - 1);
    f(i, 0) = evaluate_3peaks(x(i, 0), x(i, 1));
  }
  return {x, f};
}

SplineSpace square_mesh(int cells, int degree) {
  return SplineSpace(
      {make_uniform_knot_vector(-1, 1, degree, cells - 1), make_uniform_knot_vector(-1, 1, degree, cells - 1)});
}

std::string trace(const FitReport& r) {
  std::ostringstream s;
  for (const auto& it : r.iterations) s << (it.iteration > 1 ? " " : "") << it.dofs << ":" << sci(it.max);
  return s.str();
}

Outcome adaptive_peaks() {
  const double eps = 1e-3;
  auto cloud = peaks_grid(100);
  const SplineSpace base = square_mesh(15, 3);
  std::vector<Marker> markers(static_cast<std::size_t>(cloud.size()), Marker::plain);
  for (Index i : init_markers_from_ls(std::make_shared<const SplineSpace>(base), cloud, eps)) {
    markers[static_cast<std::size_t>(i)] = Marker::type_one;
  }
  cloud = cloud.with_markers(markers);

  FitConfig cfg;
  cfg.eps = eps;
  cfg.tol_one = 10 * eps;
  cfg.lambda = 1e-6;
  cfg.max_levels = 5;
  cfg.rule = parse_weight_rule("fixed:1.25");
  const auto rw = adaptive_rwls_fit(base, cloud, cfg);
  cfg.rule = parse_weight_rule("fixed:1");
  const auto ls = adaptive_rwls_fit(base, cloud, cfg);

  bool decreasing = rw.iterations.size() >= 2;
  for (std::size_t k = 1; k < rw.iterations.size(); ++k) {
    decreasing = decreasing && rw.iterations[k].max < rw.iterations[k - 1].max;
  }
  const auto& a = rw.iterations.back();
  const auto& b = ls.iterations.back();
  const double dof_gap = rel(static_cast<double>(a.dofs), static_cast<double>(b.dofs));
  const bool comparable = dof_gap <= 0.05;
  const bool ok = decreasing && comparable && a.max <= b.max;
  return {ok, std::string("(a) ") + (decreasing ? "strictly decreasing" : "NOT strictly decreasing") + " [" +
                  trace(rw) + "]; (b) rWLS " + sci(a.max) + " at " + std::to_string(a.dofs) + " DOFs vs LS " +
                  sci(b.max) + " at " + std::to_string(b.dofs) + " DOFs (gap " + sci(dof_gap) + ")"};
}

Outcome weight_influence() {
  const auto cloud = peaks_grid(64);
  // hierarchical tensor space from the unit-weight adaptive fit
  FitConfig cfg;
  cfg.eps = 5e-3;
  cfg.max_levels = 4;
  cfg.rule = parse_weight_rule("fixed:1");
  const auto space = adaptive_rwls_fit(square_mesh(10, 3), cloud, cfg).function.space_ptr();
  const auto K = init_markers_from_ls(space, cloud, 5e-4);

  const FitSolver solver(*space, cloud.sites(), 0.0);
  const std::vector<double> sweep{1, 2, 4, 6, 10, 100};
  std::vector<double> max;
  for (double wg : sweep) {
    Vector w = Vector::Ones(cloud.size());
    for (Index i : K) w(i) = wg;
    max.push_back(metrics(SplineFunction(space, solver.solve(w, cloud.values())), cloud).max);
  }
  const auto best = static_cast<std::size_t>(std::min_element(max.begin(), max.end()) - max.begin());
  const bool ok = best > 0 && best + 1 < sweep.size() && max.back() > max.front();
  std::ostringstream detail;
  detail << space->dimension() << " functions, |K| = " << K.size() << ", MAX";
  for (std::size_t k = 0; k < sweep.size(); ++k) detail << " " << sweep[k] << ":" << sci(max[k]);
  return {ok, detail.str()};
}

// ---- 10: serialization

double round_trip_gap(const SplineFunction& f, const fs::path& file, unsigned seed) {
  io::write_model(file, f);
  const SplineFunction back = io::read_model(file);
  fs::remove(file);
  const Box box = f.space().domain();
  auto g = oracle::rng(seed);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    std::vector<double> x;
    for (std::size_t d = 0; d < box.dimension(); ++d) x.push_back(oracle::uniform(g, box.lower[d], box.upper[d]));
    const Vector a = f.evaluate(x), b = back.evaluate(x);
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff() / (1.0 + a.cwiseAbs().maxCoeff()));
  }
  return worst;
}

Outcome serialization() {
  auto g = oracle::rng(10);
  auto random_coefficients = [&](Index n, int D) {
    Matrix c(n, D);
    for (Index i = 0; i < c.size(); ++i) c.data()[i] = oracle::uniform(g, -3, 3);
    return c;
  };
  const auto tensor = std::make_shared<const SplineSpace>(square_mesh(7, 3));
  const auto hier = std::make_shared<const HierarchicalSpace>(
      HierarchicalSpace(*tensor).refine({CellId{0, {2, 3}}, CellId{0, {5, 5}}}).refine({CellId{1, {5, 6}}}));
  const fs::path tmp = fs::temp_directory_path();
  const double a = round_trip_gap(SplineFunction(tensor, random_coefficients(tensor->dimension(), 1)),
                                  tmp / "rwls_acceptance_tensor.json", 1);
  const double b = round_trip_gap(SplineFunction(hier, random_coefficients(hier->dimension(), 2)),
                                  tmp / "rwls_acceptance_hierarchical.json", 2);
  return {a <= 1e-12 && b <= 1e-12, "tensor " + sci(a) + ", hierarchical (" + std::to_string(hier->num_levels()) +
                                        " levels) " + sci(b)};
}

struct Criterion {
  int id;
  const char* name;
  double budget;  ///< seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "decomposition, polynomial space", 1.0, polynomial_case},
      {2, "decomposition, spline space", 1.0, spline_case},
      {3, "Cauchy-Binet normalizer", 0.0, cauchy_binet},
      {4, "weight limits", 5.0, weight_limits},
      {5, "derivative identity and bounds", 0.0, derivative_identity},
      {6, "IRLS p = 1.5", 0.0, irls},
      {7, "curve reweighting", 30.0, curve_reweighting},
      {8, "adaptive reweighting on three peaks", 120.0, adaptive_peaks},
      {9, "weight influence", 60.0, weight_influence},
      {10, "model serialization", 0.0, serialization},
  };

  std::set<int> selected;
  for (int k = 1; k < argc; ++k) {
    const std::string arg = argv[k];
    if (arg == "--dump-curves" && k + 1 < argc) {
      dump_curves(argv[++k]);
      return 0;
    }
    selected.insert(std::stoi(arg));
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0.0 && seconds >= c.budget) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d failed\n", failed);
  return failed == 0 ? 0 : 1;
}
