#include "cli.hpp"

#include "space_options.hpp"

#include <rwls/collocation.hpp>
#include <rwls/decomposition.hpp>
#include <rwls/errors.hpp>
#include <rwls/fitting.hpp>
#include <rwls/hierarchical.hpp>
#include <rwls/io/csv.hpp>
#include <rwls/io/model.hpp>
#include <rwls/parameterization.hpp>
#include <rwls/wls.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

namespace rwls::cli {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

struct CloudOptions {
  std::string path;
  std::string param;  // given | uniform | chord; empty = given when x columns exist
};

WeightedPointCloud load_cloud(const CloudOptions& o) {
  const io::PointTable table = io::read_point_table(o.path);
  std::string param = o.param;
  if (param.empty()) param = table.sites.cols() > 0 ? "given" : "uniform";
  if (param == "given") return table.to_cloud();
  const auto t = parameterize(table.values, parse_parameterization(param));
  RowMatrix sites(static_cast<Index>(t.size()), 1);
  for (std::size_t i = 0; i < t.size(); ++i) sites(static_cast<Index>(i), 0) = t[i];
  return table.to_cloud(std::move(sites));
}

// Tensor grid with `per_direction` samples over a box, last direction fastest.
RowMatrix grid_points(const Box& box, const std::vector<int>& counts) {
  const std::size_t N = box.dimension();
  Index total = 1;
  for (int c : counts) total *= c;
  RowMatrix pts(total, static_cast<Index>(N));
  std::vector<int> k(N, 0);
  for (Index r = 0; r < total; ++r) {
    for (std::size_t d = 0; d < N; ++d) {
      const double t = counts[d] == 1 ? 0.0 : static_cast<double>(k[d]) / (counts[d] - 1);
      pts(r, static_cast<Index>(d)) = k[d] + 1 == counts[d] ? box.upper[d] : box.lower[d] + t * (box.upper[d] - box.lower[d]);
    }
    for (std::size_t d = N; d-- > 0;) {
      if (++k[d] < counts[d]) break;
      k[d] = 0;
    }
  }
  return pts;
}

void add_space_flags(CLI::App* cmd, SpaceOptions& s) {
  cmd->add_option("--basis", s.basis, "poly or spline")->capture_default_str();
  cmd->add_option("--degree", s.degree, "degree, or one per direction: d1,d2")->capture_default_str();
  cmd->add_option("--knots", s.knots, "uniform, averaging, or explicit lists 't0,t1,...[;...]'")
      ->capture_default_str();
  cmd->add_option("--interior-knots", s.interior, "interior knot count, or one per direction")->capture_default_str();
  cmd->add_option("--domain", s.domain, "parametric box 'a,b[;c,d]' (default: bounding box of the sites)");
}

void add_cloud_flags(CLI::App* cmd, CloudOptions& c) {
  cmd->add_option("cloud", c.path, "point cloud CSV")->required();
  cmd->add_option("--param", c.param, "given, uniform or chord")
      ->check(CLI::IsMember({"given", "uniform", "chord"}));
}

void print_summary(std::ostream& out, const FitReport& report) {
  const auto& last = report.iterations.back();
  out << "iterations: " << report.iterations.size() << '\n'
      << "stop: " << to_string(report.stop) << '\n'
      << "dofs: " << last.dofs << '\n'
      << "rmse: " << sci(last.rmse) << '\n'
      << "max: " << sci(last.max) << '\n'
      << "max_KI: " << sci(last.max_type_one) << '\n'
      << "max_notKII: " << sci(last.max_not_type_two) << '\n';
}

void write_outputs(const FitReport& report, const std::string& model, const std::string& report_path) {
  if (!model.empty()) io::write_model(model, report.function);
  if (!report_path.empty()) {
    auto out = io::open_output(report_path);
    io::write_report(out, report);
  }
}

// ---- verify

struct VerifyOptions {
  CloudOptions cloud;
  SpaceOptions space;
  int samples = 101;
  double tolerance = 1e-9;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const WeightedPointCloud cloud = load_cloud(o.cloud);
  auto space = std::make_shared<const SplineSpace>(build_space(o.space, cloud.sites()));
  const Decomposition dec = decompose(space, cloud);
  const SplineFunction direct(space, solve_wls(collocation_matrix(*space, cloud.sites()), cloud.weights(), cloud.values()));

  const int N = space->parametric_dimension();
  const int per = N == 1 ? o.samples : std::max(2, static_cast<int>(std::pow(o.samples, 1.0 / N)));
  RowMatrix pts = grid_points(space->domain(), std::vector<int>(static_cast<std::size_t>(N), per));
  double discrepancy = 0.0;
  auto check = [&](PointView x) {
    const Vector a = dec.reconstruct(x);
    const Vector b = direct.evaluate(x);
    discrepancy = std::max(discrepancy, (a - b).cwiseAbs().maxCoeff() / (1.0 + b.cwiseAbs().maxCoeff()));
  };
  for (Index i = 0; i < pts.rows(); ++i) check(row_view(pts, i));
  for (Index i = 0; i < cloud.size(); ++i) check(cloud.site(i));

  const bool pass = discrepancy < o.tolerance;
  out << "points: " << cloud.size() << '\n'
      << "dimension: " << space->dimension() << '\n'
      << "subsets: " << dec.admissible_count() << '/' << dec.total_count() << " admissible\n"
      << "max discrepancy: " << sci(discrepancy) << '\n'
      << "cauchy-binet residual: " << sci(dec.cauchy_binet_residual()) << '\n'
      << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kVerificationFailed;
}

// ---- fit

struct FitOptions {
  CloudOptions cloud;
  SpaceOptions space;
  double tol_one = 1e-3;
  double tol_two = std::numeric_limits<double>::infinity();
  double lambda = 0.0;
  std::string alpha = "error";
  int max_iter = 100;
  bool update_all = false;
  std::string model, report;
};

int cmd_fit(const FitOptions& o, std::ostream& out) {
  const WeightedPointCloud cloud = load_cloud(o.cloud);
  auto space = std::make_shared<const SplineSpace>(build_space(o.space, cloud.sites()));
  FitConfig config;
  config.tol_one = o.tol_one;
  config.tol_two = o.tol_two;
  config.lambda = o.lambda;
  config.rule = parse_weight_rule(o.alpha);
  config.max_iterations = o.max_iter;
  config.update_all_marked = o.update_all;
  const FitReport report = rwls_fit(space, cloud, config);
  write_outputs(report, o.model, o.report);
  print_summary(out, report);
  return kOk;
}

// ---- fit-adaptive

struct AdaptiveOptions {
  CloudOptions cloud;
  SpaceOptions space;
  double eps = 1e-3;
  double tol_one = 0.0;  // 0: tol_i_ratio * eps
  double tol_ratio = 10.0;
  double tol_two = std::numeric_limits<double>::infinity();
  double lambda = 1e-6;
  std::string alpha = "fixed:1.25";
  int levels = 5;
  bool no_buffer = false;
  std::string model, report, mesh_dump;
};

int cmd_fit_adaptive(const AdaptiveOptions& o, std::ostream& out) {
  WeightedPointCloud cloud = load_cloud(o.cloud);
  if (cloud.parametric_dimension() != 2) throw InvalidArgument("fit-adaptive expects bivariate sites (x1, x2)");
  const SplineSpace base = build_space(o.space, cloud.sites());
  FitConfig config;
  config.eps = o.eps;
  config.tol_one = o.tol_one > 0.0 ? o.tol_one : o.tol_ratio * o.eps;
  config.tol_two = o.tol_two;
  config.lambda = o.lambda;
  config.rule = parse_weight_rule(o.alpha);
  config.max_levels = o.levels;
  config.buffer = !o.no_buffer;
  config.validate();

  bool marked = false;
  for (Marker m : cloud.markers()) marked = marked || m != Marker::plain;
  if (!marked) {
    // ordinary least squares, as in the threshold rule for K_I
    std::vector<Marker> markers(static_cast<std::size_t>(cloud.size()), Marker::plain);
    const auto K = init_markers_from_ls(std::make_shared<const SplineSpace>(base), cloud, config.eps);
    for (Index i : K) markers[static_cast<std::size_t>(i)] = Marker::type_one;
    cloud = cloud.with_markers(std::move(markers));
    out << "initial markers: " << K.size() << '\n';
  }
  const FitReport report = adaptive_rwls_fit(base, cloud, config);
  write_outputs(report, o.model, o.report);
  if (!o.mesh_dump.empty()) {
    auto mesh = io::open_output(o.mesh_dump);
    io::write_mesh(mesh, dynamic_cast<const HierarchicalSpace&>(report.function.space()));
  }
  print_summary(out, report);
  return kOk;
}

// ---- sample

struct SampleOptions {
  std::string model;
  std::string grid = "101";
  std::string range;
  int deriv = 0;
  std::string out;
};

int cmd_sample(const SampleOptions& o, std::ostream& out) {
  const SplineFunction f = io::read_model(o.model);
  const int N = f.space().parametric_dimension();
  const int D = f.value_dimension();
  std::vector<int> counts;
  for (const auto& s : split(o.grid, 'x')) counts.push_back(parse_ints(s).at(0));
  if (counts.size() == 1) counts.resize(static_cast<std::size_t>(N), counts.front());
  if (static_cast<int>(counts.size()) != N) throw InvalidArgument("--grid: one count or one per direction");
  for (int c : counts) {
    if (c < 1) throw InvalidArgument("--grid counts must be >= 1");
  }
  Box box = f.space().domain();
  if (!o.range.empty()) {
    const auto dom = resolve_domain(o.range, RowMatrix(0, N));
    for (std::size_t d = 0; d < dom.size(); ++d) {
      box.lower[d] = dom[d].first;
      box.upper[d] = dom[d].second;
    }
  }
  if (o.deriv < 0) throw InvalidArgument("--deriv must be >= 0");
  const RowMatrix pts = grid_points(box, counts);
  for (Index i = 0; i < pts.rows(); ++i) f.space().check_point(row_view(pts, i));

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out.empty()) {
    file = io::open_output(o.out);
    sink = &file;
  }
  std::ostream& s = *sink;
  for (int d = 0; d < N; ++d) s << (d ? "," : "") << 'x' << d + 1;
  for (int k = 0; k < D; ++k) s << ",f" << k + 1;
  if (o.deriv > 0) {
    for (int d = 0; d < N; ++d) {
      for (int k = 0; k < D; ++k) s << ",d" << o.deriv << "x" << d + 1 << "_f" << k + 1;
    }
  }
  s << '\n';
  for (Index i = 0; i < pts.rows(); ++i) {
    const PointView x = row_view(pts, i);
    for (int d = 0; d < N; ++d) s << (d ? "," : "") << io::format_double(x[static_cast<std::size_t>(d)]);
    const Vector v = f.evaluate(x);
    for (int k = 0; k < D; ++k) s << ',' << io::format_double(v(k));
    if (o.deriv > 0) {
      for (int d = 0; d < N; ++d) {
        MultiIndex order(static_cast<std::size_t>(N), 0);
        order[static_cast<std::size_t>(d)] = o.deriv;
        const Vector g = f.evaluate_derivative(x, order);
        for (int k = 0; k < D; ++k) s << ',' << io::format_double(g(k));
      }
    }
    s << '\n';
  }
  if (!s) throw IoError("failed writing samples");
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted least-squares spline fitting"};
  app.name("rwls");
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "check that the WLS fit equals the weighted average of subset interpolants");
  add_cloud_flags(v, verify.cloud);
  add_space_flags(v, verify.space);
  v->add_option("--samples", verify.samples, "evaluation points (per curve; total for surfaces)")->capture_default_str();
  v->add_option("--tolerance", verify.tolerance, "pass threshold on the discrepancy")->capture_default_str();

  FitOptions fit;
  auto* f = app.add_subcommand("fit", "reweighted least squares in a fixed spline space");
  add_cloud_flags(f, fit.cloud);
  add_space_flags(f, fit.space);
  f->add_option("--tol-i", fit.tol_one, "tolerance for type I markers")->capture_default_str();
  f->add_option("--tol-ii", fit.tol_two, "tolerance for points not marked type II");
  f->add_option("--lambda", fit.lambda, "thin-plate penalty weight")->capture_default_str();
  f->add_option("--alpha", fit.alpha, "error, fixed:<rho> or irls:<delta>")->capture_default_str();
  f->add_option("--max-iter", fit.max_iter, "iteration cap")->capture_default_str();
  f->add_flag("--update-all", fit.update_all, "reweight every marked point, not only violators");
  f->add_option("--out", fit.model, "model JSON output");
  f->add_option("--report", fit.report, "per-iteration report CSV");

  AdaptiveOptions ad;
  auto* a = app.add_subcommand("fit-adaptive", "reweighted least squares with hierarchical refinement");
  add_cloud_flags(a, ad.cloud);
  add_space_flags(a, ad.space);
  a->add_option("--mesh", ad.space.mesh, "initial cells per direction, e.g. 15x15");
  a->add_option("--eps", ad.eps, "refinement threshold")->capture_default_str();
  a->add_option("--tol-i", ad.tol_one, "tolerance for type I markers (default: ratio * eps)");
  a->add_option("--tol-i-ratio", ad.tol_ratio, "tol_I = ratio * eps")->capture_default_str();
  a->add_option("--tol-ii", ad.tol_two, "tolerance for type II markers");
  a->add_option("--lambda", ad.lambda, "thin-plate penalty weight")->capture_default_str();
  a->add_option("--alpha", ad.alpha, "error, fixed:<rho> or irls:<delta>")->capture_default_str();
  a->add_option("--levels", ad.levels, "maximum number of hierarchical levels")->capture_default_str();
  a->add_flag("--no-buffer", ad.no_buffer, "refine only the marked cells, without their neighbours");
  a->add_option("--out", ad.model, "model JSON output");
  a->add_option("--report", ad.report, "per-iteration report CSV");
  a->add_option("--mesh-dump", ad.mesh_dump, "leaf cells CSV");

  SampleOptions sm;
  auto* s = app.add_subcommand("sample", "evaluate a model on a tensor grid");
  s->add_option("model", sm.model, "model JSON")->required();
  s->add_option("--grid", sm.grid, "samples per direction, e.g. 101 or 50x50")->capture_default_str();
  s->add_option("--range", sm.range, "sampling box 'a,b[;c,d]' (default: model domain)");
  s->add_option("--deriv", sm.deriv, "also output pure derivatives of this order")->capture_default_str();
  s->add_option("--out", sm.out, "output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rwls: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out);
    if (f->parsed()) return cmd_fit(fit, out);
    if (a->parsed()) return cmd_fit_adaptive(ad, out);
    if (s->parsed()) return cmd_sample(sm, out);
  } catch (const IoError& e) {
    err << "rwls: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const NumericalError& e) {
    err << "rwls: numerical error: " << e.what() << '\n';
    return kNumericError;
  } catch (const InvalidArgument& e) {
    err << "rwls: invalid configuration: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "rwls: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace rwls::cli
