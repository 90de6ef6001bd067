#include <rwls/io/model.hpp>

#include <rwls/errors.hpp>
#include <rwls/hierarchical.hpp>
#include <rwls/io/csv.hpp>
#include <rwls/spline_space.hpp>

#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace rwls::io {

using nlohmann::json;

namespace {

json space_fields(const SplineSpace& s) {
  json j;
  j["degree"] = s.degrees();
  json knots = json::array();
  for (const auto& kv : s.directions()) knots.push_back(kv.knots());
  j["knots"] = knots;
  return j;
}

SplineSpace space_from(const json& j) {
  const auto degree = j.at("degree").get<std::vector<int>>();
  const auto knots = j.at("knots").get<std::vector<std::vector<double>>>();
  if (degree.size() != knots.size() || degree.empty()) {
    throw IoError("model: 'degree' and 'knots' must list the same number of directions");
  }
  std::vector<KnotVector> dirs;
  for (std::size_t d = 0; d < degree.size(); ++d) dirs.emplace_back(degree[d], knots[d]);
  return SplineSpace(std::move(dirs));
}

}  // namespace

std::string model_to_json(const SplineFunction& f) {
  json j;
  const FunctionSpace& space = f.space();
  if (const auto* s = dynamic_cast<const SplineSpace*>(&space)) {
    j = space_fields(*s);
    j["kind"] = "tensor";
  } else if (const auto* h = dynamic_cast<const HierarchicalSpace*>(&space)) {
    j = space_fields(h->level(0));
    j["kind"] = "hierarchical";
    j["levels"] = h->num_levels();
    json sub = json::array(), act = json::array();
    for (int l = 0; l < h->num_levels(); ++l) {
      sub.push_back(h->subdomain_cells(l));
      act.push_back(h->active(l));
    }
    j["subdomains"] = sub;
    j["active"] = act;
  } else {
    throw InvalidArgument("model: unsupported space kind '" + std::string(space.kind()) + "'");
  }
  json coeffs = json::array();
  const Matrix& c = f.coefficients();
  for (Index i = 0; i < c.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(c.cols()));
    for (Index k = 0; k < c.cols(); ++k) row[static_cast<std::size_t>(k)] = c(i, k);
    coeffs.push_back(row);
  }
  j["coefficients"] = coeffs;
  return j.dump(1) + "\n";
}

SplineFunction model_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    std::shared_ptr<const FunctionSpace> space;
    if (kind == "tensor") {
      space = std::make_shared<const SplineSpace>(space_from(j));
    } else if (kind == "hierarchical") {
      const auto sub = j.at("subdomains").get<std::vector<std::vector<Index>>>();
      if (static_cast<int>(sub.size()) != j.at("levels").get<int>()) {
        throw IoError("model: 'levels' disagrees with 'subdomains'");
      }
      auto h = std::make_shared<const HierarchicalSpace>(space_from(j), sub);
      const auto active = j.at("active").get<std::vector<std::vector<Index>>>();
      bool same = static_cast<int>(active.size()) == h->num_levels();
      for (int l = 0; same && l < h->num_levels(); ++l) same = active[static_cast<std::size_t>(l)] == h->active(l);
      if (!same) throw IoError("model: stored active functions do not match the subdomains");
      space = h;
    } else {
      throw IoError("model: unknown kind '" + kind + "'");
    }
    const auto rows = j.at("coefficients").get<std::vector<std::vector<double>>>();
    if (static_cast<Index>(rows.size()) != space->dimension()) {
      std::ostringstream os;
      os << "model: " << rows.size() << " coefficient rows for a space of dimension " << space->dimension();
      throw IoError(os.str());
    }
    const std::size_t D = rows.empty() ? 0 : rows.front().size();
    Matrix c(static_cast<Index>(rows.size()), static_cast<Index>(D));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != D) throw IoError("model: ragged coefficient rows");
      for (std::size_t k = 0; k < D; ++k) c(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
    }
    return SplineFunction(std::move(space), std::move(c));
  } catch (const json::exception& e) {
    throw IoError(std::string("model: malformed JSON: ") + e.what());
  } catch (const IoError&) {
    throw;
  } catch (const Error& e) {
    throw IoError(std::string("model: invalid content: ") + e.what());
  }
}

void write_model(const std::filesystem::path& path, const SplineFunction& f) {
  const std::string text = model_to_json(f);
  auto out = open_output(path);
  out << text;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

SplineFunction read_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json(ss.str());
}

}  // namespace rwls::io
