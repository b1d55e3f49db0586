#include "windcurve/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace windcurve {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json curve_to_json_obj(const WoundPolygon& c) {
  json verts = json::array();
  for (Eigen::Index i = 0; i < c.size(); ++i)
    verts.push_back(json{{"phi", c.phi[i]}, {"rho", c.rho[i]}});
  return json{{"k", c.k}, {"vertices", std::move(verts)}};
}

}  // namespace

std::string to_json(const WoundPolygon& c) { return curve_to_json_obj(c).dump(); }

WoundPolygon curve_from_json(const std::string& text, const ValidateOptions& opts) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw curve_error(errc::bad_parameters, std::string("bad curve JSON: ") + e.what());
  }
  WoundPolygon c;
  try {
    c.k = j.at("k").get<int>();
    const auto& verts = j.at("vertices");
    c.phi.resize(verts.size());
    c.rho.resize(verts.size());
    Eigen::Index i = 0;
    for (const auto& v : verts) {
      c.phi[i] = v.at("phi").get<double>();
      c.rho[i] = v.at("rho").get<double>();
      ++i;
    }
  } catch (const json::exception& e) {
    throw curve_error(errc::bad_parameters, std::string("bad curve JSON: ") + e.what());
  }
  return validate(c, opts);
}

WoundPolygon read_curve(std::istream& in, const ValidateOptions& opts) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return curve_from_json(ss.str(), opts);
}

void write_curve(std::ostream& out, const WoundPolygon& c) { out << to_json(c) << "\n"; }

WoundPolygon read_curve_file(const std::string& path, const ValidateOptions& opts) {
  std::ifstream in(path);
  if (!in) throw curve_error(errc::bad_parameters, "cannot open " + path);
  return read_curve(in, opts);
}

void write_curve_file(const std::string& path, const WoundPolygon& c) {
  std::ofstream out(path);
  if (!out) throw curve_error(errc::bad_parameters, "cannot open " + path);
  write_curve(out, c);
}

std::string to_json(const ConvexPolygon& p) {
  json verts = json::array();
  for (const Vec2& v : p.vertices) verts.push_back(json::array({v.x(), v.y()}));
  return json{{"vertices", std::move(verts)}}.dump();
}

std::string to_json(const SantaloResult& r) {
  return json{{"point", json::array({r.point.x(), r.point.y()})},
              {"value", r.value},
              {"gradient_norm", r.gradient_norm},
              {"iterations", r.iterations},
              {"tolerance", r.tolerance}}
      .dump();
}

std::string to_json(const SearchTrace& t, const SearchConfig& cfg) {
  json config{
      {"mode", cfg.mode == SearchMode::General ? "general" : "half_period_symmetric"},
      {"gauge", "fix_first_angle_and_scale"},
      {"initial_step", cfg.initial_step},
      {"perturbation", cfg.perturbation},
      {"restarts", cfg.restarts},
      {"iteration_cap", cfg.iteration_cap},
      {"seed", cfg.seed}};
  return json{{"config", std::move(config)},
              {"iterations", t.iterations},
              {"best_value", t.best_value},
              {"best_curve", curve_to_json_obj(t.best_curve)},
              {"history", t.history},
              {"restart_values", t.restart_values},
              {"accepted", t.accepted},
              {"rejected", t.rejected}}
      .dump();
}

std::string bound_csv_header() { return "n,k,bound,achieved,gap,equality_case,trials"; }

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream ss;
  ss << r.n << ',' << r.k << ',' << fmt(r.bound) << ',' << fmt(r.achieved) << ','
     << fmt(r.gap) << ',' << to_string(r.equality_case) << ',' << r.trials;
  return ss.str();
}

std::string sweep_csv(const SweepReport& r) {
  std::ostringstream ss;
  ss << "eps,floor,product\n";
  for (const SweepRow& row : r.rows)
    ss << fmt(row.eps) << ',' << fmt(row.floor) << ',' << fmt(row.product) << '\n';
  return ss.str();
}

}  // namespace windcurve
