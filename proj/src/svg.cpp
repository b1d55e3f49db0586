#include "windcurve/svg.hpp"

#include "windcurve/polarity.hpp"
#include "windcurve/santalo.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace windcurve {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// SVG y grows downward, so emit -y.
std::string path_data(const Eigen::Matrix2Xd& v, bool close) {
  std::ostringstream d;
  for (Eigen::Index i = 0; i < v.cols(); ++i)
    d << (i == 0 ? "M " : "L ") << num(v(0, i)) << ' ' << num(-v(1, i)) << ' ';
  if (close) d << 'Z';
  return d.str();
}

}  // namespace

std::string figure_svg(const WoundPolygon& c, int size_px) {
  const WoundPolygon cc = validate(c);
  const Eigen::Matrix2Xd v = to_cartesian(cc);
  const WoundPolygon dual = polar(cc);
  Eigen::Matrix2Xd u = to_cartesian(dual);
  const double r_primal = v.colwise().norm().maxCoeff();
  const double r_dual = u.colwise().norm().maxCoeff();
  u *= r_primal / r_dual;

  const ConvexPolygon ker = kernel(cc);
  Eigen::Matrix2Xd kv(2, static_cast<Eigen::Index>(ker.vertices.size()));
  for (size_t i = 0; i < ker.vertices.size(); ++i) kv.col(i) = ker.vertices[i];

  const double extent = 1.05 * r_primal;
  const double stroke = 2.0 * extent / size_px;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << size_px << "\" height=\"" << size_px << "\" viewBox=\"" << num(-extent) << ' '
      << num(-extent) << ' ' << num(2 * extent) << ' ' << num(2 * extent) << "\">\n"
      << "  <rect x=\"" << num(-extent) << "\" y=\"" << num(-extent) << "\" width=\""
      << num(2 * extent) << "\" height=\"" << num(2 * extent) << "\" fill=\"white\"/>\n"
      << "  <path d=\"" << path_data(kv, true)
      << "\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\"/>\n"
      << "  <path d=\"" << path_data(u, true) << "\" fill=\"none\" stroke=\"#e6550d\""
      << " stroke-width=\"" << num(stroke) << "\" stroke-dasharray=\"" << num(4 * stroke)
      << ' ' << num(2 * stroke) << "\"/>\n"
      << "  <path d=\"" << path_data(v, true) << "\" fill=\"none\" stroke=\"#3182bd\""
      << " stroke-width=\"" << num(1.5 * stroke) << "\"/>\n"
      << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(1.5 * stroke) << "\" fill=\"black\"/>\n"
      << "</svg>\n";
  return svg.str();
}

void write_figure(const std::string& path, const WoundPolygon& c, int size_px) {
  std::ofstream out(path);
  if (!out) throw curve_error(errc::bad_parameters, "cannot open " + path);
  out << figure_svg(c, size_px);
}

}  // namespace windcurve
