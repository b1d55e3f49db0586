#pragma once

#include "windcurve/bounds.hpp"
#include "windcurve/curve.hpp"
#include "windcurve/santalo.hpp"
#include "windcurve/search.hpp"

#include <iosfwd>
#include <string>

namespace windcurve {

// Curve JSON: {"k": <int>, "vertices": [{"phi": <float>, "rho": <float>}, ...]}
// with lifted phi in radians. Doubles round-trip exactly.
std::string to_json(const WoundPolygon& c);
WoundPolygon curve_from_json(const std::string& text, const ValidateOptions& opts = {});

WoundPolygon read_curve(std::istream& in, const ValidateOptions& opts = {});
void write_curve(std::ostream& out, const WoundPolygon& c);
WoundPolygon read_curve_file(const std::string& path, const ValidateOptions& opts = {});
void write_curve_file(const std::string& path, const WoundPolygon& c);

std::string to_json(const ConvexPolygon& p);
std::string to_json(const SantaloResult& r);
std::string to_json(const SearchTrace& t, const SearchConfig& cfg);

// CSV rows for bound reports: n,k,bound,achieved,gap,equality_case,trials
std::string bound_csv_header();
std::string to_csv_row(const BoundReport& r);

// CSV for sweep reports: eps,floor,product
std::string sweep_csv(const SweepReport& r);

}  // namespace windcurve
