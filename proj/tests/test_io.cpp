#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "windcurve/bounds.hpp"
#include "windcurve/curve.hpp"
#include "windcurve/io.hpp"
#include "windcurve/santalo.hpp"
#include "windcurve/search.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using namespace windcurve;

TEST_CASE("curve json round trip is exact") {
  std::mt19937_64 rng(61);
  for (const auto& c : {construct_cnk(5, 2), guggenheimer_example(2, 0.3, 32),
                        random_curve(9, 3, rng)}) {
    const auto back = curve_from_json(to_json(c));
    CHECK(back.k == c.k);
    CHECK((back.phi == c.phi).all());
    CHECK((back.rho == c.rho).all());
  }
}

TEST_CASE("curve json rejects malformed input") {
  CHECK_THROWS_AS(curve_from_json("not json at all"), curve_error);
  CHECK_THROWS_AS(curve_from_json("{\"k\": 2}"), curve_error);
  CHECK_THROWS_AS(curve_from_json("{\"k\": 2, \"vertices\": [{\"phi\": 0}]}"), curve_error);
  try {
    curve_from_json("[1,2,3]");
  } catch (const curve_error& e) {
    CHECK(e.code() == errc::bad_parameters);
  }
}

TEST_CASE("reading applies validation") {
  // A reflex configuration parses but fails validate.
  const std::string text =
      "{\"k\": 1, \"vertices\": ["
      "{\"phi\": 0.0, \"rho\": 1.0},"
      "{\"phi\": 1.2566370614359172, \"rho\": 1.0},"
      "{\"phi\": 2.5132741228718345, \"rho\": 0.05},"
      "{\"phi\": 3.7699111843077517, \"rho\": 1.0},"
      "{\"phi\": 5.026548245743669, \"rho\": 1.0}]}";
  CHECK_THROWS_AS(curve_from_json(text), curve_error);
  try {
    curve_from_json(text);
  } catch (const curve_error& e) {
    CHECK(e.code() == errc::reflex_vertex);
  }
}

TEST_CASE("stream and file round trips") {
  const auto c = construct_cnk(7, 3);
  std::stringstream ss;
  write_curve(ss, c);
  const auto from_stream = read_curve(ss);
  CHECK((from_stream.phi == c.phi).all());

  const std::string path = "/tmp/windcurve_io_test.json";
  write_curve_file(path, c);
  const auto from_file = read_curve_file(path);
  CHECK((from_file.rho == c.rho).all());
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_curve_file("/tmp/windcurve_does_not_exist.json"), curve_error);
}

TEST_CASE("polygon and result json have the expected shape") {
  const auto c = construct_cnk(4, 1);
  const auto kj = nlohmann::json::parse(to_json(kernel(c)));
  CHECK(kj.at("vertices").size() == 4);
  CHECK(kj.at("vertices")[0].size() == 2);

  const auto rj = nlohmann::json::parse(to_json(santalo_point(c)));
  CHECK(rj.contains("point"));
  CHECK(rj.contains("value"));
  CHECK(rj.contains("gradient_norm"));
  CHECK(rj.contains("iterations"));
  CHECK(rj.contains("tolerance"));
  CHECK(rj.at("point").size() == 2);
}

TEST_CASE("trace json embeds a readable curve") {
  SearchConfig cfg;
  cfg.restarts = 1;
  cfg.perturbation = 0.0;
  cfg.iteration_cap = 200;
  const auto trace = local_search(construct_cnk(5, 2), cfg);
  const auto tj = nlohmann::json::parse(to_json(trace, cfg));
  CHECK(tj.at("config").at("mode") == "general");
  CHECK(tj.at("best_value").get<double>() == trace.best_value);
  const auto best = curve_from_json(tj.at("best_curve").dump());
  CHECK((best.phi == trace.best_curve.phi).all());
  CHECK(tj.at("history").size() > 0);
}

TEST_CASE("bound report csv") {
  CHECK(bound_csv_header() == "n,k,bound,achieved,gap,equality_case,trials");
  BoundReport r;
  r.n = 8;
  r.k = 2;
  r.bound = 32.0;
  r.achieved = 32.5;
  r.gap = 0.5;
  r.equality_case = EqualityCase::RhombTraversed;
  r.trials = 100;
  CHECK(to_csv_row(r) == "8,2,32,32.5,0.5,RhombTraversed,100");
  // Full precision survives the row format.
  r.achieved = 22.612712429686844;
  CHECK(to_csv_row(r).find("22.612712429686844") != std::string::npos);
}

TEST_CASE("sweep csv") {
  SweepReport rep;
  rep.rows.push_back({0.5, 35.5, 61.625});
  rep.rows.push_back({0.25, 222.5, 266.75});
  const std::string csv = sweep_csv(rep);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "eps,floor,product");
  std::getline(lines, line);
  CHECK(line == "0.5,35.5,61.625");
  std::getline(lines, line);
  CHECK(line == "0.25,222.5,266.75");
}
