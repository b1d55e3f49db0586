#include <CLI11.hpp>

#include "windcurve/bounds.hpp"
#include "windcurve/curve.hpp"
#include "windcurve/io.hpp"
#include "windcurve/polarity.hpp"
#include "windcurve/santalo.hpp"
#include "windcurve/search.hpp"
#include "windcurve/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace windcurve;

WoundPolygon load_curve(const std::string& path, bool allow_flat) {
  ValidateOptions opts;
  opts.allow_flat = allow_flat;
  if (path.empty() || path == "-") return read_curve(std::cin, opts);
  return read_curve_file(path, opts);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw curve_error(errc::bad_parameters, "cannot open " + path);
  out << text;
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("WINDCURVE_SEED"))
    return std::strtoull(s, nullptr, 10);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"locally convex wound polygons: polarity, Santalo points, and"
               " volume-product bounds"};
  app.require_subcommand(1);
  int exit_code = 0;

  // Shared option storage. Each subcommand reads only what it registered.
  std::string in_path, out_path;
  bool allow_flat = false;
  int digits = 12;
  int n = 0, k = 0, m = 256, grid = 1000, restarts = 1, iters = 2000, size_px = 640;
  double tol = 0.0, h = 1e-5, max_relative = 0.0, magnitude = 0.05, step = 0.02;
  std::uint64_t trials = 10000, seed = env_seed();
  int kmin = 2, kmax = 4;
  std::string mode = "general";
  std::vector<double> eps_list{0.5, 0.2, 0.1};

  const auto add_in = [&](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "curve JSON file (default: stdin)");
    cmd->add_flag("--allow-flat", allow_flat, "accept zero-turn vertices");
  };
  const auto add_digits = [&](CLI::App* cmd) {
    cmd->add_option("--digits", digits, "significant digits (default 12)");
  };

  auto* cnk = app.add_subcommand("cnk", "emit the regular star C_{n,k}");
  cnk->add_option("--n", n, "vertex count")->required();
  cnk->add_option("--k", k, "winding number")->required();
  cnk->add_option("--out", out_path, "output file (default: stdout)");
  cnk->callback([&] { emit(out_path, to_json(construct_cnk(n, k)) + "\n"); });

  auto* area_cmd = app.add_subcommand("area", "index-weighted enclosed area");
  add_in(area_cmd);
  add_digits(area_cmd);
  area_cmd->callback([&] {
    std::cout << fmt(area(load_curve(in_path, allow_flat)), digits) << "\n";
  });

  auto* polar_cmd = app.add_subcommand("polar", "polar curve");
  add_in(polar_cmd);
  polar_cmd->add_option("--out", out_path, "output file (default: stdout)");
  polar_cmd->callback([&] {
    emit(out_path, to_json(polar(load_curve(in_path, allow_flat))) + "\n");
  });

  auto* volprod = app.add_subcommand("volprod", "volume product V(C)V(C*)");
  add_in(volprod);
  add_digits(volprod);
  volprod->callback([&] {
    std::cout << fmt(volume_product(load_curve(in_path, allow_flat)), digits) << "\n";
  });

  auto* kernel_cmd = app.add_subcommand("kernel", "kernel polygon");
  add_in(kernel_cmd);
  kernel_cmd->add_option("--out", out_path, "output file (default: stdout)");
  kernel_cmd->callback([&] {
    emit(out_path, to_json(kernel(load_curve(in_path, allow_flat))) + "\n");
  });

  auto* santalo_cmd = app.add_subcommand("santalo", "Santalo point and value");
  add_in(santalo_cmd);
  santalo_cmd->add_option("--tol", tol, "gradient tolerance (default: automatic)");
  santalo_cmd->callback([&] {
    std::cout << to_json(santalo_point(load_curve(in_path, allow_flat), tol)) << "\n";
  });

  auto* bound = app.add_subcommand("bound", "closed-form bounds");
  bound->require_subcommand(1);
  auto* b10 = bound->add_subcommand("prop10", "equal-angle lower bound");
  b10->add_option("--n", n)->required();
  b10->add_option("--k", k)->required();
  add_digits(b10);
  b10->callback([&] { std::cout << fmt(prop10_bound(n, k), digits) << "\n"; });
  auto* b12 = bound->add_subcommand("prop12", "general winding-k lower bound");
  b12->add_option("--k", k)->required();
  add_digits(b12);
  b12->callback([&] {
    const Prop12Constants pc = prop12_constants();
    std::cout << "c0 " << fmt(pc.c0, digits) << "\n"
              << "c0_degrees " << fmt(pc.c0 * 180.0 / std::numbers::pi, digits) << "\n"
              << "coefficient " << fmt(pc.coefficient, digits) << "\n"
              << "bound " << fmt(prop12_bound(k), digits) << "\n";
  });
  auto* b7 = bound->add_subcommand("remark7", "volume product of C_{n,k}");
  b7->add_option("--n", n)->required();
  b7->add_option("--k", k)->required();
  add_digits(b7);
  b7->callback([&] { std::cout << fmt(cnk_product(n, k), digits) << "\n"; });
  auto* b13 = bound->add_subcommand("remark13", "prism vs simplex comparison");
  b13->add_option("--k", k)->required();
  add_digits(b13);
  b13->callback([&] {
    const Remark13Report rep = remark13_compare(k);
    std::cout << "prism " << fmt(rep.prism, digits) << "\n"
              << "simplex " << fmt(rep.simplex, digits) << "\n"
              << "smaller " << (rep.prism_smaller ? "prism" : "simplex") << "\n";
  });

  auto* check = app.add_subcommand("check", "numerical verification runs");
  check->require_subcommand(1);
  auto* lemma = check->add_subcommand("lemma11", "grid convexity of the two lemma functions");
  lemma->add_option("--grid", grid, "grid points (default 1000)");
  add_digits(lemma);
  lemma->callback([&] {
    const Lemma11Report rep = lemma11_check(grid);
    std::cout << "min_second_diff_inv_cos " << fmt(rep.min_second_diff_inv_cos, digits)
              << "\n"
              << "min_second_diff_t_sin " << fmt(rep.min_second_diff_t_sin, digits) << "\n"
              << "convex " << (rep.convex ? "true" : "false") << "\n";
    if (!rep.convex) exit_code = 1;
  });
  auto* crit = check->add_subcommand("criticality", "finite-difference criticality residual");
  add_in(crit);
  crit->add_option("--n", n, "use C_{n,k} instead of --in");
  crit->add_option("--k", k, "use C_{n,k} instead of --in");
  crit->add_option("--fd-step", h, "finite-difference step (default 1e-5)");
  crit->add_option("--max-relative", max_relative,
                   "fail (exit 1) if residual/product exceeds this");
  add_digits(crit);
  crit->callback([&] {
    const WoundPolygon c = n > 0 ? construct_cnk(n, k) : load_curve(in_path, allow_flat);
    const double residual = criticality_residual(c, h);
    const double product = santalo_product(c);
    std::cout << "residual " << fmt(residual, digits) << "\n"
              << "product " << fmt(product, digits) << "\n"
              << "relative " << fmt(residual / product, digits) << "\n";
    if (max_relative > 0.0 && residual / product > max_relative) exit_code = 1;
  });
  auto* t10 = check->add_subcommand("prop10-trials", "equal-angle random-radius trials");
  t10->add_option("--kmin", kmin, "smallest k (default 2)");
  t10->add_option("--kmax", kmax, "largest k (default 4)");
  t10->add_option("--trials", trials, "trials per (n,k) (default 10000)");
  t10->add_option("--seed", seed, "random seed");
  t10->add_option("--out", out_path, "CSV output (default: stdout)");
  t10->callback([&] {
    std::string csv = bound_csv_header() + "\n";
    for (int kk = kmin; kk <= kmax; ++kk)
      for (int nn = 2 * kk + 1; nn <= 4 * kk; ++nn) {
        const BoundReport rep = run_prop10_trials(nn, kk, trials, seed);
        csv += to_csv_row(rep) + "\n";
        if (rep.gap < -1e-9) exit_code = 1;
      }
    emit(out_path, csv);
  });
  auto* t12 = check->add_subcommand("prop12-trials", "random-angle unit-radius trials");
  t12->add_option("--kmin", kmin, "smallest k (default 2)");
  t12->add_option("--kmax", kmax, "largest k (default 4)");
  t12->add_option("--trials", trials, "trials per k (default 10000)");
  t12->add_option("--seed", seed, "random seed");
  t12->add_option("--out", out_path, "CSV output (default: stdout)");
  t12->callback([&] {
    std::string csv = bound_csv_header() + "\n";
    for (int kk = kmin; kk <= kmax; ++kk) {
      const BoundReport rep = run_prop12_trials(kk, trials, seed);
      csv += to_csv_row(rep) + "\n";
      if (rep.achieved < rep.bound - 1e-6) exit_code = 1;
    }
    emit(out_path, csv);
  });

  auto* search_cmd = app.add_subcommand("search", "derivative-free descent of the santalo product");
  add_in(search_cmd);
  search_cmd->add_option("--n", n, "use C_{n,k} instead of --in");
  search_cmd->add_option("--k", k, "use C_{n,k} instead of --in");
  search_cmd->add_option("--mode", mode, "general | half-period (default general)");
  search_cmd->add_option("--restarts", restarts, "perturbed restarts (default 1)");
  search_cmd->add_option("--magnitude", magnitude, "perturbation radius (default 0.05)");
  search_cmd->add_option("--step", step, "initial simplex edge (default 0.02)");
  search_cmd->add_option("--iters", iters, "iteration cap per restart (default 2000)");
  search_cmd->add_option("--seed", seed, "random seed");
  search_cmd->add_option("--out", out_path, "trace JSON output (default: stdout)");
  search_cmd->callback([&] {
    const WoundPolygon c = n > 0 ? construct_cnk(n, k) : load_curve(in_path, allow_flat);
    SearchConfig cfg;
    if (mode == "general")
      cfg.mode = SearchMode::General;
    else if (mode == "half-period")
      cfg.mode = SearchMode::HalfPeriodSymmetric;
    else
      throw CLI::ValidationError("--mode must be general or half-period");
    cfg.restarts = restarts;
    cfg.perturbation = magnitude;
    cfg.initial_step = step;
    cfg.iteration_cap = iters;
    cfg.seed = seed;
    emit(out_path, to_json(local_search(c, cfg), cfg) + "\n");
  });

  auto* unbounded = app.add_subcommand("unbounded", "two-ellipse winding example sweep");
  unbounded->add_option("--k", k, "winding number")->required();
  unbounded->add_option("--eps", eps_list, "eccentricities (default 0.5,0.2,0.1)")
      ->delimiter(',');
  unbounded->add_option("--m", m, "samples per loop (default 256)");
  unbounded->add_option("--out", out_path, "CSV output (default: stdout)");
  unbounded->callback([&] {
    const SweepReport rep = unboundedness_sweep(k, eps_list, m);
    emit(out_path, sweep_csv(rep));
    if (!rep.floors_met || !rep.monotone) exit_code = 1;
  });

  auto* plot = app.add_subcommand("plot", "SVG figure: curve, polar, kernel");
  add_in(plot);
  plot->add_option("--out", out_path, "SVG output path")->required();
  plot->add_option("--size", size_px, "image size in pixels (default 640)");
  plot->callback([&] {
    emit(out_path, figure_svg(load_curve(in_path, allow_flat), size_px));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const curve_error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == errc::no_convergence ? 2 : 1;
  }
  return exit_code;
}
