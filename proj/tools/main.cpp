#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"

using bridgeland::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "half of H^2 (positive integer)")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact wall and chamber computations for Bridgeland stability on an abelian surface"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* walls = app.add_subcommand("walls", "walls for v (default v = (1,0,-ell))");
  add_common(walls, cfg);
  walls->add_option("--ell", cfg.ell);
  walls->add_option("--v", cfg.v, "r,d,a");
  walls->add_option("--line", cfg.line, "enumerate walls meeting s = s0");
  walls->add_option("--m-range", cfg.m_range, "lo..hi codim-0 indices");
  walls->add_option("--window", cfg.window, "smin:smax:tmax");
  walls->add_option("--svg", cfg.svg_path, "write an SVG picture");
  walls->add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");
  walls->add_option("--bound", cfg.bound, "entry bound for --verify");

  auto* pell = app.add_subcommand("pell", "generator of the Pell group and its iterates");
  add_common(pell, cfg);
  pell->add_option("--ell", cfg.ell)->required();
  pell->add_option("--m-range", cfg.m_range);

  auto* numsol = app.add_subcommand("numsol", "numerical solutions for (1,0,-ell)");
  add_common(numsol, cfg);
  numsol->add_option("--ell", cfg.ell)->required();
  numsol->add_option("--m-range", cfg.m_range);

  auto* classify = app.add_subcommand("classify", "chamber of a stability condition");
  add_common(classify, cfg);
  classify->add_option("--ell", cfg.ell);
  classify->add_option("--v", cfg.v);
  classify->add_option("--s", cfg.s)->required();
  classify->add_option("--t2", cfg.t2, "t^2")->required();
  classify->add_option("--m-range", cfg.m_range);

  auto* intervals = app.add_subcommand("intervals", "interval index of a slope");
  add_common(intervals, cfg);
  intervals->add_option("--ell", cfg.ell)->required();
  intervals->add_option("--lambda", cfg.lambda)->required();
  intervals->add_option("--m", cfg.m);

  auto* act = app.add_subcommand("act", "right action of a matrix on a Mukai vector");
  add_common(act, cfg);
  act->add_option("--g", cfg.g, "a,b;c,d")->required();
  act->add_option("--v", cfg.v)->required();

  auto* mob = app.add_subcommand("mobius", "Moebius action on the upper half-plane");
  add_common(mob, cfg);
  mob->add_option("--g", cfg.g)->required();
  mob->add_option("--z", cfg.z, "x+y*i")->required();

  auto* wmax = app.add_subcommand("wmax", "largest wall and its slope ranges");
  add_common(wmax, cfg);
  wmax->add_option("--ell", cfg.ell);
  wmax->add_option("--v", cfg.v);

  auto* verify = app.add_subcommand("verify", "run the internal consistency checks");
  add_common(verify, cfg);
  verify->add_option("--ell", cfg.ell);
  verify->add_option("--v", cfg.v);
  verify->add_option("--line", cfg.line);
  verify->add_option("--m-range", cfg.m_range);
  verify->add_option("--bound", cfg.bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << bridgeland::error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  auto res = bridgeland::cli::run(cfg);
  std::cout << bridgeland::cli::render(res.out, cfg.format);
  if (res.svg && cfg.svg_path) {
    std::ofstream f(*cfg.svg_path);
    f << *res.svg;
    if (!f) {
      std::cout << bridgeland::error_json("IoError", "cannot write " + *cfg.svg_path).dump(2) << "\n";
      return 2;
    }
  }
  return res.code;
}
