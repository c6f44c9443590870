#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "bridgeland/oracle.hpp"
#include "bridgeland/svg.hpp"

namespace bridgeland::cli {

namespace {

const char* kDefaultWindow = "-3:1:3/2";

Context context_of(const RunConfig& cfg) { return Context(cfg.n); }

MukaiVector target_vector(const RunConfig& cfg) {
  if (cfg.v) return parse_vector(*cfg.v);
  if (!cfg.ell) fail("UsageError", "give --ell or --v");
  if (*cfg.ell < 1) fail("DomainError", "--ell must be positive");
  return MukaiVector::of(1, 0, -*cfg.ell);
}

// l when v = (1, 0, -l), the shape the Pell machinery covers.
std::optional<long> pell_ell(const MukaiVector& v) {
  if (v.r != 1 || sign(v.d) != 0 || !is_integer(v.a) || sign(v.a) >= 0) return std::nullopt;
  Int l = -v.a.get_num();
  if (!l.fits_slong_p()) return std::nullopt;
  return l.get_si();
}

std::pair<long, long> m_range_or(const RunConfig& cfg, long lo, long hi) {
  return cfg.m_range ? parse_m_range(*cfg.m_range) : std::make_pair(lo, hi);
}

Rat required_rat(const std::optional<std::string>& field, const char* name) {
  if (!field) fail("UsageError", std::string("missing --") + name);
  return parse_rat(*field);
}

bool has_shape(const std::vector<Wall>& walls, const Shape& sh) {
  return std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.shape == sh; });
}

bool within(const MukaiVector& v, long bound) {
  Rat b(bound);
  return abs(v.r) <= bound && abs_rat(v.d) <= b && abs_rat(v.a) <= b;
}

// The box scan only sees witnesses with entries up to the bound, so walls whose
// preferred witness is larger are reported rather than counted as mismatches.
Json oracle_check(const std::vector<Wall>& exact, const std::vector<Wall>& brute, long bound) {
  bool ok = std::all_of(brute.begin(), brute.end(), [&](const Wall& w) { return has_shape(exact, w.shape); });
  long beyond = 0;
  for (const Wall& w : exact) {
    if (has_shape(brute, w.shape)) continue;
    if (within(w.witness, bound))
      ok = false;
    else
      ++beyond;
  }
  return {{"check", "brute_walls"}, {"bound", bound}, {"beyond_bound", beyond}, {"ok", ok}};
}

Json presentation_json(const PresentationReport& rep) {
  return {{"count", rep.infinite ? Json("inf") : Json(rep.count)}, {"both_presentations", rep.both_presentations}};
}

struct WallSet {
  std::vector<Wall> walls;
  std::vector<Wall> ticks;
  std::optional<Rat> cross_section;
  std::string mode;
  std::optional<PellContext> pell;
};

WallSet compute_walls(const RunConfig& cfg, const MukaiVector& v, const Context& ctx) {
  WallSet ws;
  if (cfg.line) {
    ws.mode = "line";
    ws.cross_section = parse_rat(*cfg.line);
    ws.walls = enumerate_walls_on_line(v, *ws.cross_section, ctx, cfg.jobs);
    tag_codim0(ws.walls, v, ctx);
    ws.ticks = ws.walls;
    return ws;
  }
  if (finite_case(v, ctx)) {
    ws.mode = "finite";
    ws.walls = finite_walls(v, ctx, cfg.jobs);
    ws.ticks = ws.walls;
    return ws;
  }
  std::optional<long> ell = pell_ell(v);
  if (!ell) fail("InfiniteWallSet", "the wall set of " + to_string(v) + " is infinite; use --line s0");
  ws.mode = "pell";
  ws.pell = solve_generator(ctx.n, *ell);
  auto [lo, hi] = m_range_or(cfg, -2, 0);
  ws.cross_section = fundamental_cross_section(*ws.pell);
  ws.ticks = fundamental_walls(*ws.pell, cfg.jobs);
  std::vector<Wall> all = ws.ticks;
  for (const Wall& w : codim0_walls(*ws.pell, lo, hi)) all.push_back(w);
  ws.walls = dedupe_walls(std::move(all), ctx);
  return ws;
}

Json cmd_walls(const RunConfig& cfg, RunResult& res) {
  Context ctx = context_of(cfg);
  MukaiVector v = target_vector(cfg);
  WallSet ws = compute_walls(cfg, v, ctx);
  Json out;
  out["v"] = to_string(v);
  out["n"] = cfg.n;
  out["mode"] = ws.mode;
  if (ws.pell) out["pell"] = to_json(*ws.pell);
  out["cross_section"] = ws.cross_section ? to_json(*ws.cross_section) : Json(nullptr);
  out["walls"] = to_json(ws.walls);
  if (cfg.verify) {
    Json checks = Json::array();
    bool ok = true;
    if (ws.cross_section && ws.mode != "finite") {
      Json check = oracle_check(search_line(v, *ws.cross_section, ctx, cfg.jobs),
                                brute_walls(v, *ws.cross_section, cfg.bound, ctx), cfg.bound);
      ok = ok && check["ok"].get<bool>();
      checks.push_back(check);
    }
    Window win = parse_window(cfg.window.value_or(kDefaultWindow));
    ScanConfig scan;
    scan.grid = 0.01;
    double worst = 0;
    for (const Wall& w : ws.walls) {
      for (const CloudPoint& p : float_align_scan(v, w.witness, win, scan, ctx))
        worst = std::max(worst, distance_to_wall(w.shape, p));
    }
    bool near = worst <= scan.grid;
    ok = ok && near;
    checks.push_back({{"check", "float_align_scan"}, {"grid", scan.grid}, {"max_distance", worst}, {"ok", near}});
    out["verify"] = {{"ok", ok}, {"checks", checks}};
    if (!ok) res.code = 3;
  }
  if (cfg.svg_path) {
    SvgOptions opt{parse_window(cfg.window.value_or(kDefaultWindow)), ws.cross_section, ws.ticks,
                   "Walls for v = " + to_string(v) + ", n = " + std::to_string(cfg.n)};
    res.svg = render_svg(ws.walls, opt);
  }
  return out;
}

Json cmd_pell(const RunConfig& cfg) {
  if (!cfg.ell) fail("UsageError", "pell needs --ell");
  PellContext pell = solve_generator(cfg.n, *cfg.ell);
  auto [lo, hi] = m_range_or(cfg, -2, 2);
  Json out = to_json(pell);
  Json its = Json::array(), us = Json::array();
  for (long m = lo; m <= hi; ++m) {
    Iterate it = iterate(pell, m);
    its.push_back({{"m", m}, {"a", to_string(it.a)}, {"b", to_string(it.b)}});
    if (m == 0) continue;
    auto [u, u2] = u_vectors(pell, m);
    us.push_back({{"m", m}, {"u", to_string(u)}, {"u_prime", to_string(u2)}});
  }
  out["iterates"] = its;
  out["u_vectors"] = us;
  Json sols = Json::array();
  for (const NumericalSolution& s : numerical_solutions(pell, lo, hi)) sols.push_back(to_json(s));
  out["numerical_solutions"] = sols;
  out["presentation"] = presentation_json(presentation_report(cfg.n, *cfg.ell));
  return out;
}

Json cmd_numsol(const RunConfig& cfg) {
  if (!cfg.ell) fail("UsageError", "numsol needs --ell");
  Json out;
  out["v"] = to_string(MukaiVector::of(1, 0, -*cfg.ell));
  out["presentation"] = presentation_json(presentation_report(cfg.n, *cfg.ell));
  Json sols = Json::array();
  if (is_square_case(cfg.n, *cfg.ell)) {
    Context ctx = context_of(cfg);
    auto sol = line_codim0(MukaiVector::of(1, 0, -*cfg.ell), ctx);
    if (sol) sols.push_back(to_json(*sol));
  } else {
    PellContext pell = solve_generator(cfg.n, *cfg.ell);
    auto [lo, hi] = m_range_or(cfg, -2, 2);
    for (long m = lo; m <= hi; ++m) {
      Json j = to_json(numerical_solutions(pell, m, m).front());
      j["m"] = m;
      sols.push_back(j);
    }
  }
  out["numerical_solutions"] = sols;
  return out;
}

Json cmd_classify(const RunConfig& cfg) {
  Context ctx = context_of(cfg);
  MukaiVector v = target_vector(cfg);
  StabilityPoint pt(required_rat(cfg.s, "s"), required_rat(cfg.t2, "t2"));
  std::vector<Wall> walls;
  if (finite_case(v, ctx)) {
    walls = finite_walls(v, ctx, cfg.jobs);
  } else {
    std::optional<long> ell = pell_ell(v);
    if (!ell) fail("InfiniteWallSet", "classify supports finite wall sets and v = (1,0,-l)");
    auto [lo, hi] = m_range_or(cfg, -2, 0);
    walls = walls_in_range(solve_generator(ctx.n, *ell), lo, hi, cfg.jobs);
  }
  Json out;
  out["v"] = to_string(v);
  out["point"] = {{"s", to_json(pt.s)}, {"t2", to_json(pt.t_sq)}};
  out["report"] = to_json(classify_point(v, pt, walls, ctx));
  return out;
}

Json cmd_intervals(const RunConfig& cfg) {
  if (!cfg.ell) fail("UsageError", "intervals needs --ell");
  PellContext pell = solve_generator(cfg.n, *cfg.ell);
  Rat lambda = required_rat(cfg.lambda, "lambda");
  IntervalIndex idx = interval_index(pell, lambda);
  long m = cfg.m.value_or(idx.m);
  Json pieces = Json::array();
  for (const HalfOpen& h : interval(pell, m)) pieces.push_back({to_string(h.lo), to_string(h.hi)});
  Json out;
  out["lambda"] = to_json(lambda);
  out["epsilon"] = pell.epsilon;
  out["m"] = idx.m;
  out["starred"] = idx.starred;
  out["m_star"] = idx.m_star;
  out["interval"] = {{"m", m}, {"pieces", pieces}};
  out["verdict"] = m <= 0 ? Json(to_string(sheaf_verdict(pell, lambda, m))) : Json(nullptr);
  return out;
}

Json cmd_act(const RunConfig& cfg) {
  Context ctx = context_of(cfg);
  if (!cfg.g || !cfg.v) fail("UsageError", "act needs --g and --v");
  GMatrix g = parse_gmatrix(*cfg.g, ctx);
  MukaiVector v = parse_vector(*cfg.v);
  MukaiVector image = act_on_vector(v, g, ctx);
  return {{"g", to_json(g)}, {"v", to_string(v)}, {"result", to_string(image)}};
}

Json cmd_mobius(const RunConfig& cfg) {
  Context ctx = context_of(cfg);
  if (!cfg.g || !cfg.z) fail("UsageError", "mobius needs --g and --z");
  GMatrix g = parse_gmatrix(*cfg.g, ctx);
  QnComplex z = parse_point(*cfg.z, ctx);
  return {{"g", to_json(g)}, {"z", to_string(z)}, {"result", to_string(mobius(g, z, ctx))}};
}

Json cmd_wmax(const RunConfig& cfg) {
  Context ctx = context_of(cfg);
  MukaiVector v = target_vector(cfg);
  std::vector<Wall> walls;
  if (finite_case(v, ctx)) {
    walls = finite_walls(v, ctx, cfg.jobs);
  } else {
    std::optional<long> ell = pell_ell(v);
    if (!ell) fail("InfiniteWallSet", "wmax supports finite wall sets and v = (1,0,-l)");
    walls = fundamental_walls(solve_generator(ctx.n, *ell), cfg.jobs);
  }
  WMaxReport rep = w_max_report(v, walls, ctx);
  std::string p = to_string(v.d / Rat(v.r));
  return {{"v", to_string(v)},
          {"wall", to_json(rep.wall)},
          {"lambda1", to_string(rep.lambda1)},
          {"lambda2", to_string(rep.lambda2)},
          {"ranges", "lambda <= " + to_string(rep.lambda1) + " or " + to_string(rep.lambda2) + " <= lambda < " + p}};
}

Json cmd_verify(const RunConfig& cfg, RunResult& res) {
  Context ctx = context_of(cfg);
  MukaiVector v = target_vector(cfg);
  Json checks = Json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool good) {
    checks.push_back({{"check", name}, {"ok", good}});
    ok = ok && good;
  };
  auto record_json = [&](const Json& check) {
    checks.push_back(check);
    ok = ok && check["ok"].get<bool>();
  };
  WallSet ws = compute_walls(cfg, v, ctx);
  for (size_t i = 0; i < ws.walls.size(); ++i)
    for (size_t j = i + 1; j < ws.walls.size(); ++j)
      if (walls_intersect(ws.walls[i].shape, ws.walls[j].shape)) {
        record("disjoint " + to_string(ws.walls[i].shape) + " " + to_string(ws.walls[j].shape), false);
      }
  record("pairwise disjoint", ok);
  if (sign(v.r) != 0) {
    PencilData pd = pencil(v, ctx);
    bool all = std::all_of(ws.walls.begin(), ws.walls.end(), [&](const Wall& w) {
      const auto* c = std::get_if<Circle>(&w.shape);
      return !c || in_pencil(*c, pd);
    });
    record("pencil membership", all);
  }
  if (ws.cross_section && ws.mode != "finite") {
    record_json(oracle_check(search_line(v, *ws.cross_section, ctx, cfg.jobs),
                             brute_walls(v, *ws.cross_section, cfg.bound, ctx), cfg.bound));
  }
  if (ws.pell) {
    bool ids = true;
    for (long m = -3; m <= 3; ++m) {
      for (long k = -3; k <= 3; ++k) ids = ids && theta_identity(*ws.pell, m, k).signed_ok;
      ids = ids && remark_two_m(*ws.pell, m);
    }
    record("Psi matrix identities", ids);
  }
  if (!ok) res.code = 3;
  return {{"v", to_string(v)}, {"ok", ok}, {"checks", checks}};
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out += path + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::pair<long, long> parse_m_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) fail("ParseError", "m-range must look like lo..hi");
  try {
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (lo > hi) fail("DomainError", "m-range needs lo <= hi");
    return {lo, hi};
  } catch (const std::logic_error&) {
    fail("ParseError", "m-range must look like lo..hi");
  }
}

std::string render(const Json& j, const std::string& format) {
  if (format == "text") {
    std::string out;
    flatten(j, "", out);
    return out;
  }
  return j.dump(2) + "\n";
}

RunResult run(const RunConfig& cfg) {
  RunResult res;
  try {
    if (cfg.format != "json" && cfg.format != "text") fail("UsageError", "format must be json or text");
    if (cfg.jobs < 1) fail("UsageError", "--jobs must be at least 1");
    static const std::map<std::string, std::function<Json(const RunConfig&, RunResult&)>> table = {
        {"walls", cmd_walls},
        {"pell", [](const RunConfig& c, RunResult&) { return cmd_pell(c); }},
        {"numsol", [](const RunConfig& c, RunResult&) { return cmd_numsol(c); }},
        {"classify", [](const RunConfig& c, RunResult&) { return cmd_classify(c); }},
        {"intervals", [](const RunConfig& c, RunResult&) { return cmd_intervals(c); }},
        {"act", [](const RunConfig& c, RunResult&) { return cmd_act(c); }},
        {"mobius", [](const RunConfig& c, RunResult&) { return cmd_mobius(c); }},
        {"wmax", [](const RunConfig& c, RunResult&) { return cmd_wmax(c); }},
        {"verify", cmd_verify},
    };
    auto it = table.find(cfg.command);
    if (it == table.end()) fail("UsageError", "unknown command '" + cfg.command + "'");
    res.out = it->second(cfg, res);
  } catch (const Error& e) {
    res.code = e.invariant() ? 3 : 2;
    res.out = error_json(e.kind(), e.what());
    res.svg.reset();
  } catch (const std::exception& e) {
    res.code = 3;
    res.out = error_json("Internal", e.what());
    res.svg.reset();
  }
  return res;
}

}  // namespace bridgeland::cli
