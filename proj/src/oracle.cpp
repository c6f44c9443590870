#include "bridgeland/oracle.hpp"

#include <cmath>
#include <sstream>

namespace bridgeland {

void validate(const ScanConfig& cfg) {
  if (cfg.entry_bound < 1) fail("DomainError", "entry bound must be at least 1");
  if (!(cfg.grid > 0)) fail("DomainError", "grid step must be positive");
  if (!(cfg.tol > 0)) fail("DomainError", "tolerance must be positive");
}

Window parse_window(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) fail("ParseError", "window must be s_min:s_max:t_max");
  Window w{parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])};
  if (w.s_min >= w.s_max) fail("DomainError", "window needs s_min < s_max");
  if (sgn(w.t_max) <= 0) fail("DomainError", "window needs t_max > 0");
  return w;
}

std::vector<Wall> brute_walls(const MukaiVector& v, const Rat& s0, long bound, const Context& ctx) {
  if (bound < 1) fail("DomainError", "entry bound must be at least 1");
  std::vector<Wall> out;
  for (long r1 = -bound; r1 <= bound; ++r1)
    for (long d1 = -bound; d1 <= bound; ++d1)
      for (long a1 = -bound; a1 <= bound; ++a1) {
        auto w = wall_between(v, MukaiVector::of(r1, d1, a1), ctx);
        if (w && crosses_line(w->shape, s0)) out.push_back(*w);
      }
  return dedupe_walls(std::move(out), ctx);
}

namespace {

struct FloatCharge {
  double re;
  double im;
};

FloatCharge float_charge(const MukaiVector& v, double s, double t, double n) {
  double r = v.r.get_d(), d = v.d.get_d(), a = v.a.get_d();
  double db = d - r * s;
  double ab = a - 2 * n * d * s + n * r * s * s;
  return {-ab + n * r * t * t, 2 * n * db * t};
}

}  // namespace

std::vector<CloudPoint> float_align_scan(const MukaiVector& v, const MukaiVector& v1, const Window& window,
                                         const ScanConfig& cfg, const Context& ctx) {
  validate(cfg);
  if (!wall_between(v, v1, ctx)) return {};
  double s_min = window.s_min.get_d(), s_max = window.s_max.get_d(), t_max = window.t_max.get_d();
  long cols = static_cast<long>(std::floor((s_max - s_min) / cfg.grid + 1e-9)) + 1;
  long rows = static_cast<long>(std::floor(t_max / cfg.grid + 1e-9));
  double n = static_cast<double>(ctx.n);
  auto value = [&](long i, long j) {
    double s = s_min + i * cfg.grid, t = (j + 1) * cfg.grid;
    FloatCharge z = float_charge(v, s, t, n), z1 = float_charge(v1, s, t, n);
    double im = z1.im * z.re - z1.re * z.im;
    double scale = std::hypot(z.re, z.im) * std::hypot(z1.re, z1.im);
    return scale > 0 ? im / scale : 0.0;
  };
  std::vector<std::vector<double>> grid(rows, std::vector<double>(cols));
  for (long j = 0; j < rows; ++j)
    for (long i = 0; i < cols; ++i) grid[j][i] = value(i, j);
  std::vector<CloudPoint> cloud;
  for (long j = 0; j < rows; ++j)
    for (long i = 0; i < cols; ++i) {
      double f = grid[j][i];
      bool hit = std::fabs(f) < cfg.tol;
      if (i + 1 < cols && f * grid[j][i + 1] < 0) hit = true;
      if (j + 1 < rows && f * grid[j + 1][i] < 0) hit = true;
      if (hit) cloud.push_back({s_min + i * cfg.grid, (j + 1) * cfg.grid});
    }
  return cloud;
}

double distance_to_wall(const Shape& sh, const CloudPoint& p) {
  if (const auto* l = std::get_if<VLine>(&sh)) return std::fabs(p.s - l->s.get_d());
  const Circle& c = std::get<Circle>(sh);
  double rad = std::sqrt(c.radius_sq.get_d());
  return std::fabs(std::hypot(p.s - c.center.get_d(), p.t) - rad);
}

}  // namespace bridgeland
