#include "bridgeland/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace bridgeland {

namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 40.0;
constexpr int kArcSteps = 720;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

struct Frame {
  double s_min, s_max, t_max, scale, height;

  double x(double s) const { return kMargin + (s - s_min) * scale; }
  double y(double t) const { return kMargin + (t_max - t) * scale; }
  bool in_s(double s) const { return s >= s_min - 1e-12 && s <= s_max + 1e-12; }
};

std::string label_of(const Rat& q) { return to_string(q); }

void polyline(std::ostringstream& out, const std::vector<std::pair<double, double>>& pts, const char* cls) {
  if (pts.size() < 2) return;
  out << "  <polyline class=\"" << cls << "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << fmt(pts[i].first) << "," << fmt(pts[i].second);
  out << "\"/>\n";
}

void draw_circle(std::ostringstream& out, const Frame& f, const Circle& c, const char* cls) {
  double cs = c.center.get_d(), rad = std::sqrt(c.radius_sq.get_d());
  std::vector<std::pair<double, double>> run;
  for (int k = 0; k <= kArcSteps; ++k) {
    double th = M_PI * k / kArcSteps;
    double s = cs + rad * std::cos(th), t = rad * std::sin(th);
    if (f.in_s(s) && t <= f.t_max + 1e-12) {
      run.emplace_back(f.x(s), f.y(t));
    } else {
      polyline(out, run, cls);
      run.clear();
    }
  }
  polyline(out, run, cls);
}

bool visible(const Frame& f, const Shape& sh) {
  if (const auto* l = std::get_if<VLine>(&sh)) return f.in_s(l->s.get_d());
  const Circle& c = std::get<Circle>(sh);
  double cs = c.center.get_d(), rad = std::sqrt(c.radius_sq.get_d());
  return cs + rad >= f.s_min && cs - rad <= f.s_max;
}

}  // namespace

std::string render_svg(const std::vector<Wall>& walls, const SvgOptions& opt) {
  Frame f;
  f.s_min = opt.window.s_min.get_d();
  f.s_max = opt.window.s_max.get_d();
  f.t_max = opt.window.t_max.get_d();
  f.scale = (kWidth - 2 * kMargin) / (f.s_max - f.s_min);
  f.height = f.t_max * f.scale + 2 * kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kWidth) << "\" height=\""
      << fmt(f.height) << "\" viewBox=\"0 0 " << fmt(kWidth) << " " << fmt(f.height) << "\">\n";
  if (!opt.title.empty()) out << "  <title>" << escape(opt.title) << "</title>\n";
  out << "  <style>.axis{stroke:#000;stroke-width:1}.wall{fill:none;stroke:#000;stroke-width:2}"
         ".codim0{fill:none;stroke:#1f4e9c;stroke-width:2.5}.cut{stroke:#666;stroke-width:1;stroke-dasharray:6,4}"
         ".tick{stroke:#000;stroke-width:1}text{font-family:serif;font-size:13px}</style>\n";

  // s-axis and, when visible, the t-axis.
  out << "  <line class=\"axis\" x1=\"" << fmt(f.x(f.s_min)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\""
      << fmt(f.x(f.s_max)) << "\" y2=\"" << fmt(f.y(0)) << "\"/>\n";
  out << "  <text x=\"" << fmt(f.x(f.s_max) + 6) << "\" y=\"" << fmt(f.y(0) + 4) << "\">s</text>\n";
  if (f.in_s(0)) {
    out << "  <line class=\"axis\" x1=\"" << fmt(f.x(0)) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\"" << fmt(f.x(0))
        << "\" y2=\"" << fmt(f.y(f.t_max)) << "\"/>\n";
    out << "  <text x=\"" << fmt(f.x(0) + 6) << "\" y=\"" << fmt(f.y(f.t_max) + 4) << "\">t</text>\n";
  }

  for (const Wall& w : walls) {
    if (!visible(f, w.shape)) continue;
    const char* cls = w.codim0 ? "codim0" : "wall";
    if (const auto* l = std::get_if<VLine>(&w.shape)) {
      double xs = f.x(l->s.get_d());
      out << "  <line class=\"" << cls << "\" x1=\"" << fmt(xs) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\"" << fmt(xs)
          << "\" y2=\"" << fmt(f.y(f.t_max)) << "\"/>\n";
    } else {
      draw_circle(out, f, std::get<Circle>(w.shape), cls);
    }
  }

  if (opt.cross_section && f.in_s(opt.cross_section->get_d())) {
    double xs = f.x(opt.cross_section->get_d());
    out << "  <line class=\"cut\" x1=\"" << fmt(xs) << "\" y1=\"" << fmt(f.y(0)) << "\" x2=\"" << fmt(xs)
        << "\" y2=\"" << fmt(f.y(f.t_max)) << "\"/>\n";
    out << "  <text x=\"" << fmt(xs + 4) << "\" y=\"" << fmt(f.y(f.t_max) + 14) << "\">s="
        << escape(label_of(*opt.cross_section)) << "</text>\n";
  }

  // Ticks, keyed by value so repeated abscissae are drawn once.
  std::map<Rat, std::string> s_ticks;
  std::map<Rat, std::string> t_ticks;
  for (const Wall& w : opt.tick_walls) {
    const auto* c = std::get_if<Circle>(&w.shape);
    if (!c) continue;
    s_ticks[c->center] = label_of(c->center);
    if (is_square(c->radius_sq)) {
      Rat rad = sqrt_exact(c->radius_sq);
      s_ticks[c->center - rad] = label_of(c->center - rad);
      s_ticks[c->center + rad] = label_of(c->center + rad);
      t_ticks[rad] = label_of(rad);
    }
  }
  for (const auto& [val, text] : s_ticks) {
    double s = val.get_d();
    if (!f.in_s(s)) continue;
    out << "  <line class=\"tick\" x1=\"" << fmt(f.x(s)) << "\" y1=\"" << fmt(f.y(0) - 5) << "\" x2=\"" << fmt(f.x(s))
        << "\" y2=\"" << fmt(f.y(0) + 5) << "\"/>\n";
    out << "  <text x=\"" << fmt(f.x(s) - 8) << "\" y=\"" << fmt(f.y(0) + 20) << "\">" << escape(text) << "</text>\n";
  }
  if (f.in_s(0)) {
    for (const auto& [val, text] : t_ticks) {
      double t = val.get_d();
      if (t > f.t_max) continue;
      out << "  <line class=\"tick\" x1=\"" << fmt(f.x(0) - 5) << "\" y1=\"" << fmt(f.y(t)) << "\" x2=\""
          << fmt(f.x(0) + 5) << "\" y2=\"" << fmt(f.y(t)) << "\"/>\n";
      out << "  <text x=\"" << fmt(f.x(0) + 8) << "\" y=\"" << fmt(f.y(t) + 4) << "\">" << escape(text) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bridgeland
