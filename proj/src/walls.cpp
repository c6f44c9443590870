#include "bridgeland/walls.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

namespace bridgeland {

namespace {

int shape_rank(const Shape& sh) { return std::holds_alternative<VLine>(sh) ? 0 : 1; }

bool proportional(const MukaiVector& v, const MukaiVector& w) {
  Rat r(v.r), r1(w.r);
  return r * w.d == r1 * v.d && r * w.a == r1 * v.a && v.d * w.a == w.d * v.a;
}

}  // namespace

bool shape_less(const Shape& x, const Shape& y) {
  if (shape_rank(x) != shape_rank(y)) return shape_rank(x) < shape_rank(y);
  if (const auto* lx = std::get_if<VLine>(&x)) return lx->s < std::get<VLine>(y).s;
  const Circle& cx = std::get<Circle>(x);
  const Circle& cy = std::get<Circle>(y);
  if (cx.center != cy.center) return cx.center < cy.center;
  return cx.radius_sq < cy.radius_sq;
}

std::string to_string(const Shape& sh) {
  if (const auto* l = std::get_if<VLine>(&sh)) return "VLine(s=" + to_string(l->s) + ")";
  const Circle& c = std::get<Circle>(sh);
  return "Circle(center=" + to_string(c.center) + ", radius_sq=" + to_string(c.radius_sq) + ")";
}

bool wall_conditions(const MukaiVector& v, const MukaiVector& v1, const Context& ctx) {
  MukaiVector w = v - v1;
  if (sgn(square(v1, ctx)) < 0) return false;
  if (sgn(square(w, ctx)) < 0) return false;
  if (sgn(pairing(v1, w, ctx)) <= 0) return false;
  return !proportional(v, v1);
}

std::optional<Wall> wall_between(const MukaiVector& v, const MukaiVector& v1, const Context& ctx) {
  Rat sq = square(v, ctx);
  if (sgn(sq) <= 0) fail("DegenerateV", "walls need <v^2> > 0, got " + to_string(sq) + " for " + to_string(v));
  if (!wall_conditions(v, v1, ctx)) return std::nullopt;
  Rat n(ctx.n);
  Rat r(v.r), r1(v1.r);
  Shape shape;
  if (sgn(v.r) != 0) {
    Rat k = r * v1.d - r1 * v.d;
    if (sgn(k) == 0) {
      shape = VLine{v.d / r};
    } else {
      Rat center = (v1.a * r - v.a * r1) / (2 * n * k);
      Rat off = v.d / r - center;
      Rat rsq = off * off - sq / (2 * n * r * r);
      if (sgn(rsq) <= 0) return std::nullopt;
      shape = Circle{center, rsq};
    }
  } else {
    if (sgn(v1.r) == 0) return std::nullopt;
    Rat center = v.a / (2 * n * v.d);
    Rat off = center - v1.d / r1;
    Rat rsq = off * off - square(v1, ctx) / (2 * n * r1 * r1);
    if (sgn(rsq) <= 0) return std::nullopt;
    shape = Circle{center, rsq};
  }
  return Wall{shape, v1, false, std::nullopt};
}

PencilData pencil(const MukaiVector& v, const Context& ctx) {
  if (sgn(v.r) == 0) fail("RankZero", "the pencil needs r != 0");
  Rat sq = square(v, ctx);
  if (sgn(sq) <= 0) fail("DegenerateV", "the pencil needs <v^2> > 0");
  Rat r(v.r);
  return {v.d / r, sq / (2 * Rat(ctx.n) * r * r)};
}

bool in_pencil(const Circle& c, const PencilData& pd) {
  Rat off = c.center - pd.p;
  return c.radius_sq == off * off - pd.q;
}

bool witness_preferred(const MukaiVector& x, const MukaiVector& y, const Context& ctx) {
  Rat sx = square(x, ctx), sy = square(y, ctx);
  if (sx != sy) return sx < sy;
  Int ax = abs(x.r), ay = abs(y.r);
  if (ax != ay) return ax < ay;
  Rat dx = abs_rat(x.d), dy = abs_rat(y.d);
  if (dx != dy) return dx < dy;
  Rat bx = abs_rat(x.a), by = abs_rat(y.a);
  if (bx != by) return bx < by;
  return x < y;
}

std::vector<Wall> dedupe_walls(std::vector<Wall> walls, const Context& ctx) {
  std::vector<Wall> out;
  std::stable_sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) { return shape_less(a.shape, b.shape); });
  for (Wall& w : walls) {
    if (!out.empty() && out.back().shape == w.shape) {
      Wall& keep = out.back();
      if (witness_preferred(w.witness, keep.witness, ctx)) keep.witness = w.witness;
      keep.codim0 = keep.codim0 || w.codim0;
      if (!keep.label) keep.label = w.label;
      continue;
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool crosses_line(const Shape& sh, const Rat& s0) {
  if (const auto* l = std::get_if<VLine>(&sh)) return l->s == s0;
  const Circle& c = std::get<Circle>(sh);
  Rat off = s0 - c.center;
  return sgn(c.radius_sq - off * off) > 0;
}

bool on_wall(const Shape& sh, const StabilityPoint& pt) {
  if (const auto* l = std::get_if<VLine>(&sh)) return l->s == pt.s;
  const Circle& c = std::get<Circle>(sh);
  Rat off = pt.s - c.center;
  return off * off + pt.t_sq == c.radius_sq;
}

bool inside(const Circle& c, const StabilityPoint& pt) {
  Rat off = pt.s - c.center;
  return off * off + pt.t_sq < c.radius_sq;
}

bool walls_intersect(const Shape& x, const Shape& y) {
  const auto* lx = std::get_if<VLine>(&x);
  const auto* ly = std::get_if<VLine>(&y);
  if (lx && ly) return lx->s == ly->s;
  if (lx) return crosses_line(y, lx->s);
  if (ly) return crosses_line(x, ly->s);
  const Circle& c1 = std::get<Circle>(x);
  const Circle& c2 = std::get<Circle>(y);
  if (c1.center == c2.center) return c1.radius_sq == c2.radius_sq;
  // Subtracting the two equations leaves a linear equation in s.
  Rat s = (c1.radius_sq - c2.radius_sq - c1.center * c1.center + c2.center * c2.center) /
          (2 * (c2.center - c1.center));
  Rat off = s - c1.center;
  return sgn(c1.radius_sq - off * off) > 0;
}

bool disk_contains(const Circle& outer, const Circle& inner) {
  if (outer.radius_sq < inner.radius_sq) return false;
  Rat gap = inner.center - outer.center;
  Rat l = gap * gap - inner.radius_sq - outer.radius_sq;
  if (sgn(l) > 0) return false;
  return l * l >= 4 * inner.radius_sq * outer.radius_sq;
}

namespace {

struct LineSearch {
  const Context& ctx;
  MukaiVector v;  // sign-normalized so that D > 0
  int sigma;
  Rat s0;
  Rat D;
  Rat A;
  Int M;

  void emit(const MukaiVector& v1, std::vector<Wall>& out) const {
    std::optional<Wall> w = wall_between(v, v1, ctx);
    if (!w || !crosses_line(w->shape, s0)) return;
    w->witness = sigma > 0 ? v1 : -v1;
    out.push_back(*w);
  }

  void run_rank(const Int& r1, std::vector<Wall>& out) const {
    Rat n(ctx.n);
    if (sgn(r1) == 0) {
      if (sgn(v.r) == 0) return;
      Rat rr(v.r);
      // D1 = d1 with n d1^2 = m1 <= M.
      for (Int d1 = 1; Rat(d1) < D; ++d1) {
        Rat D1(d1);
        if (n * D1 * D1 > Rat(M)) break;
        Rat rest = D - D1;
        for (Int m2 = 0; m2 <= M; ++m2) {
          Rat a1s = (Rat(m2) - n * rest * rest + rr * A) / rr;
          Rat a1 = a1s + 2 * n * D1 * s0;
          if (!is_integer(a1)) continue;
          emit(MukaiVector(Int(0), D1, a1), out);
        }
      }
      return;
    }
    Rat rr1(r1);
    Rat base = rr1 * s0;
    Int d_lo = floor_rat(base) + 1;
    Int d_hi = ceil_rat(base + D) - 1;
    for (Int d1 = d_lo; d1 <= d_hi; ++d1) {
      // m1 = n d1^2 - r1 a1 in [0, M]
      Rat top = n * Rat(d1) * Rat(d1);
      Rat x = top / rr1;
      Rat y = (top - Rat(M)) / rr1;
      Rat lo = std::min(x, y), hi = std::max(x, y);
      for (Int a1 = ceil_rat(lo); Rat(a1) <= hi; ++a1) emit(MukaiVector(r1, Rat(d1), Rat(a1)), out);
    }
  }
};

}  // namespace

std::vector<Wall> search_line(const MukaiVector& v, const Rat& s0, const Context& ctx, int jobs) {
  if (!v.integral()) fail("NonIntegral", "wall enumeration needs an integral v, got " + to_string(v));
  Rat sq = square(v, ctx);
  if (sgn(sq) <= 0) fail("DegenerateV", "walls need <v^2> > 0");
  Rat D0 = v.d - Rat(v.r) * s0;
  if (sgn(D0) == 0) fail("BadCrossSection", "d - r*s0 vanishes at s0 = " + to_string(s0));
  int sigma = sgn(D0);
  MukaiVector vv = sigma > 0 ? v : -v;
  BetaData bd = beta_data(vv, s0, ctx);
  LineSearch ls{ctx, vv, sigma, s0, bd.d, bd.a, Int(Rat(sq / 2).get_num()) - 1};

  Rat n(ctx.n);
  Rat q0(s0.get_den());
  Rat head = n * ls.D * ls.D + Rat(ls.M);
  Int bound = floor_rat(head * q0 * q0);
  if (sgn(ls.A) != 0) bound = std::max(bound, Int(Int(abs(vv.r)) + floor_rat(head / abs_rat(ls.A))));

  std::vector<Int> ranks;
  for (Int r1 = -bound; r1 <= bound; ++r1) ranks.push_back(r1);

  jobs = std::max(1, jobs);
  std::vector<std::vector<Wall>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int j) {
    try {
      for (size_t i = j; i < ranks.size(); i += jobs) ls.run_rank(ranks[i], parts[j]);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Wall> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return dedupe_walls(std::move(all), ctx);
}

std::vector<Wall> enumerate_walls_on_line(const MukaiVector& v, const Rat& s0, const Context& ctx, int jobs) {
  if (!v.integral()) fail("NonIntegral", "wall enumeration needs an integral v, got " + to_string(v));
  if (sgn(square(v, ctx)) <= 0) fail("DegenerateV", "walls need <v^2> > 0");
  if (sgn(v.d - Rat(v.r) * s0) == 0) fail("BadCrossSection", "d - r*s0 vanishes at s0 = " + to_string(s0));
  return search_line(v, s0, ctx, jobs);
}

std::vector<Wall> vertical_walls(const MukaiVector& v, const Context& ctx) {
  if (!v.integral()) fail("NonIntegral", "wall enumeration needs an integral v, got " + to_string(v));
  if (sgn(square(v, ctx)) <= 0) fail("DegenerateV", "walls need <v^2> > 0");
  if (sgn(v.r) == 0) return {};
  int sigma = sgn(v.r);
  MukaiVector vv = sigma > 0 ? v : -v;
  Rat n(ctx.n);
  Rat rr(vv.r);
  Rat star = vv.d / rr;
  Rat A = beta_data(vv, star, ctx).a;
  std::vector<Wall> out;
  for (Int r1 = 0; r1 <= vv.r; ++r1) {
    Rat d1 = Rat(r1) * star;
    if (!is_integer(d1)) continue;
    Rat c = 2 * n * d1 * star - n * Rat(r1) * star * star;
    for (Int a1 = ceil_rat(A + c); Rat(a1) <= c; ++a1) {
      MukaiVector v1(r1, d1, Rat(a1));
      std::optional<Wall> w = wall_between(vv, v1, ctx);
      if (!w || !std::holds_alternative<VLine>(w->shape)) continue;
      w->witness = sigma > 0 ? v1 : -v1;
      out.push_back(*w);
    }
  }
  return dedupe_walls(std::move(out), ctx);
}

bool finite_case(const MukaiVector& v, const Context& ctx) {
  if (sgn(v.r) == 0) return true;
  return is_square(pencil(v, ctx).q);
}

std::vector<Wall> finite_walls(const MukaiVector& v, const Context& ctx, int jobs) {
  if (sgn(square(v, ctx)) <= 0) fail("DegenerateV", "walls need <v^2> > 0");
  std::vector<Wall> all;
  if (sgn(v.r) == 0) {
    all = search_line(v, v.a / (2 * Rat(ctx.n) * v.d), ctx, jobs);
  } else {
    PencilData pd = pencil(v, ctx);
    if (!is_square(pd.q)) fail("NotFinite", "the base points of the pencil are irrational");
    Rat root = sqrt_exact(pd.q);
    all = vertical_walls(v, ctx);
    for (const Rat& s0 : {Rat(pd.p - root), Rat(pd.p + root)}) {
      auto part = search_line(v, s0, ctx, jobs);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  all = dedupe_walls(std::move(all), ctx);
  tag_codim0(all, v, ctx);
  return all;
}

Wall codim0_wall(const PellContext& pell, long m) {
  Context ctx = pell.context();
  MukaiVector v = pell.v();
  std::vector<MukaiVector> pool;
  Shape shape;
  if (m == 0) {
    shape = VLine{Rat(0)};
    pool = {MukaiVector::of(1, 0, 0), rho()};
  } else {
    Rat foot1 = slope_b_over_a(pell, m);
    Rat foot2 = slope_la_over_b(pell, m);
    Rat half = (foot1 - foot2) / 2;
    shape = Circle{(foot1 + foot2) / 2, half * half};
    auto [u, u2] = u_vectors(pell, m);
    pool = {u, u2};
  }
  std::optional<MukaiVector> best;
  for (const MukaiVector& base : pool) {
    for (long k = 1; k <= pell.ell; ++k) {
      for (int sg : {1, -1}) {
        MukaiVector cand = base * Int(k * sg);
        std::optional<Wall> w = wall_between(v, cand, ctx);
        if (!w || !(w->shape == shape)) continue;
        if (!best || witness_preferred(cand, *best, ctx)) best = cand;
      }
    }
  }
  if (!best) broken("InvariantViolation", "no isotropic witness for C_" + std::to_string(m));
  return Wall{shape, *best, true, m};
}

std::vector<Wall> codim0_walls(const PellContext& pell, long m_lo, long m_hi) {
  std::vector<Wall> out;
  for (long m = m_lo; m <= m_hi; ++m) out.push_back(codim0_wall(pell, m));
  return out;
}

Rat fundamental_cross_section(const PellContext& pell) {
  // Every wall between C_0 and C_-1 surrounds C_-1, so it crosses both feet of C_-1.
  Rat foot1 = slope_b_over_a(pell, -1);
  Rat foot2 = slope_la_over_b(pell, -1);
  if (foot1.get_den() != foot2.get_den()) return foot1.get_den() < foot2.get_den() ? foot1 : foot2;
  return std::max(foot1, foot2);
}

std::vector<Wall> fundamental_walls(const PellContext& pell, int jobs) {
  Context ctx = pell.context();
  MukaiVector v = pell.v();
  Wall c0 = codim0_wall(pell, 0);
  Wall cm1 = codim0_wall(pell, -1);
  Rat s0 = fundamental_cross_section(pell);
  std::vector<Wall> between = enumerate_walls_on_line(v, s0, ctx, jobs);
  std::erase_if(between, [&](const Wall& w) { return w.shape == cm1.shape; });
  tag_codim0(between, v, ctx, &pell);
  between.push_back(c0);
  between.push_back(cm1);
  return dedupe_walls(std::move(between), ctx);
}

std::optional<long> is_codim0(const Wall& w, const PellContext& pell, long search_bound) {
  if (const auto* l = std::get_if<VLine>(&w.shape)) {
    if (sgn(l->s) == 0 && line_codim0(pell.v(), pell.context())) return 0;
    return std::nullopt;
  }
  const Circle& c = std::get<Circle>(w.shape);
  for (long k = 1; k <= search_bound; ++k) {
    for (long m : {-k, k}) {
      if (codim0_wall(pell, m).shape == Shape(c)) return m;
    }
  }
  return std::nullopt;
}

std::optional<NumericalSolution> line_codim0(const MukaiVector& v, const Context& ctx) {
  if (sgn(v.r) == 0 || !v.integral()) return std::nullopt;
  MukaiVector vv = sgn(v.r) > 0 ? v : -v;
  Rat k = vv.d / Rat(vv.r);
  if (!is_integer(k)) return std::nullopt;
  Rat n(ctx.n);
  MukaiVector u(Int(1), k, n * k * k);
  Rat a_rest = Rat(vv.r) * n * k * k - vv.a;
  if (sgn(a_rest) <= 0) return std::nullopt;
  NumericalSolution sol{u, rho(), vv.r, Int(a_rest.get_num())};
  if (!is_numerical_solution(sol, v, ctx)) return std::nullopt;
  return sol;
}

namespace {

MukaiVector primitive_isotropic(const Rat& lambda, const Context& ctx) {
  Int p = lambda.get_num(), q = lambda.get_den();
  Int r = q * q, d = p * q, a = Int(ctx.n) * p * p;
  Int g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return MukaiVector(r / g, Rat(d / g), Rat(a / g));
}

}  // namespace

std::optional<NumericalSolution> codim0_solution(const MukaiVector& v, const Circle& c, const Context& ctx) {
  if (!is_square(c.radius_sq)) return std::nullopt;
  Rat rad = sqrt_exact(c.radius_sq);
  MukaiVector u1 = primitive_isotropic(c.center - rad, ctx);
  MukaiVector u2 = primitive_isotropic(c.center + rad, ctx);
  if (pairing(u1, u2, ctx) != -1) return std::nullopt;
  Rat x = -pairing(v, u2, ctx);
  Rat y = -pairing(v, u1, ctx);
  if (!is_integer(x) || !is_integer(y)) return std::nullopt;
  Int xi(x.get_num()), yi(y.get_num());
  if (!(u1 * xi + u2 * yi == v)) return std::nullopt;
  NumericalSolution sol;
  if (sgn(xi) > 0 && sgn(yi) < 0)
    sol = {u1, u2, xi, -yi};
  else if (sgn(xi) < 0 && sgn(yi) > 0)
    sol = {u2, u1, yi, -xi};
  else
    return std::nullopt;
  if (!is_numerical_solution(sol, v, ctx)) return std::nullopt;
  return sol;
}

void tag_codim0(std::vector<Wall>& walls, const MukaiVector& v, const Context& ctx, const PellContext* pell,
                long search_bound) {
  for (Wall& w : walls) {
    bool hit;
    if (const auto* l = std::get_if<VLine>(&w.shape)) {
      hit = line_codim0(v, ctx).has_value() && sgn(v.r) != 0 && l->s == v.d / Rat(v.r);
    } else {
      hit = codim0_solution(v, std::get<Circle>(w.shape), ctx).has_value();
    }
    w.codim0 = hit;
    if (hit && pell && !w.label) w.label = is_codim0(w, *pell, search_bound);
  }
}

const char* to_string(ChamberReport::Kind k) {
  switch (k) {
    case ChamberReport::Kind::OnWall: return "OnWall";
    case ChamberReport::Kind::Gieseker: return "Gieseker";
    case ChamberReport::Kind::DualGieseker: return "DualGieseker";
    case ChamberReport::Kind::Bounded: return "Bounded";
  }
  return "?";
}

ChamberReport classify_point(const MukaiVector& v, const StabilityPoint& pt, const std::vector<Wall>& walls,
                             const Context&) {
  for (const Wall& w : walls)
    if (on_wall(w.shape, pt)) return {ChamberReport::Kind::OnWall, w, std::nullopt, std::nullopt};
  const Wall* outer = nullptr;
  for (const Wall& w : walls) {
    const auto* c = std::get_if<Circle>(&w.shape);
    if (!c || !inside(*c, pt)) continue;
    if (!outer || c->radius_sq < std::get<Circle>(outer->shape).radius_sq) outer = &w;
  }
  if (!outer) {
    Rat db = v.d - Rat(v.r) * pt.s;
    auto kind = sgn(db) > 0 ? ChamberReport::Kind::Gieseker : ChamberReport::Kind::DualGieseker;
    return {kind, std::nullopt, std::nullopt, std::nullopt};
  }
  const Circle& oc = std::get<Circle>(outer->shape);
  const Wall* inner = nullptr;
  for (const Wall& w : walls) {
    const auto* c = std::get_if<Circle>(&w.shape);
    if (!c || &w == outer || inside(*c, pt) || !disk_contains(oc, *c)) continue;
    if (!inner || c->radius_sq > std::get<Circle>(inner->shape).radius_sq) inner = &w;
  }
  ChamberReport rep{ChamberReport::Kind::Bounded, std::nullopt, std::nullopt, *outer};
  if (inner) rep.inner = *inner;
  return rep;
}

WMaxReport w_max_report(const MukaiVector& v, const std::vector<Wall>& walls, const Context&) {
  if (sgn(v.r) <= 0) fail("DomainError", "W^max needs rank > 0");
  Rat p = v.d / Rat(v.r);
  const Wall* best = nullptr;
  for (const Wall& w : walls) {
    const auto* c = std::get_if<Circle>(&w.shape);
    if (!c || c->center >= p) continue;
    if (!best || c->radius_sq > std::get<Circle>(best->shape).radius_sq) best = &w;
  }
  if (!best) fail("NoWalls", "no circle wall in the region r*s < d");
  const Circle& c = std::get<Circle>(best->shape);
  Surd root = Surd::sqrt_of(c.radius_sq);
  return {*best, QnNumber(c.center, -root.coef(), root.rad()), QnNumber(c.center, root.coef(), root.rad())};
}

}  // namespace bridgeland
