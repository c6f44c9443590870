#include "bridgeland/fmgroup.hpp"

#include <cctype>

namespace bridgeland {

namespace {

// x / sqrt(k) as an integer, if it is one.
std::optional<Int> integer_over_sqrt(const Surd& x, long k) {
  if (x.is_zero()) return Int(0);
  Surd scaled = surd_mul(x, Surd(Rat(1), Int(k)));
  if (!scaled.is_rational()) return std::nullopt;
  Rat q = scaled.coef() / Rat(k);
  if (!is_integer(q)) return std::nullopt;
  return Int(q.get_num());
}

QnNumber in_field(const Surd& x, const Context& ctx) { return QnNumber::from_surd(x, ctx.n_int()); }

}  // namespace

std::optional<GMatrix> g_membership(const SurdMat2& m, const Context& ctx) {
  for (long r = 1; r <= ctx.n; ++r) {
    if (ctx.n % r != 0) continue;
    long s = ctx.n / r;
    if (!integer_over_sqrt(m.a, r) || !integer_over_sqrt(m.d, r) || !integer_over_sqrt(m.b, s) ||
        !integer_over_sqrt(m.c, s))
      continue;
    // The pattern makes ad and bc rational, so the determinant is well defined.
    Surd det = m.det();
    if (!det.is_rational() || (det.coef() != 1 && det.coef() != -1)) return std::nullopt;
    return GMatrix{m, r, s, det.coef() == 1 ? 1 : -1};
  }
  return std::nullopt;
}

GMatrix to_g(const SurdMat2& m, const Context& ctx) {
  auto g = g_membership(m, ctx);
  if (!g) fail("NotInGHat", to_string(m) + " is not in the group for n = " + std::to_string(ctx.n));
  return *g;
}

GMatrix g_mul(const GMatrix& x, const GMatrix& y, const Context& ctx) {
  auto g = g_membership(x.m * y.m, ctx);
  if (!g) broken("InvariantViolation", "product left the group");
  return *g;
}

GMatrix g_inv(const GMatrix& x, const Context& ctx) {
  Rat e(x.det);
  SurdMat2 inv{surd_scale(x.m.d, e), surd_scale(x.m.b, -e), surd_scale(x.m.c, -e), surd_scale(x.m.a, e)};
  auto g = g_membership(inv, ctx);
  if (!g) broken("InvariantViolation", "inverse left the group");
  return *g;
}

GMatrix delta(const Context& ctx) { return to_g({Surd(Rat(1)), Surd(), Surd(), Surd(Rat(-1))}, ctx); }

SurdMat2 swap_diagonal(const SurdMat2& m) { return {m.d, m.b, m.c, m.a}; }

MukaiVector act_on_vector(const MukaiVector& v, const GMatrix& g, const Context& ctx) {
  if (!v.integral()) fail("NonIntegral", "the action needs an integral vector, got " + to_string(v));
  Surd off = surd_scale(Surd(Rat(1), ctx.n_int()), v.d);
  SurdMat2 iota{Surd(Rat(v.r)), off, off, Surd(v.a)};
  SurdMat2 out = g.m.transpose() * iota * g.m;
  if (!(out.b == out.c) || !out.a.is_rational() || !out.d.is_rational())
    broken("IntegralityViolation", "g^T iota(v) g is not of the Sym2 shape");
  Rat d = surd_div_sqrt(out.b, ctx.n_int());
  Rat r = out.a.coef();
  if (!is_integer(r) || !is_integer(d) || !is_integer(out.d.coef()))
    broken("IntegralityViolation", to_string(v) + " . " + to_string(g.m) + " is not integral");
  return MukaiVector(Int(r.get_num()), d, out.d.coef());
}

GMatrix theta_phi_convert(const GMatrix& g, MatrixConvention conv, const Context& ctx) {
  const SurdMat2& m = g.m;
  switch (conv) {
    case MatrixConvention::Reverse: return to_g(swap_diagonal(m), ctx);
    case MatrixConvention::ReverseDual: return to_g({m.d, -m.b, -m.c, m.a}, ctx);
    case MatrixConvention::Dual: return to_g({m.a, -m.b, -m.c, m.d}, ctx);
  }
  return g;
}

QnComplex mobius(const GMatrix& g, const QnComplex& z, const Context& ctx) {
  if (z.im().sign() <= 0) fail("LowerHalfPlane", "z must lie in the upper half-plane");
  // Scale by sqrt(r) so every entry lies in Q(sqrt(n)).
  Surd k(Rat(1), Int(g.r));
  QnNumber zero = QnNumber::rational(Rat(0), ctx.n_int());
  QnComplex a(in_field(g.m.a * k, ctx), zero), b(in_field(g.m.b * k, ctx), zero);
  QnComplex c(in_field(g.m.c * k, ctx), zero), d(in_field(g.m.d * k, ctx), zero);
  QnComplex w = g.det > 0 ? z : z.conj();
  QnComplex out = (a * w + b) / (c * w + d);
  if (out.im().sign() <= 0) broken("LowerHalfPlane", "the image left the upper half-plane");
  return out;
}

bool charge_compat_check(const GMatrix& g, const MukaiVector& v, const QnComplex& z, const Context& ctx,
                         bool negative_control) {
  if (g.det != 1) fail("DomainError", "charge compatibility is stated for determinant +1");
  GMatrix acting = negative_control ? g : to_g(swap_diagonal(g.m), ctx);
  MukaiVector image = -act_on_vector(v, acting, ctx);
  QnComplex gz = mobius(g, z, ctx);
  QnNumber zero = QnNumber::rational(Rat(0), ctx.n_int());
  QnComplex cc(in_field(g.m.c * g.m.c, ctx), zero);
  QnComplex cd(in_field(surd_scale(g.m.c * g.m.d, Rat(2)), ctx), zero);
  QnComplex dd(in_field(g.m.d * g.m.d, ctx), zero);
  QnComplex zeta = -(cc * z * z + cd * z + dd);
  return zeta * charge_at(image, gz, ctx) == charge_at(v, z, ctx);
}

FMDescriptor psi_map(const PellContext& pell, long m) {
  Context ctx = pell.context();
  SurdMat2 mat = generator_power(pell, -m) * delta(ctx).m * generator_power(pell, m);
  int shift = m < 0 ? 1 : (m > 0 ? -1 : 0);
  return {to_g(mat, ctx), true, shift, m};
}

Wall psi_apply_to_wall(const FMDescriptor& psi, const Wall& w, const PellContext& pell) {
  Context ctx = pell.context();
  MukaiVector v = pell.v();
  MukaiVector image_v = act_on_vector(v, psi.matrix, ctx);
  MukaiVector witness = act_on_vector(w.witness, psi.matrix, ctx);
  if (image_v == -v)
    witness = -witness;
  else if (!(image_v == v))
    broken("InvariantViolation", "Psi does not fix v up to sign");
  std::optional<Wall> out = wall_between(v, witness, ctx);
  if (!out) broken("InvariantViolation", "the image of a wall witness defines no wall");
  out->codim0 = w.codim0;
  if (w.label) out->label = 2 * psi.m - *w.label;
  return *out;
}

ThetaIdentity theta_identity(const PellContext& pell, long m, long k) {
  Context ctx = pell.context();
  SurdMat2 theta = psi_map(pell, m).matrix.m;
  SurdMat2 lhs = generator_power(pell, m + k) * theta;
  SurdMat2 rhs = delta(ctx).m * generator_power(pell, m - k);
  bool flip = pell.epsilon == -1 && (k % 2 != 0);
  return {lhs == rhs, lhs == rhs || lhs == -rhs, lhs == (flip ? -rhs : rhs)};
}

bool remark_two_m(const PellContext& pell, long m) {
  Iterate it = iterate(pell, m);
  Rat e = (pell.epsilon == -1 && m % 2 != 0) ? Rat(-1) : Rat(1);
  Surd la = surd_scale(it.a, Rat(pell.ell));
  SurdMat2 t{it.b, la, surd_scale(it.a, e), surd_scale(it.b, e)};
  SurdMat2 prod = swap_diagonal(t) * t;
  SurdMat2 target = generator_power(pell, 2 * m);
  return prod == target || prod == -target;
}

std::vector<Wall> walls_in_range(const PellContext& pell, long m_lo, long m_hi, int jobs) {
  Context ctx = pell.context();
  std::vector<Wall> out = codim0_walls(pell, m_lo, m_hi);
  std::vector<Wall> base;
  for (const Wall& w : fundamental_walls(pell, jobs))
    if (!w.codim0) base.push_back(w);
  FMDescriptor psi0 = psi_map(pell, 0);
  // Strip between C_h and C_{h-1}.
  for (long h = m_lo + 1; h <= m_hi; ++h) {
    for (const Wall& w : base) {
      if (h == 0) {
        out.push_back(w);
      } else if (h % 2 == 0) {
        out.push_back(psi_apply_to_wall(psi_map(pell, h / 2), psi_apply_to_wall(psi0, w, pell), pell));
      } else {
        out.push_back(psi_apply_to_wall(psi_map(pell, (h - 1) / 2), w, pell));
      }
    }
  }
  return dedupe_walls(std::move(out), ctx);
}

std::pair<Rat, Rat> param_transform(const Rat& lambda, const Int& r1, const Rat& s, const Rat& t_sq,
                                    const Context& ctx) {
  if (sgn(r1) == 0) fail("DomainError", "r1 must be nonzero");
  Rat gap = lambda - s;
  Rat q = gap * gap + t_sq;
  if (sgn(q) == 0) fail("SamePoint", "(s, t) coincides with (lambda, 0)");
  Rat scale = Rat(abs(r1)) * Rat(ctx.n) * q;
  return {gap / scale, t_sq / (scale * scale)};
}

bool param_transform_matches_mobius(const Rat& lambda, const Int& r1, const Rat& s, const Rat& t_sq,
                                    const Context& ctx) {
  auto [s2, t2] = param_transform(lambda, r1, s, t_sq, ctx);
  Surd t = Surd::sqrt_of(t_sq);
  Int rad = t.rad();
  QnComplex w(QnNumber::rational(s, rad), QnNumber(Rat(0), t.coef(), rad));
  QnComplex lam(QnNumber::rational(lambda, rad), QnNumber::rational(Rat(0), rad));
  QnComplex k(QnNumber::rational(Rat(abs(r1)) * Rat(ctx.n), rad), QnNumber::rational(Rat(0), rad));
  QnComplex one(QnNumber::rational(Rat(1), rad), QnNumber::rational(Rat(0), rad));
  QnComplex image = one / (k * (lam - w));
  if (!image.re().is_rational() || image.re().u() != s2) return false;
  QnNumber im2 = image.im() * image.im();
  return im2.is_rational() && im2.u() == t2 && image.im().sign() > 0;
}

const char* to_string(Side s) {
  switch (s) {
    case Side::Inside: return "inside";
    case Side::Boundary: return "boundary";
    case Side::Outside: return "outside";
  }
  return "?";
}

HalfPlaneCheck half_plane_image_check(const MukaiVector& v, const Rat& lambda, const Int& r1,
                                      const StabilityPoint& pt, const Context& ctx) {
  BetaData g = beta_data(v, lambda, ctx);
  if (sgn(g.d) == 0) fail("DegenerateGamma", "d_gamma vanishes at lambda = " + to_string(lambda));
  Rat n(ctx.n);
  Rat gap = pt.s - lambda;
  Rat disk = gap * gap + pt.t_sq - gap * g.a / (g.d * n);
  auto [s2, t2] = param_transform(lambda, r1, pt.s, pt.t_sq, ctx);
  Rat image = 1 + s2 * Rat(abs(r1)) * g.a / g.d;
  if (disk != (gap * gap + pt.t_sq) * image) broken("InvariantViolation", "disk and half-plane forms disagree");
  auto side = [](const Rat& x) { return sgn(x) < 0 ? Side::Inside : (sgn(x) == 0 ? Side::Boundary : Side::Outside); };
  Side a = side(disk), b = side(image);
  return {a, b, a == b};
}

bool gamma0_check(const GMatrix& g, const Context& ctx) {
  if (g.det != 1) return false;
  long n = ctx.n;
  auto whole = [](const Surd& x) -> std::optional<Int> {
    if (!x.is_rational() || !is_integer(x.coef())) return std::nullopt;
    return Int(x.coef().get_num());
  };
  // diag(sqrt n, 1)^{-1} g diag(sqrt n, 1) = (a, b / sqrt n; c sqrt n, d)
  auto a = whole(g.m.a);
  auto d = whole(g.m.d);
  auto b = integer_over_sqrt(g.m.b, n);
  auto c = whole(g.m.c * Surd(Rat(1), Int(n)));
  if (!a || !b || !c || !d) return false;
  if (*c % n != 0) return false;
  return *a * *d - *b * *c == 1;
}

GMatrix parse_gmatrix(const std::string& text, const Context& ctx) {
  std::string rows[2];
  size_t semi = text.find(';');
  if (semi == std::string::npos) fail("ParseError", "matrix must look like 'a,b;c,d'");
  rows[0] = text.substr(0, semi);
  rows[1] = text.substr(semi + 1);
  Surd e[4];
  for (int i = 0; i < 2; ++i) {
    size_t comma = rows[i].find(',');
    if (comma == std::string::npos) fail("ParseError", "matrix must look like 'a,b;c,d'");
    e[2 * i] = parse_surd(rows[i].substr(0, comma));
    e[2 * i + 1] = parse_surd(rows[i].substr(comma + 1));
  }
  return to_g({e[0], e[1], e[2], e[3]}, ctx);
}

QnComplex parse_point(const std::string& raw, const Context& ctx) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.empty()) fail("ParseError", "empty point");
  Rat re(0), im(0);
  if (text.back() != 'i') {
    re = parse_rat(text);
  } else {
    std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one.
    size_t cut = std::string::npos;
    for (size_t i = body.size(); i-- > 1;)
      if (body[i] == '+' || body[i] == '-') {
        cut = i;
        break;
      }
    std::string re_part = cut == std::string::npos ? "" : body.substr(0, cut);
    std::string im_part = cut == std::string::npos ? body : body.substr(cut);
    if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
    if (im_part.empty() || im_part == "+")
      im = 1;
    else if (im_part == "-")
      im = -1;
    else
      im = parse_rat(im_part[0] == '+' ? im_part.substr(1) : im_part);
    if (!re_part.empty()) re = parse_rat(re_part);
  }
  return QnComplex(QnNumber::rational(re, ctx.n_int()), QnNumber::rational(im, ctx.n_int()));
}

}  // namespace bridgeland
