#include "bridgeland/pell.hpp"

#include <algorithm>

namespace bridgeland {

SurdMat2 PellMatrix::matrix(long ell) const { return {y, surd_scale(x, Rat(ell)), x, y}; }

bool is_square_case(long n, long ell) { return is_square(Int(Int(n) * Int(ell))); }

namespace {

struct Candidate {
  long r;
  long s;
  Int a;
  Int b;
  int eps;

  Int big_y() const { return b * b * Int(s); }
  PellMatrix matrix() const { return {Surd(Rat(a), Int(r)), Surd(Rat(b), Int(s))}; }
};

// Compare phi = y + x sqrt(l) of two units; phi = sqrt(Y) + sqrt(Y - eps) with Y = y^2.
int compare_phi(const Candidate& c1, const Candidate& c2) {
  Int y1 = c1.big_y();
  Int y2 = c2.big_y();
  if (y1 == y2) return c1.eps == c2.eps ? 0 : (c1.eps > c2.eps ? -1 : 1);
  bool swapped = y1 > y2;
  const Candidate& lo = swapped ? c2 : c1;
  const Candidate& hi = swapped ? c1 : c2;
  int res;
  if (hi.big_y() - lo.big_y() >= 2 || lo.eps == 1 || hi.eps == -1) {
    res = -1;
  } else {
    // sqrt(Y) + sqrt(Y+1) on both sides
    res = 0;
  }
  return swapped ? -res : res;
}

// Strict preference: smaller phi, then eps = +1, then smaller r.
bool better(const Candidate& c1, const Candidate& c2) {
  int c = compare_phi(c1, c2);
  if (c != 0) return c < 0;
  if (c1.eps != c2.eps) return c1.eps > c2.eps;
  return c1.r < c2.r;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long r = 1; r <= n; ++r)
    if (n % r == 0) out.push_back(r);
  return out;
}

void scan(long n, long ell, long a_from, long a_to, std::optional<Candidate>& best, long only_r = 0) {
  for (long r : divisors(n)) {
    if (only_r != 0 && r != only_r) continue;
    long s = n / r;
    for (long a = a_from; a <= a_to; ++a) {
      for (int eps : {1, -1}) {
        Int t = Int(ell) * Int(a) * Int(a) * Int(r) + eps;
        if (sgn(t) <= 0 || t % s != 0) continue;
        Int q = t / s;
        if (!is_square(q)) continue;
        Candidate c{r, s, Int(a), isqrt(q), eps};
        if (!best || better(c, *best)) best = c;
      }
    }
  }
}

Candidate candidate_of(const PellMatrix& p, long n, long ell) {
  // x = a sqrt(r), y = b sqrt(s) up to square factors moved into the coefficient.
  for (long r : divisors(n)) {
    long s = n / r;
    Surd xr = surd_mul(p.x, Surd(Rat(1), Int(r)));
    Surd ys = surd_mul(p.y, Surd(Rat(1), Int(s)));
    if (!xr.is_rational() || !ys.is_rational()) continue;
    Rat aa = xr.coef() / Rat(r);
    Rat bb = ys.coef() / Rat(s);
    if (!is_integer(aa) || !is_integer(bb)) continue;
    Rat eps = p.y.square() - Rat(ell) * p.x.square();
    return {r, s, Int(aa.get_num()), Int(bb.get_num()), eps == 1 ? 1 : -1};
  }
  broken("InvariantViolation", "Pell matrix without the a*sqrt(r), b*sqrt(s) shape");
}

}  // namespace

std::pair<Int, Int> fundamental_unit(const Int& D) {
  if (sgn(D) <= 0 || is_square(D)) fail("SquareCase", "fundamental unit needs a non-square D > 0");
  Int a0 = isqrt(D);
  Int m = 0, d = 1, a = a0;
  Int p_prev = 1, p = a0;
  Int q_prev = 0, q = 1;
  for (int guard = 0; guard < 1000000; ++guard) {
    Int nrm = p * p - D * q * q;
    if (nrm == 1 || nrm == -1) return {p, q};
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    Int p_next = a * p + p_prev;
    Int q_next = a * q + q_prev;
    p_prev = p;
    p = p_next;
    q_prev = q;
    q = q_next;
  }
  broken("InvariantViolation", "continued fraction did not close");
}

std::optional<PellMatrix> generator_brute_force(long n, long ell, long cap) {
  std::optional<Candidate> best;
  long bound = 8;
  long done = 0;
  while (!best) {
    if (done >= cap) return std::nullopt;
    long upto = std::min(bound, cap);
    scan(n, ell, done + 1, upto, best);
    done = upto;
    bound *= 2;
  }
  // Any better candidate has l*a^2*r - 1 <= Y_best + 1.
  Int y_best = best->big_y();
  for (long r : divisors(n)) {
    Int lim = isqrt((y_best + 2) / Int(ell * r)) + 1;
    if (lim > done) scan(n, ell, done + 1, lim.get_si(), best, r);
  }
  return best->matrix();
}

PellMatrix generator_from_unit(long n, long ell) {
  Int D = Int(n) * Int(ell);
  auto [X, Y] = fundamental_unit(D);
  std::optional<Candidate> best;
  for (long r : divisors(n)) {
    long s = n / r;
    for (int eps : {1, -1}) {
      Int bs2 = X + eps;
      Int arl2 = X - eps;
      if (bs2 % 2 != 0 || arl2 % 2 != 0) continue;
      bs2 /= 2;
      arl2 /= 2;
      if (sgn(bs2) <= 0 || sgn(arl2) <= 0) continue;
      if (bs2 % s != 0 || arl2 % Int(r * ell) != 0) continue;
      Int b2 = bs2 / s;
      Int a2 = arl2 / Int(r * ell);
      if (!is_square(b2) || !is_square(a2)) continue;
      Int a = isqrt(a2), b = isqrt(b2);
      if (2 * a * b != Y) continue;
      Candidate c{r, s, a, b, eps};
      if (!best || better(c, *best)) best = c;
    }
  }
  if (best) return best->matrix();
  // The unit itself: X + Y sqrt(l n) = X*sqrt(1) + (Y sqrt(n)) sqrt(l).
  return {Surd(Rat(Y), Int(n)), Surd(Rat(X))};
}

PellContext solve_generator(long n, long ell) {
  if (n < 1 || ell < 1) fail("DomainError", "need n >= 1 and l >= 1");
  if (is_square_case(n, ell)) fail("SquareCase", "sqrt(l*n) is an integer; the wall set is finite");
  std::optional<PellMatrix> gen = generator_brute_force(n, ell, 1000000);
  PellMatrix via_unit = generator_from_unit(n, ell);
  if (!gen) {
    gen = via_unit;
  } else {
    Candidate c1 = candidate_of(*gen, n, ell);
    Candidate c2 = candidate_of(via_unit, n, ell);
    if (compare_phi(c1, c2) != 0) broken("InvariantViolation", "brute-force and unit generators disagree");
    gen = better(c1, c2) || compare_phi(c1, c2) == 0 ? c1.matrix() : c2.matrix();
  }
  PellContext ctx{n, ell, *gen, 0, std::nullopt};
  Rat eps = gen->y.square() - Rat(ell) * gen->x.square();
  if (eps != 1 && eps != -1) broken("InvariantViolation", "generator has norm " + to_string(eps));
  ctx.epsilon = eps == 1 ? 1 : -1;
  // phi^2 = y^2 + l x^2 + 2xy sqrt(l) must lie in Z + Z sqrt(l n).
  Rat sq = gen->y.square() + Rat(ell) * gen->x.square();
  Surd cross = surd_scale(surd_mul(gen->x, gen->y), Rat(2));
  if (!is_integer(sq) || !is_integer(surd_div_sqrt(cross, Int(n))))
    broken("InvariantViolation", "generator squared leaves Z[sqrt(l n)]");
  if (ell == 1) ctx.torsion = PellMatrix{Surd(Rat(1)), Surd()};
  return ctx;
}

SurdMat2 generator_power(const PellContext& ctx, long m) {
  SurdMat2 base = ctx.generator_matrix();
  if (m < 0) {
    // A^{-1} = eps * (y, -l x; -x, y)
    Rat e(ctx.epsilon);
    base = {surd_scale(base.d, e), surd_scale(base.b, -e), surd_scale(base.c, -e), surd_scale(base.a, e)};
    m = -m;
  }
  SurdMat2 out = SurdMat2::identity();
  while (m > 0) {
    if (m & 1) out = out * base;
    base = base * base;
    m >>= 1;
  }
  return out;
}

Iterate iterate(const PellContext& ctx, long m) {
  SurdMat2 p = generator_power(ctx, m < 0 ? -m : m);
  if (!(p.a == p.d) || !(p.b == surd_scale(p.c, Rat(ctx.ell))))
    broken("InvariantViolation", "power of the generator left the P(x,y) family");
  Iterate it{m, p.c, p.a};
  if (m < 0) {
    Rat sgnm = (ctx.epsilon == -1 && (-m) % 2 == 1) ? Rat(-1) : Rat(1);
    it.a = surd_scale(p.c, -sgnm);
    it.b = surd_scale(p.a, sgnm);
  }
  return it;
}

MukaiVector isotropic_from_row(const Surd& a, const Surd& b, const Context& ctx) {
  Rat r = a.square();
  Rat d = surd_div_sqrt(surd_mul(a, b), ctx.n_int());
  Rat z = b.square();
  if (!is_integer(r) || !is_integer(d) || !is_integer(z))
    broken("IntegralityViolation", "row (" + to_string(a) + ", " + to_string(b) + ") gives a non-integral class");
  return MukaiVector(Int(r.get_num()), d, z);
}

std::pair<MukaiVector, MukaiVector> u_vectors(const PellContext& ctx, long m) {
  Context c = ctx.context();
  Iterate it = iterate(ctx, m);
  MukaiVector u = isotropic_from_row(it.a, it.b, c);
  Rat l(ctx.ell);
  MukaiVector u2(Int(it.b.square().get_num()), l * u.d, l * l * Rat(u.r));
  return {u, u2};
}

Rat slope_b_over_a(const PellContext& ctx, long m) {
  Iterate it = iterate(ctx, m);
  if (it.a.is_zero()) fail("DomainError", "b_0/a_0 is infinite");
  return surd_div_sqrt(surd_mul(it.a, it.b), Int(ctx.n)) / it.a.square();
}

Rat slope_la_over_b(const PellContext& ctx, long m) {
  Iterate it = iterate(ctx, m);
  return Rat(ctx.ell) * surd_div_sqrt(surd_mul(it.a, it.b), Int(ctx.n)) / it.b.square();
}

MukaiVector row_orbit(const PellContext& ctx, const Surd& seed_a, const Surd& seed_b, long k) {
  SurdMat2 p = generator_power(ctx, k + 1);
  Surd a = seed_a * p.a + seed_b * p.c;
  Surd b = seed_a * p.b + seed_b * p.d;
  return isotropic_from_row(a, b, ctx.context());
}

bool is_numerical_solution(const NumericalSolution& sol, const MukaiVector& v, const Context& ctx) {
  if (sgn(sol.l1) <= 0 || sgn(sol.l2) <= 0) return false;
  if ((sol.l1 - 1) * (sol.l2 - 1) != 0) return false;
  if (!is_isotropic(sol.v1, ctx) || !is_isotropic(sol.v2, ctx)) return false;
  if (!is_positive(sol.v1) || !is_positive(sol.v2)) return false;
  if (pairing(sol.v1, sol.v2, ctx) != -1) return false;
  MukaiVector combo = sol.v1 * sol.l1 - sol.v2 * sol.l2;
  return combo == v || -combo == v;
}

std::vector<NumericalSolution> numerical_solutions(const PellContext& ctx, long m_lo, long m_hi) {
  Context c = ctx.context();
  std::vector<NumericalSolution> out;
  for (long m = m_lo; m <= m_hi; ++m) {
    NumericalSolution sol;
    if (m == 0) {
      sol = {MukaiVector::of(1, 0, 0), rho(), Int(1), Int(ctx.ell)};
    } else {
      auto [u, u2] = u_vectors(ctx, m);
      sol = {u, u2, Int(ctx.ell), Int(1)};
    }
    if (!is_numerical_solution(sol, ctx.v(), c))
      broken("InvariantViolation", "iterate " + std::to_string(m) + " does not give a numerical solution");
    out.push_back(sol);
  }
  return out;
}

PresentationReport presentation_report(long n, long ell) {
  if (is_square_case(n, ell)) return {false, 1, false};
  return {true, 0, true};
}

std::string to_string(const ExtRat& e) {
  if (e.inf < 0) return "-inf";
  if (e.inf > 0) return "inf";
  return to_string(e.value);
}

static int ext_cmp(const ExtRat& e, const Rat& x) {
  if (e.inf != 0) return e.inf;
  return cmp(e.value, x);
}

bool HalfOpen::contains(const Rat& x) const { return ext_cmp(lo, x) <= 0 && ext_cmp(hi, x) > 0; }

bool HalfOpen::contains_starred(const Rat& x) const { return ext_cmp(lo, x) < 0 && ext_cmp(hi, x) >= 0; }

namespace {

// Feet B_k = b_k/(a_k sqrt n), L_k = l a_k/(b_k sqrt n) for k = 1..K, index 0 unused.
struct Feet {
  std::vector<Rat> B;
  std::vector<Rat> L;
};

Feet feet(const PellContext& ctx, long K) {
  Feet f;
  f.B.resize(K + 1);
  f.L.resize(K + 1);
  SurdMat2 gen = ctx.generator_matrix();
  SurdMat2 p = SurdMat2::identity();
  Int n(ctx.n);
  for (long k = 1; k <= K; ++k) {
    p = p * gen;
    Rat ab = surd_div_sqrt(surd_mul(p.c, p.a), n);
    f.B[k] = ab / p.c.square();
    f.L[k] = Rat(ctx.ell) * ab / p.a.square();
  }
  return f;
}

ExtRat fin(const Rat& q) { return ExtRat::finite(q); }

std::vector<HalfOpen> table(const PellContext& ctx, long m, const Feet& f) {
  const auto& B = f.B;
  const auto& L = f.L;
  if (ctx.epsilon == -1) {
    if (m == 1) return {{fin(0), fin(B[1])}, {fin(L[1]), ExtRat::pos_inf()}};
    if (m == 0) return {{ExtRat::neg_inf(), fin(-L[1])}, {fin(-B[1]), fin(0)}};
    if (m >= 2 && m % 2 == 0) {
      long k = m / 2;
      return {{fin(B[2 * k - 1]), fin(L[2 * k])}, {fin(B[2 * k]), fin(L[2 * k - 1])}};
    }
    if (m <= -2 && (-m) % 2 == 0) {
      long k = -m / 2;
      return {{fin(-B[2 * k]), fin(-L[2 * k + 1])}, {fin(-B[2 * k + 1]), fin(-L[2 * k])}};
    }
    if (m >= 3) {
      long k = (m - 1) / 2;
      return {{fin(L[2 * k]), fin(B[2 * k + 1])}, {fin(L[2 * k + 1]), fin(B[2 * k])}};
    }
    long k = (1 - m) / 2;  // m = -2k+1
    return {{fin(-L[2 * k - 1]), fin(-B[2 * k])}, {fin(-L[2 * k]), fin(-B[2 * k - 1])}};
  }
  if (m == 1) return {{fin(0), fin(L[1])}, {fin(B[1]), ExtRat::pos_inf()}};
  if (m == 0) return {{ExtRat::neg_inf(), fin(-B[1])}, {fin(-L[1]), fin(0)}};
  if (m >= 2) {
    long j = m - 1;
    return {{fin(L[j]), fin(L[j + 1])}, {fin(B[j + 1]), fin(B[j])}};
  }
  long j = -m;
  return {{fin(-B[j]), fin(-B[j + 1])}, {fin(-L[j + 1]), fin(-L[j])}};
}

long feet_needed(long m) { return (m < 0 ? -m : m) + 2; }

}  // namespace

std::vector<HalfOpen> interval(const PellContext& ctx, long m) { return table(ctx, m, feet(ctx, feet_needed(m))); }

IntervalIndex interval_index(const PellContext& ctx, const Rat& lambda) {
  if (lambda * lambda * Rat(ctx.n) == Rat(ctx.ell)) fail("AccumulationPoint", "lambda is an accumulation point");
  for (long K = 8; K <= 8192; K *= 2) {
    Feet f = feet(ctx, K + 2);
    std::optional<long> m_plain, m_star;
    for (long step = 0; step <= 2 * K; ++step) {
      long m = step % 2 == 0 ? step / 2 : -(step + 1) / 2;
      if (m > K || -m > K) break;
      for (const HalfOpen& piece : table(ctx, m, f)) {
        if (!m_plain && piece.contains(lambda)) m_plain = m;
        if (!m_star && piece.contains_starred(lambda)) m_star = m;
      }
      if (m_plain && m_star) return {*m_plain, *m_plain == *m_star, *m_star};
    }
  }
  broken("InvariantViolation", "no interval contains " + to_string(lambda));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StableSheaf: return "StableSheaf";
    case Verdict::DualStableSheaf: return "DualStableSheaf";
    case Verdict::Both: return "StableSheaf+DualStableSheaf";
    case Verdict::Neither: return "Neither";
  }
  return "?";
}

Verdict sheaf_verdict(const PellContext& ctx, const Rat& lambda, long m) {
  if (m > 0) fail("DomainError", "verdicts are stated for m <= 0");
  bool plain = false, starred = false;
  for (const HalfOpen& piece : interval(ctx, m)) {
    plain = plain || piece.contains(lambda);
    starred = starred || piece.contains_starred(lambda);
  }
  if (plain && starred) return Verdict::Both;
  if (plain) return Verdict::StableSheaf;
  if (starred) return Verdict::DualStableSheaf;
  return Verdict::Neither;
}

}  // namespace bridgeland
