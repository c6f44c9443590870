#include "bridgeland/lattice.hpp"

#include <sstream>
#include <vector>

namespace bridgeland {

Context::Context(long n_) : n(n_) {
  if (n < 1) fail("DomainError", "n = (H^2)/2 must be at least 1");
}

MukaiVector::MukaiVector(const Int& r_, const Rat& d_, const Rat& a_) : r(r_), d(d_), a(a_) {
  d.canonicalize();
  a.canonicalize();
}

bool MukaiVector::operator<(const MukaiVector& o) const {
  if (r != o.r) return r < o.r;
  if (d != o.d) return d < o.d;
  return a < o.a;
}

std::string to_string(const MukaiVector& v) { return to_string(v.r) + "," + to_string(v.d) + "," + to_string(v.a); }

MukaiVector parse_vector(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) fail("ParseError", "expected r,d,a but got '" + text + "'");
  Rat r = parse_rat(parts[0]);
  if (!is_integer(r)) fail("ParseError", "rank must be an integer in '" + text + "'");
  return MukaiVector(Int(r.get_num()), parse_rat(parts[1]), parse_rat(parts[2]));
}

MukaiVector rho() { return MukaiVector::of(0, 0, 1); }

Rat pairing(const MukaiVector& v, const MukaiVector& w, const Context& ctx) {
  return Rat(2 * ctx.n) * v.d * w.d - (Rat(v.r) * w.a + Rat(w.r) * v.a);
}

Rat square(const MukaiVector& v, const Context& ctx) { return pairing(v, v, ctx); }

MukaiVector twist(const MukaiVector& v, const Rat& s, const Context& ctx) {
  Rat n(ctx.n);
  Rat r(v.r);
  return MukaiVector(v.r, v.d + r * s, v.a + 2 * n * v.d * s + n * r * s * s);
}

MukaiVector exp_class(const Rat& s, const Context& ctx) { return twist(MukaiVector::of(1, 0, 0), s, ctx); }

BetaData beta_data(const MukaiVector& v, const Rat& s, const Context& ctx) {
  Rat n(ctx.n);
  Rat r(v.r);
  BetaData b{r, v.d - r * s, v.a - 2 * n * v.d * s + n * r * s * s};
  // a_beta is -<v, e^{sH}>; the closed form above must agree.
  if (b.a != -pairing(v, exp_class(s, ctx), ctx)) broken("InvariantViolation", "a_beta sign check failed");
  return b;
}

bool is_positive(const MukaiVector& v) {
  if (sgn(v.r) != 0) return sgn(v.r) > 0;
  if (sgn(v.d) != 0) return sgn(v.d) > 0;
  return sgn(v.a) > 0;
}

bool is_isotropic(const MukaiVector& v, const Context& ctx) { return sgn(square(v, ctx)) == 0; }

bool is_primitive(const MukaiVector& v) {
  if (!v.integral()) fail("NonIntegral", "primitivity needs an integral vector, got " + to_string(v));
  Int g;
  Int d = v.d.get_num();
  Int a = v.a.get_num();
  mpz_gcd(g.get_mpz_t(), v.r.get_mpz_t(), d.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g == 1;
}

Sym2Form to_sym2(const MukaiVector& v) {
  if (!v.integral()) fail("NonIntegral", "Sym2 embedding needs an integral vector, got " + to_string(v));
  return {v.r, Int(v.d.get_num()), Int(v.a.get_num())};
}

MukaiVector from_sym2(const Sym2Form& f) { return MukaiVector(f.x, Rat(f.y), Rat(f.z)); }

Int bform(const Sym2Form& f1, const Sym2Form& f2, const Context& ctx) {
  return Int(2 * ctx.n) * f1.y * f2.y - (f1.x * f2.z + f1.z * f2.x);
}

}  // namespace bridgeland
