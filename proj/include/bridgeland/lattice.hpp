#pragma once

#include <string>

#include "bridgeland/surd.hpp"

namespace bridgeland {

// n = (H^2)/2 for the polarization H generating NS(X).
struct Context {
  long n;

  explicit Context(long n_);
  Int n_int() const { return Int(n); }
};

// r + dH + a*rho.  d and a stay rational so twisted vectors are first-class.
struct MukaiVector {
  Int r;
  Rat d;
  Rat a;

  MukaiVector() : r(0), d(0), a(0) {}
  MukaiVector(const Int& r_, const Rat& d_, const Rat& a_);
  static MukaiVector of(long r, long d, long a) { return MukaiVector(Int(r), Rat(d), Rat(a)); }

  bool is_zero() const { return sgn(r) == 0 && sgn(d) == 0 && sgn(a) == 0; }
  bool integral() const { return is_integer(d) && is_integer(a); }

  MukaiVector operator-() const { return MukaiVector(-r, -d, -a); }
  MukaiVector operator+(const MukaiVector& o) const { return MukaiVector(r + o.r, d + o.d, a + o.a); }
  MukaiVector operator-(const MukaiVector& o) const { return MukaiVector(r - o.r, d - o.d, a - o.a); }
  MukaiVector operator*(const Int& k) const { return MukaiVector(r * k, d * Rat(k), a * Rat(k)); }
  bool operator==(const MukaiVector& o) const { return r == o.r && d == o.d && a == o.a; }
  bool operator<(const MukaiVector& o) const;
};

std::string to_string(const MukaiVector& v);
MukaiVector parse_vector(const std::string& text);

// The isotropic class rho of a point.
MukaiVector rho();

Rat pairing(const MukaiVector& v, const MukaiVector& w, const Context& ctx);
Rat square(const MukaiVector& v, const Context& ctx);

// v * e^{sH}
MukaiVector twist(const MukaiVector& v, const Rat& s, const Context& ctx);
// e^{sH} as a rational Mukai vector (needs r = 1).
MukaiVector exp_class(const Rat& s, const Context& ctx);

struct BetaData {
  Rat r;
  Rat d;
  Rat a;
};
// (r, d - rs, a - 2nds + nrs^2): the coordinates of v seen from beta = sH.
BetaData beta_data(const MukaiVector& v, const Rat& s, const Context& ctx);

bool is_positive(const MukaiVector& v);
bool is_isotropic(const MukaiVector& v, const Context& ctx);
bool is_primitive(const MukaiVector& v);

// (x, y*sqrt(n); y*sqrt(n), z)
struct Sym2Form {
  Int x;
  Int y;
  Int z;

  bool operator==(const Sym2Form& o) const { return x == o.x && y == o.y && z == o.z; }
};

Sym2Form to_sym2(const MukaiVector& v);
MukaiVector from_sym2(const Sym2Form& f);
Int bform(const Sym2Form& f1, const Sym2Form& f2, const Context& ctx);

}  // namespace bridgeland
