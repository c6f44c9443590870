#pragma once

#include "bridgeland/lattice.hpp"

namespace bridgeland {

// Z(t) = (re0 + re2*t^2) + i*(im1*t) at a fixed s.
struct ChargePoly {
  Rat re0;
  Rat re2;
  Rat im1;

  Rat real_at(const Rat& t_sq) const { return re0 + re2 * t_sq; }
  bool operator==(const ChargePoly& o) const { return re0 == o.re0 && re2 == o.re2 && im1 == o.im1; }
};

// A point (s, t) of the upper half-plane, carried as (s, t^2).
struct StabilityPoint {
  Rat s;
  Rat t_sq;

  StabilityPoint(const Rat& s_, const Rat& t_sq_);
};

ChargePoly charge(const MukaiVector& v, const Rat& s, const Context& ctx);

// Charge in the coordinate z with beta + i*omega = (z/sqrt(n))H:
// Z_z(v) = -a + 2*sqrt(n)*d*z - r*z^2.
QnComplex charge_at(const MukaiVector& v, const QnComplex& z, const Context& ctx);

// Floating-point phase in (-1, 1].
double phase(const MukaiVector& v, const StabilityPoint& pt, const Context& ctx);

// Im(Z(v) * conj(Z(w))) / t, exact.
Rat alignment_bracket(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx);
bool aligned(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx);

enum class PhaseWindow { Above, Aligned, Below };
const char* to_string(PhaseWindow p);

// Above: phi(w) in (phi(v), phi(v)+1) mod 2; Below: in (phi(v)-1, phi(v)).
PhaseWindow phase_window(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx);

}  // namespace bridgeland
