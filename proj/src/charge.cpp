#include "bridgeland/charge.hpp"

#include <cmath>

namespace bridgeland {

StabilityPoint::StabilityPoint(const Rat& s_, const Rat& t_sq_) : s(s_), t_sq(t_sq_) {
  if (sgn(t_sq) <= 0) fail("DomainError", "stability points need t^2 > 0");
}

ChargePoly charge(const MukaiVector& v, const Rat& s, const Context& ctx) {
  BetaData b = beta_data(v, s, ctx);
  Rat n(ctx.n);
  return {-b.a, n * b.r, 2 * n * b.d};
}

QnComplex charge_at(const MukaiVector& v, const QnComplex& z, const Context& ctx) {
  Int n = ctx.n_int();
  QnComplex minus_a(QnNumber::rational(-v.a, n), QnNumber::rational(0, n));
  QnComplex two_root_n_d(QnNumber(Rat(0), 2 * v.d, n), QnNumber::rational(0, n));
  QnComplex r(QnNumber::rational(Rat(v.r), n), QnNumber::rational(0, n));
  return minus_a + two_root_n_d * z - r * z * z;
}

double phase(const MukaiVector& v, const StabilityPoint& pt, const Context& ctx) {
  ChargePoly z = charge(v, pt.s, ctx);
  Rat re = z.real_at(pt.t_sq);
  int im_sign = sgn(z.im1);
  if (im_sign == 0) {
    if (sgn(re) == 0) fail("ZeroCharge", "Z(" + to_string(v) + ") vanishes");
    return sgn(re) > 0 ? 0.0 : 1.0;
  }
  double t = std::sqrt(pt.t_sq.get_d());
  double phi = std::atan2(z.im1.get_d() * t, re.get_d()) / M_PI;
  // atan2 lands in [-1, 1]; -1 only happens on the negative real axis, handled above.
  return phi;
}

Rat alignment_bracket(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx) {
  ChargePoly zv = charge(v, pt.s, ctx);
  ChargePoly zw = charge(w, pt.s, ctx);
  // Im(Zv * conj(Zw)) = t * (im1_v * Re_w - Re_v * im1_w)
  return zv.im1 * zw.real_at(pt.t_sq) - zv.real_at(pt.t_sq) * zw.im1;
}

bool aligned(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx) {
  return sgn(alignment_bracket(v, w, pt, ctx)) == 0;
}

const char* to_string(PhaseWindow p) {
  switch (p) {
    case PhaseWindow::Above: return "Above";
    case PhaseWindow::Aligned: return "Aligned";
    case PhaseWindow::Below: return "Below";
  }
  return "?";
}

PhaseWindow phase_window(const MukaiVector& v, const MukaiVector& w, const StabilityPoint& pt, const Context& ctx) {
  ChargePoly zv = charge(v, pt.s, ctx);
  ChargePoly zw = charge(w, pt.s, ctx);
  if (sgn(zv.im1) == 0 && sgn(zv.real_at(pt.t_sq)) == 0) fail("ZeroCharge", "Z(" + to_string(v) + ") vanishes");
  if (sgn(zw.im1) == 0 && sgn(zw.real_at(pt.t_sq)) == 0) fail("ZeroCharge", "Z(" + to_string(w) + ") vanishes");
  // sign Im(Zw * conj(Zv)) = sign of the angle from Z(v) to Z(w).
  int s = sgn(alignment_bracket(w, v, pt, ctx));
  if (s == 0) return PhaseWindow::Aligned;
  return s > 0 ? PhaseWindow::Above : PhaseWindow::Below;
}

}  // namespace bridgeland
