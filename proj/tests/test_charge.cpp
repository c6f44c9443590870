#include <doctest.h>

#include <random>

#include "bridgeland/charge.hpp"
#include "bridgeland/walls.hpp"
#include "gen.hpp"

using namespace bridgeland;

namespace {

const Context one(1);

}  // namespace

TEST_CASE("charge polynomials") {
  CHECK(charge(MukaiVector::of(1, 0, -2), 0, one) == ChargePoly{2, 1, 0});
  CHECK(charge(rho(), rat(3, 5), one) == ChargePoly{-1, 0, 0});
  for (long n = 1; n <= 3; ++n) {
    Context ctx(n);
    Rat s = rat(2, 3);
    CHECK(charge(exp_class(s, ctx), s, ctx) == ChargePoly{0, Rat(n), 0});
  }
}

TEST_CASE("phases") {
  CHECK(phase(MukaiVector::of(1, 0, -2), StabilityPoint(0, 1), one) == doctest::Approx(0.0));
  CHECK(phase(rho(), StabilityPoint(rat(-7, 3), rat(1, 9)), one) == doctest::Approx(1.0));
  CHECK(phase(MukaiVector::of(0, 1, 0), StabilityPoint(0, 1), one) == doctest::Approx(0.5));
  CHECK_THROWS_AS(StabilityPoint(0, 0), Error);
  CHECK_THROWS_AS(phase(MukaiVector::of(1, 0, 1), StabilityPoint(0, 1), one), Error);
}

TEST_CASE("alignment on the l = 3 wall") {
  MukaiVector v = MukaiVector::of(1, 0, -3), w = MukaiVector::of(1, -1, 1);
  CHECK(aligned(v, w, StabilityPoint(-2, 1), one));
  CHECK(aligned(v, v, StabilityPoint(rat(1, 3), 5), one));
  CHECK_FALSE(aligned(v, w, StabilityPoint(-2, 4), one));
  CHECK(phase_window(v, w, StabilityPoint(rat(-7, 4), rat(1, 100)), one) == PhaseWindow::Above);
  CHECK(phase_window(v, w, StabilityPoint(-2, 1), one) == PhaseWindow::Aligned);
  CHECK(phase_window(v, w, StabilityPoint(-4, 1), one) == PhaseWindow::Below);
}

TEST_CASE("random charge properties") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    Context ctx(testgen::pick(rng, 1, 4));
    MukaiVector v = testgen::pick_vector(rng, 8), w = testgen::pick_vector(rng, 8);
    Rat s = testgen::pick_rat(rng, 6, 4);
    ChargePoly zv = charge(v, s, ctx), zw = charge(w, s, ctx), zs = charge(v + w, s, ctx);
    CHECK(zs == ChargePoly{zv.re0 + zw.re0, zv.re2 + zw.re2, zv.im1 + zw.im1});

    StabilityPoint pt(s, testgen::pick_t_sq(rng, 9, 4));
    if (v.is_zero() || sign(Rat(zv.real_at(pt.t_sq))) == 0 && sign(zv.im1) == 0) continue;
    double ph = phase(v, pt, ctx), neg = phase(-v, pt, ctx);
    CHECK(ph > -1.0);
    CHECK(ph <= 1.0);
    double expect = ph - 1.0 <= -1.0 ? ph + 1.0 : ph - 1.0;
    CHECK(neg == doctest::Approx(expect));
  }
}

TEST_CASE("alignment matches wall membership") {
  std::mt19937_64 rng(32);
  int hits = 0;
  for (int i = 0; i < 4000 && hits < 200; ++i) {
    Context ctx(testgen::pick(rng, 1, 3));
    MukaiVector v = testgen::pick_vector(rng, 5), v1 = testgen::pick_vector(rng, 5);
    if (square(v, ctx) <= 0) continue;
    auto wall = wall_between(v, v1, ctx);
    if (!wall) continue;
    ++hits;
    // A point on the wall, and one off it.
    if (const auto* c = std::get_if<Circle>(&wall->shape)) {
      StabilityPoint on(c->center, c->radius_sq);
      CHECK(aligned(v, v1, on, ctx));
      CHECK_FALSE(aligned(v, v1, StabilityPoint(c->center, c->radius_sq * 4), ctx));
    } else {
      const VLine& l = std::get<VLine>(wall->shape);
      CHECK(aligned(v, v1, StabilityPoint(l.s, 1), ctx));
      CHECK(aligned(v, v1, StabilityPoint(l.s, 7), ctx));
      CHECK_FALSE(aligned(v, v1, StabilityPoint(l.s + 1, 1), ctx));
    }
  }
  CHECK(hits >= 100);
}
