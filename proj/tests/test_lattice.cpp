#include <doctest.h>

#include <random>

#include "bridgeland/lattice.hpp"
#include "gen.hpp"

using namespace bridgeland;

namespace {

const Context one(1);

}  // namespace

TEST_CASE("pairing") {
  CHECK(pairing(MukaiVector::of(1, 0, -2), MukaiVector::of(1, 0, -2), one) == 4);
  CHECK(square(rho(), one) == 0);
  CHECK(pairing(MukaiVector::of(1, -1, 1), MukaiVector::of(1, -2, 4), one) == -1);
  CHECK(pairing(MukaiVector::of(0, 1, 0), MukaiVector::of(0, 1, 0), Context(3)) == 6);
}

TEST_CASE("twists") {
  CHECK(twist(MukaiVector::of(1, 0, -3), 2, one) == MukaiVector::of(1, 2, 1));
  CHECK(twist(rho(), rat(7, 3), one) == rho());
  MukaiVector t = twist(MukaiVector::of(1, 0, -2), -2, one);
  CHECK(t == MukaiVector::of(1, -2, 2));
  CHECK(square(t, one) == 4);
  CHECK(exp_class(rat(1, 2), Context(2)) == MukaiVector(Int(1), rat(1, 2), rat(1, 2)));
}

TEST_CASE("coordinates seen from a base point") {
  for (long ell = 1; ell <= 6; ++ell) {
    BetaData bd = beta_data(MukaiVector::of(1, 0, -ell), 0, one);
    CHECK(bd.r == 1);
    CHECK(bd.d == 0);
    CHECK(bd.a == -ell);
  }
  BetaData bd = beta_data(MukaiVector::of(1, 0, -3), -2, one);
  CHECK(bd.d == 2);
  CHECK(bd.a == 1);
  BetaData pt = beta_data(rho(), rat(5, 7), one);
  CHECK(pt.r == 0);
  CHECK(pt.d == 0);
  CHECK(pt.a == 1);
}

TEST_CASE("positivity, isotropy and primitivity") {
  MukaiVector u = MukaiVector::of(1, -1, 1);
  CHECK(is_positive(u));
  CHECK(is_isotropic(u, one));
  CHECK(is_primitive(u));
  MukaiVector p5 = MukaiVector::of(0, 0, 5);
  CHECK(is_positive(p5));
  CHECK(is_isotropic(p5, one));
  CHECK_FALSE(is_primitive(p5));
  CHECK_FALSE(is_positive(MukaiVector::of(-1, 0, 0)));
  CHECK(is_positive(MukaiVector::of(0, 1, -4)));
  CHECK_FALSE(is_positive(MukaiVector::of(0, 0, -1)));
}

TEST_CASE("Sym2 embedding") {
  Sym2Form f = to_sym2(MukaiVector::of(1, 0, -2));
  CHECK(f == Sym2Form{1, 0, -2});
  CHECK(bform(f, f, one) == 4);
  CHECK(to_sym2(rho()) == Sym2Form{0, 0, 1});
  CHECK_THROWS_AS(to_sym2(MukaiVector(Int(1), rat(1, 2), 0)), Error);
}

TEST_CASE("vector parsing") {
  CHECK(parse_vector("1,-1,1") == MukaiVector::of(1, -1, 1));
  CHECK(parse_vector(" 2 , 1/2 , -3/4 ") == MukaiVector(Int(2), rat(1, 2), rat(-3, 4)));
  CHECK(to_string(MukaiVector(Int(2), rat(1, 2), rat(-3, 4))) == "2,1/2,-3/4");
  CHECK_THROWS_AS(parse_vector("1,2"), Error);
  CHECK_THROWS_AS(parse_vector("1/2,0,0"), Error);
}

TEST_CASE("random lattice properties") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    Context ctx(testgen::pick(rng, 1, 6));
    MukaiVector v = testgen::pick_vector(rng, 12), w = testgen::pick_vector(rng, 12);
    CHECK(pairing(v, w, ctx) == Rat(bform(to_sym2(v), to_sym2(w), ctx)));
    CHECK(from_sym2(to_sym2(v)) == v);
    CHECK(is_integer(square(v, ctx) / 2));
    Rat s1 = testgen::pick_rat(rng, 9, 6), s2 = testgen::pick_rat(rng, 9, 6);
    CHECK(twist(twist(v, s1, ctx), s2, ctx) == twist(v, s1 + s2, ctx));
    CHECK(pairing(twist(v, s1, ctx), twist(w, s1, ctx), ctx) == pairing(v, w, ctx));
  }
}
