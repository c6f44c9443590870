#include <doctest.h>

#include <random>

#include "bridgeland/oracle.hpp"
#include "bridgeland/walls.hpp"
#include "gen.hpp"

using namespace bridgeland;

namespace {

const Context one(1);

Shape circle(const Rat& c, const Rat& r2) { return Circle{c, r2}; }

std::vector<Shape> shapes_of(const std::vector<Wall>& walls) {
  std::vector<Shape> out;
  for (const Wall& w : walls) out.push_back(w.shape);
  return out;
}

bool has_shape(const std::vector<Wall>& walls, const Shape& sh) {
  for (const Wall& w : walls)
    if (w.shape == sh) return true;
  return false;
}

}  // namespace

TEST_CASE("single walls") {
  auto w = wall_between(MukaiVector::of(1, 0, -3), MukaiVector::of(1, -1, 1), one);
  REQUIRE(w);
  CHECK(w->shape == circle(-2, 1));
  w = wall_between(MukaiVector::of(1, 0, -2), MukaiVector::of(1, -1, 1), one);
  REQUIRE(w);
  CHECK(w->shape == circle(rat(-3, 2), rat(1, 4)));
  w = wall_between(MukaiVector::of(1, 0, -4), MukaiVector::of(1, 0, -1), one);
  REQUIRE(w);
  CHECK(w->shape == Shape(VLine{0}));
  CHECK_FALSE(wall_between(MukaiVector::of(1, 0, -2), MukaiVector::of(1, 0, 1), one));
  CHECK_FALSE(wall_between(MukaiVector::of(1, 0, -2), MukaiVector::of(2, 0, -4), one));
}

TEST_CASE("pencils") {
  for (long ell = 1; ell <= 5; ++ell) {
    PencilData pd = pencil(MukaiVector::of(1, 0, -ell), one);
    CHECK(pd.p == 0);
    CHECK(pd.q == ell);
  }
  PencilData pd = pencil(MukaiVector::of(1, 1, 0), one);
  CHECK(pd.p == 1);
  CHECK(pd.q == 1);
  pd = pencil(MukaiVector::of(2, 1, 0), one);
  CHECK(pd.p == rat(1, 2));
  CHECK(pd.q == rat(1, 4));
}

TEST_CASE("walls met by a line") {
  auto walls = enumerate_walls_on_line(MukaiVector::of(1, 0, -3), -2, one);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].shape == circle(-2, 1));
  CHECK(walls[0].witness == MukaiVector::of(1, -1, 1));
  CHECK(enumerate_walls_on_line(MukaiVector::of(1, 0, -2), -1, one).empty());
  walls = enumerate_walls_on_line(MukaiVector::of(1, 0, -4), -2, one);
  REQUIRE(walls.size() == 1);
  CHECK(walls[0].shape == circle(rat(-5, 2), rat(9, 4)));
  CHECK(walls[0].witness == MukaiVector::of(1, -1, 1));
  try {
    enumerate_walls_on_line(MukaiVector::of(1, 0, -2), 0, one);
    FAIL("expected BadCrossSection");
  } catch (const Error& e) {
    CHECK(e.kind() == "BadCrossSection");
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  MukaiVector v = MukaiVector::of(1, 0, -11);
  auto serial = enumerate_walls_on_line(v, rat(-10, 3), one, 1);
  auto parallel = enumerate_walls_on_line(v, rat(-10, 3), one, 4);
  CHECK(serial == parallel);
  CHECK(serial.size() > 1);
}

TEST_CASE("fundamental domains") {
  auto check_c1 = [](long ell, const Rat& c, const Rat& r2) {
    PellContext pell = solve_generator(1, ell);
    CHECK(codim0_wall(pell, -1).shape == circle(c, r2));
    return fundamental_walls(pell);
  };
  auto two = check_c1(2, rat(-3, 2), rat(1, 4));
  CHECK(shapes_of(two) == std::vector<Shape>{VLine{0}, circle(rat(-3, 2), rat(1, 4))});
  auto three = check_c1(3, rat(-7, 4), rat(1, 16));
  CHECK(shapes_of(three) == std::vector<Shape>{VLine{0}, circle(-2, 1), circle(rat(-7, 4), rat(1, 16))});
  auto five = check_c1(5, rat(-9, 4), rat(1, 16));
  CHECK(has_shape(five, circle(-3, 4)));
  check_c1(6, rat(-49, 20), rat(1, 400));
  CHECK(codim0_wall(solve_generator(1, 4 + 3), 0).shape == Shape(VLine{0}));
}

TEST_CASE("codim-0 labels") {
  PellContext three = solve_generator(1, 3);
  CHECK(is_codim0(Wall{circle(rat(-7, 4), rat(1, 16)), MukaiVector::of(1, -2, 4)}, three, 8) == -1);
  CHECK_FALSE(is_codim0(Wall{circle(-2, 1), MukaiVector::of(1, -1, 1)}, three, 8));
  CHECK(is_codim0(Wall{VLine{0}, rho()}, solve_generator(1, 2), 8) == 0);
  for (long m = -4; m <= 4; ++m) CHECK(is_codim0(codim0_wall(three, m), three, 8) == m);
}

TEST_CASE("square case wall sets") {
  auto four = finite_walls(MukaiVector::of(1, 0, -4), one);
  CHECK(shapes_of(four) == std::vector<Shape>{VLine{0}, circle(rat(-5, 2), rat(9, 4)), circle(rat(5, 2), rat(9, 4))});
  CHECK(four[0].codim0);
  CHECK_FALSE(four[1].codim0);
  auto single = finite_walls(MukaiVector::of(1, 0, -1), one);
  CHECK(shapes_of(single) == std::vector<Shape>{VLine{0}});
  CHECK(finite_case(MukaiVector::of(0, 1, -3), one));
  CHECK_FALSE(finite_case(MukaiVector::of(1, 0, -2), one));
}

TEST_CASE("chambers for l = 2") {
  PellContext pell = solve_generator(1, 2);
  MukaiVector v = pell.v();
  auto walls = codim0_walls(pell, -4, 0);
  CHECK(classify_point(v, StabilityPoint(rat(-1, 10), 1), walls, one).kind == ChamberReport::Kind::Gieseker);
  CHECK(classify_point(v, StabilityPoint(rat(1, 10), 1), walls, one).kind == ChamberReport::Kind::DualGieseker);
  ChamberReport on = classify_point(v, StabilityPoint(rat(-3, 2), rat(1, 4)), walls, one);
  CHECK(on.kind == ChamberReport::Kind::OnWall);
  REQUIRE(on.wall);
  CHECK(on.wall->label == -1);
  ChamberReport in = classify_point(v, StabilityPoint(rat(-3, 2), rat(1, 100)), walls, one);
  CHECK(in.kind == ChamberReport::Kind::Bounded);
  REQUIRE(in.outer);
  CHECK(in.outer->label == -1);
  REQUIRE(in.inner);
  CHECK(in.inner->label == -2);
}

TEST_CASE("largest wall") {
  auto report = [](long ell) {
    PellContext pell = solve_generator(1, ell);
    return w_max_report(pell.v(), fundamental_walls(pell), one);
  };
  WMaxReport two = report(2);
  CHECK(two.wall.shape == circle(rat(-3, 2), rat(1, 4)));
  CHECK(two.lambda1 == QnNumber::rational(-2, 1));
  CHECK(two.lambda2 == QnNumber::rational(-1, 1));
  WMaxReport three = report(3);
  CHECK(three.wall.shape == circle(-2, 1));
  CHECK(three.lambda1 == QnNumber::rational(-3, 1));
  CHECK(three.lambda2 == QnNumber::rational(-1, 1));
  MukaiVector v4 = MukaiVector::of(1, 0, -4);
  WMaxReport four = w_max_report(v4, finite_walls(v4, one), one);
  CHECK(four.wall.shape == circle(rat(-5, 2), rat(9, 4)));
  CHECK(four.lambda1 == QnNumber::rational(-4, 1));
  CHECK(four.lambda2 == QnNumber::rational(-1, 1));
}

TEST_CASE("geometry predicates") {
  Circle big{-2, 1}, small{rat(-7, 4), rat(1, 16)};
  CHECK(disk_contains(big, small));
  CHECK_FALSE(disk_contains(small, big));
  CHECK_FALSE(walls_intersect(big, small));
  CHECK(walls_intersect(Circle{0, 4}, Circle{2, 4}));
  CHECK(walls_intersect(Circle{0, 4}, VLine{1}));
  CHECK_FALSE(walls_intersect(Circle{0, 4}, VLine{2}));
  CHECK(crosses_line(big, rat(-5, 2)));
  CHECK_FALSE(crosses_line(big, -1));
  CHECK(on_wall(big, StabilityPoint(-2, 1)));
  CHECK(inside(big, StabilityPoint(-2, rat(1, 2))));
}

TEST_CASE("wall sets are disjoint, lie in the pencil and surround a real base point") {
  std::mt19937_64 rng(41);
  int sets = 0;
  for (int i = 0; i < 400 && sets < 60; ++i) {
    Context ctx(testgen::pick(rng, 1, 3));
    MukaiVector v = MukaiVector::of(testgen::pick(rng, 1, 3), testgen::pick(rng, -3, 3), testgen::pick(rng, -8, 2));
    if (square(v, ctx) <= 0) continue;
    Rat s0 = testgen::pick_rat(rng, 6, 3);
    BetaData bd = beta_data(v, s0, ctx);
    if (sign(bd.d) == 0 || sign(bd.a) == 0) continue;
    auto walls = enumerate_walls_on_line(v, s0, ctx);
    ++sets;
    PencilData pd = pencil(v, ctx);
    Rat half_width_sq = square(v, ctx) / (2 * ctx.n * Rat(v.r * v.r));
    for (size_t a = 0; a < walls.size(); ++a) {
      for (size_t b = a + 1; b < walls.size(); ++b) CHECK_FALSE(walls_intersect(walls[a].shape, walls[b].shape));
      const auto* c = std::get_if<Circle>(&walls[a].shape);
      if (!c) continue;
      CHECK(in_pencil(*c, pd));
      if (is_square(half_width_sq)) {
        Rat root = sqrt_exact(half_width_sq);
        auto strictly_inside = [&](const Rat& x) { return (x - c->center) * (x - c->center) < c->radius_sq; };
        CHECK((strictly_inside(pd.p - root) || strictly_inside(pd.p + root)));
      }
    }
  }
  CHECK(sets >= 30);
}

TEST_CASE("wall conditions are transported by the group action") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    Context ctx(testgen::pick(rng, 1, 3));
    GMatrix g = testgen::pick_g(rng, ctx);
    MukaiVector v = testgen::pick_vector(rng, 4), v1 = testgen::pick_vector(rng, 4);
    CHECK(wall_conditions(v, v1, ctx) == wall_conditions(act_on_vector(v, g, ctx), act_on_vector(v1, g, ctx), ctx));
  }
}
