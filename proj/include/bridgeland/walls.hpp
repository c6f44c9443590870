#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bridgeland/charge.hpp"
#include "bridgeland/pell.hpp"

namespace bridgeland {

// (s - center)^2 + t^2 = radius_sq
struct Circle {
  Rat center;
  Rat radius_sq;

  bool operator==(const Circle& o) const { return center == o.center && radius_sq == o.radius_sq; }
};

struct VLine {
  Rat s;

  bool operator==(const VLine& o) const { return s == o.s; }
};

using Shape = std::variant<Circle, VLine>;

// Lines first (by s), then circles by (center, radius_sq).
bool shape_less(const Shape& x, const Shape& y);
std::string to_string(const Shape& sh);

struct Wall {
  Shape shape;
  MukaiVector witness;
  bool codim0 = false;
  std::optional<long> label;

  bool operator==(const Wall& o) const {
    return shape == o.shape && witness == o.witness && codim0 == o.codim0 && label == o.label;
  }
};

// Wall for v defined by v1, base point beta = 0.
std::optional<Wall> wall_between(const MukaiVector& v, const MukaiVector& v1, const Context& ctx);

// The numeric wall conditions alone (no locus check).
bool wall_conditions(const MukaiVector& v, const MukaiVector& v1, const Context& ctx);

struct PencilData {
  Rat p;
  Rat q;
};
PencilData pencil(const MukaiVector& v, const Context& ctx);
bool in_pencil(const Circle& c, const PencilData& pd);

// Ordering used to pick one witness per wall.
bool witness_preferred(const MukaiVector& x, const MukaiVector& y, const Context& ctx);

// Merge walls with equal shape, keep the preferred witness, sort by shape.
std::vector<Wall> dedupe_walls(std::vector<Wall> walls, const Context& ctx);

// Every wall meeting the line s = s0 at some t > 0.  BadCrossSection when d - r*s0 = 0.
std::vector<Wall> enumerate_walls_on_line(const MukaiVector& v, const Rat& s0, const Context& ctx, int jobs = 1);

// The search itself, without input validation.
std::vector<Wall> search_line(const MukaiVector& v, const Rat& s0, const Context& ctx, int jobs = 1);

// Vertical walls s = d/r (at most one shape).
std::vector<Wall> vertical_walls(const MukaiVector& v, const Context& ctx);

// True when every circle wall surrounds a rational base point (or r = 0).
bool finite_case(const MukaiVector& v, const Context& ctx);

// Complete wall set in the finite case.
std::vector<Wall> finite_walls(const MukaiVector& v, const Context& ctx, int jobs = 1);

// C_m: m = 0 is the line s = 0, otherwise the circle through the two rational feet.
Wall codim0_wall(const PellContext& pell, long m);
std::vector<Wall> codim0_walls(const PellContext& pell, long m_lo, long m_hi);

// Abscissa of the foot of C_-1 with the smaller denominator; every wall between C_0 and C_-1 crosses it.
Rat fundamental_cross_section(const PellContext& pell);
// C_0, C_-1 and every wall between them.
std::vector<Wall> fundamental_walls(const PellContext& pell, int jobs = 1);

std::optional<long> is_codim0(const Wall& w, const PellContext& pell, long search_bound);

// v = r e^{kH} - a' rho with (r-1)(a'-1) = 0 on the line s = d/r.
std::optional<NumericalSolution> line_codim0(const MukaiVector& v, const Context& ctx);
// Numerical solution attached to a circle whose feet are rational and carry
// primitive isotropic classes pairing to -1.
std::optional<NumericalSolution> codim0_solution(const MukaiVector& v, const Circle& c, const Context& ctx);
// Sets codim0 on every wall with an attached numerical solution; labels from pell when given.
void tag_codim0(std::vector<Wall>& walls, const MukaiVector& v, const Context& ctx,
                const PellContext* pell = nullptr, long search_bound = 16);

bool crosses_line(const Shape& sh, const Rat& s0);
bool on_wall(const Shape& sh, const StabilityPoint& pt);
// Strictly inside the disk bounded by a circle.
bool inside(const Circle& c, const StabilityPoint& pt);
// Common point with t > 0.
bool walls_intersect(const Shape& x, const Shape& y);
// Closed disk of inner lies in the closed disk of outer.
bool disk_contains(const Circle& outer, const Circle& inner);

struct ChamberReport {
  enum class Kind { OnWall, Gieseker, DualGieseker, Bounded };
  Kind kind;
  std::optional<Wall> wall;   // OnWall
  std::optional<Wall> inner;  // Bounded
  std::optional<Wall> outer;  // Bounded

  bool operator==(const ChamberReport& o) const {
    return kind == o.kind && wall == o.wall && inner == o.inner && outer == o.outer;
  }
};
const char* to_string(ChamberReport::Kind k);

ChamberReport classify_point(const MukaiVector& v, const StabilityPoint& pt, const std::vector<Wall>& walls,
                             const Context& ctx);

struct WMaxReport {
  Wall wall;
  QnNumber lambda1;
  QnNumber lambda2;
};
WMaxReport w_max_report(const MukaiVector& v, const std::vector<Wall>& walls, const Context& ctx);

}  // namespace bridgeland
