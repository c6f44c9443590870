#pragma once

#include <vector>

#include "bridgeland/walls.hpp"

namespace bridgeland {

struct ScanConfig {
  long entry_bound = 10;
  double grid = 0.01;
  double tol = 1e-9;
};
void validate(const ScanConfig& cfg);

// [s_min, s_max] x (0, t_max]
struct Window {
  Rat s_min;
  Rat s_max;
  Rat t_max;
};
Window parse_window(const std::string& text);

// Every v1 with |r1|, |d1|, |a1| <= bound through wall_between and the crossing filter.
std::vector<Wall> brute_walls(const MukaiVector& v, const Rat& s0, long bound, const Context& ctx);

struct CloudPoint {
  double s;
  double t;
};

// Grid nodes where the floating phases of v and v1 align: a sign change of
// Im(Z(v1) conj Z(v)) towards the right or upper neighbour, or a normalized value below tol.
std::vector<CloudPoint> float_align_scan(const MukaiVector& v, const MukaiVector& v1, const Window& window,
                                         const ScanConfig& cfg, const Context& ctx);

// Euclidean distance from a point to the wall curve in the (s, t) plane.
double distance_to_wall(const Shape& sh, const CloudPoint& p);

}  // namespace bridgeland
