#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bridgeland/oracle.hpp"

namespace bridgeland {

struct SvgOptions {
  Window window;
  // Dashed vertical line marking the cross-section used for enumeration.
  std::optional<Rat> cross_section;
  // Walls whose centers and feet get s-ticks, radii get t-ticks.
  std::vector<Wall> tick_walls;
  std::string title;
};

// SVG 1.1, upper half-plane only; walls leaving the window are clipped, walls outside it are omitted.
std::string render_svg(const std::vector<Wall>& walls, const SvgOptions& opt);

}  // namespace bridgeland
