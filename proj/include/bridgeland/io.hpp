#pragma once

#include <json.hpp>

#include "bridgeland/fmgroup.hpp"
#include "bridgeland/pell.hpp"
#include "bridgeland/walls.hpp"

namespace bridgeland {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, never as JSON numbers.
Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const Shape& sh);
Shape shape_from_json(const Json& j);

Json to_json(const Wall& w);
Wall wall_from_json(const Json& j);
Json to_json(const std::vector<Wall>& walls);
std::vector<Wall> walls_from_json(const Json& j);

Json to_json(const NumericalSolution& sol);
NumericalSolution numsol_from_json(const Json& j);

Json to_json(const ChamberReport& rep);
ChamberReport chamber_from_json(const Json& j);

Json to_json(const GMatrix& g);
GMatrix gmatrix_from_json(const Json& j, const Context& ctx);

Json to_json(const PellContext& pell);

Json error_json(const std::string& kind, const std::string& message);

}  // namespace bridgeland
