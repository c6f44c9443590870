#include "bridgeland/io.hpp"

namespace bridgeland {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail("ParseError", std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text(const Json& j) {
  if (!j.is_string()) fail("ParseError", "expected a string, got " + j.dump());
  return j.get<std::string>();
}

Int int_from_json(const Json& j) {
  Rat q = rat_from_json(j);
  if (!is_integer(q)) fail("ParseError", "expected an integer, got " + j.dump());
  return q.get_num();
}

Json optional_wall(const std::optional<Wall>& w) { return w ? to_json(*w) : Json(nullptr); }

std::optional<Wall> optional_wall_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return wall_from_json(j.at(key));
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) { return parse_rat(text(j)); }

Json to_json(const Shape& sh) {
  if (const auto* l = std::get_if<VLine>(&sh)) return {{"vline", {{"s", to_json(l->s)}}}};
  const Circle& c = std::get<Circle>(sh);
  return {{"circle", {{"center", to_json(c.center)}, {"radius_sq", to_json(c.radius_sq)}}}};
}

Shape shape_from_json(const Json& j) {
  if (j.is_object() && j.contains("vline")) return VLine{rat_from_json(field(j.at("vline"), "s"))};
  const Json& c = field(j, "circle");
  Circle out{rat_from_json(field(c, "center")), rat_from_json(field(c, "radius_sq"))};
  if (sgn(out.radius_sq) <= 0) fail("ParseError", "circle radius_sq must be positive");
  return out;
}

Json to_json(const Wall& w) {
  Json j;
  j["shape"] = to_json(w.shape);
  j["witness"] = to_string(w.witness);
  j["codim0"] = w.codim0;
  j["m"] = w.label ? Json(*w.label) : Json(nullptr);
  return j;
}

Wall wall_from_json(const Json& j) {
  Wall w;
  w.shape = shape_from_json(field(j, "shape"));
  w.witness = parse_vector(text(field(j, "witness")));
  const Json& c = field(j, "codim0");
  if (!c.is_boolean()) fail("ParseError", "codim0 must be a boolean");
  w.codim0 = c.get<bool>();
  if (j.contains("m") && !j.at("m").is_null()) {
    if (!j.at("m").is_number_integer()) fail("ParseError", "m must be an integer or null");
    w.label = j.at("m").get<long>();
  }
  return w;
}

Json to_json(const std::vector<Wall>& walls) {
  Json arr = Json::array();
  for (const Wall& w : walls) arr.push_back(to_json(w));
  return arr;
}

std::vector<Wall> walls_from_json(const Json& j) {
  if (!j.is_array()) fail("ParseError", "expected an array of walls");
  std::vector<Wall> out;
  for (const Json& item : j) out.push_back(wall_from_json(item));
  return out;
}

Json to_json(const NumericalSolution& sol) {
  return {{"v1", to_string(sol.v1)}, {"v2", to_string(sol.v2)}, {"l1", to_string(sol.l1)}, {"l2", to_string(sol.l2)}};
}

NumericalSolution numsol_from_json(const Json& j) {
  return {parse_vector(text(field(j, "v1"))), parse_vector(text(field(j, "v2"))), int_from_json(field(j, "l1")),
          int_from_json(field(j, "l2"))};
}

Json to_json(const ChamberReport& rep) {
  Json j;
  j["kind"] = to_string(rep.kind);
  j["wall"] = optional_wall(rep.wall);
  j["inner"] = optional_wall(rep.inner);
  j["outer"] = optional_wall(rep.outer);
  return j;
}

ChamberReport chamber_from_json(const Json& j) {
  std::string kind = text(field(j, "kind"));
  ChamberReport rep;
  if (kind == "OnWall")
    rep.kind = ChamberReport::Kind::OnWall;
  else if (kind == "Gieseker")
    rep.kind = ChamberReport::Kind::Gieseker;
  else if (kind == "DualGieseker")
    rep.kind = ChamberReport::Kind::DualGieseker;
  else if (kind == "Bounded")
    rep.kind = ChamberReport::Kind::Bounded;
  else
    fail("ParseError", "unknown chamber kind '" + kind + "'");
  rep.wall = optional_wall_from(j, "wall");
  rep.inner = optional_wall_from(j, "inner");
  rep.outer = optional_wall_from(j, "outer");
  return rep;
}

Json to_json(const GMatrix& g) {
  return {{"entries", {to_string(g.m.a), to_string(g.m.b), to_string(g.m.c), to_string(g.m.d)}}, {"det", g.det}};
}

GMatrix gmatrix_from_json(const Json& j, const Context& ctx) {
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != 4) fail("ParseError", "entries must hold four surds");
  GMatrix g = to_g({parse_surd(text(e[0])), parse_surd(text(e[1])), parse_surd(text(e[2])), parse_surd(text(e[3]))}, ctx);
  if (j.contains("det") && j.at("det") != g.det) fail("ParseError", "det does not match the entries");
  return g;
}

Json to_json(const PellContext& pell) {
  Json j;
  j["n"] = pell.n;
  j["ell"] = pell.ell;
  j["generator"] = to_string(pell.generator_matrix());
  j["epsilon"] = pell.epsilon;
  j["torsion"] = pell.torsion ? Json(to_string(pell.torsion->matrix(pell.ell))) : Json(nullptr);
  return j;
}

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace bridgeland
