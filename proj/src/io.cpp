#include "torifold/io.hpp"

#include <fstream>
#include <sstream>

namespace torifold {

namespace {

Integer parse_integer_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      const Rational r = parse_rational(j.get<std::string>());
      if (r.get_den() == 1) return r.get_num();
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError(where + ": expected an integer");
}

Rational parse_rational_field(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(parse_integer_field(j, where));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a rational \"p/q\"");
}

}  // namespace

LabeledPolytope parse_polytope(const Json& doc) {
  if (!doc.is_object()) throw ParseError("polytope document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  if (!doc.contains("halfspaces") || !doc["halfspaces"].is_array()) {
    throw ParseError("\"halfspaces\" must be an array");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<std::int64_t>());
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < doc["halfspaces"].size(); ++i) {
    const Json& h = doc["halfspaces"][i];
    const std::string where = "halfspace " + std::to_string(i);
    if (!h.is_object()) throw ParseError(where + ": expected an object");
    for (const char* key : {"normal", "offset", "label"}) {
      if (!h.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
    }
    if (!h["normal"].is_array()) throw ParseError(where + ": \"normal\" must be an array");
    HalfSpace half;
    for (const auto& x : h["normal"]) half.normal.push_back(parse_integer_field(x, where + " normal"));
    half.offset = parse_rational_field(h["offset"], where + " offset");
    half.label = parse_integer_field(h["label"], where + " label");
    hs.push_back(std::move(half));
  }
  return validate(dim, std::move(hs));
}

LabeledPolytope parse_polytope_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_polytope(doc);
}

LabeledPolytope load_polytope(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_polytope_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

Json to_json(const FiniteAbelianGroup& g) { return to_json(g.invariant_factors()); }

Json polytope_to_json(const LabeledPolytope& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) {
    Json entry;
    entry["normal"] = to_json(h.normal);
    entry["offset"] = to_string(h.offset);
    entry["label"] = to_json(h.label);
    hs.push_back(std::move(entry));
  }
  Json doc;
  doc["dim"] = p.dim();
  doc["halfspaces"] = std::move(hs);
  return doc;
}

Json to_json(const Fan& fan) {
  Json cones = Json::array();
  for (const auto& c : fan.cones) {
    Json rays = Json::array();
    for (const auto& g : c.generators) rays.push_back(to_json(g));
    cones.push_back(std::move(rays));
  }
  return cones;
}

Json to_json(const MorseReport& report) {
  Json j;
  j["xi"] = to_json(report.xi);
  j["indices"] = report.indices;
  j["morse_poly"] = report.morse_poly;
  j["poincare"] = report.poincare;
  return j;
}

Json delzant_report(const DelzantData& d, const LabeledPolytope& p) {
  const KernelGroupInfo k = kernel_group(d);
  const RegularityReport reg = verify_regular_level(d, p);
  Json j;
  j["projection"] = to_json(d.projection);
  j["scaled_offsets"] = to_json(d.scaled_offsets);
  j["kernel_basis"] = to_json(d.kernel_basis);
  j["level"] = to_json(d.level);
  j["torus_dim"] = k.torus_dim;
  j["component_group"] = to_json(k.component_group);
  j["regular"] = reg.regular;
  j["max_stabilizer_order"] = to_json(reg.max_stabilizer_order);
  Json stabs = Json::array();
  for (auto idx : p.proper_face_indices()) {
    const Face& f = p.faces()[idx];
    Json entry;
    entry["face"] = f.active;
    entry["invariant_factors"] = to_json(face_stabilizer(d, f));
    stabs.push_back(std::move(entry));
  }
  j["stabilizers"] = std::move(stabs);
  return j;
}

}  // namespace torifold
