#pragma once

// JSON encodings.
//
// Polytope file:
//   { "dim": n,
//     "halfspaces": [ { "normal": [int...], "offset": "p/q", "label": int }, ... ] }
//
// Rationals are written as "p/q" (q > 0) or "p". Integers are JSON numbers
// when they fit in 64 bits and decimal strings otherwise.

#include "torifold/delzant.hpp"
#include "torifold/fan.hpp"
#include "torifold/lattice.hpp"
#include "torifold/morse.hpp"
#include "torifold/polytope.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace torifold {

using Json = nlohmann::ordered_json;

/// Throws ParseError for malformed documents; validation errors propagate
/// as ValidationError.
LabeledPolytope parse_polytope(const Json& doc);
LabeledPolytope parse_polytope_text(const std::string& text);
LabeledPolytope load_polytope(const std::filesystem::path& path);

Json polytope_to_json(const LabeledPolytope& p);

Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const Fan& fan);
Json to_json(const MorseReport& report);

/// {projection, scaled_offsets, kernel_basis, level, torus_dim,
///  component_group, regular, max_stabilizer_order,
///  stabilizers: [{face, invariant_factors}]}
Json delzant_report(const DelzantData& d, const LabeledPolytope& p);

}  // namespace torifold
