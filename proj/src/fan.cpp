#include "torifold/fan.hpp"

#include <algorithm>
#include <stdexcept>

namespace torifold {

std::vector<IntVector> Fan::rays() const {
  std::vector<IntVector> out;
  for (const auto& c : cones)
    if (c.dim() == 1) out.push_back(c.generators.front());
  std::sort(out.begin(), out.end());
  return out;
}

Cone dual_cone(const LabeledPolytope& p, const Face& face) {
  Cone c;
  for (auto i : face.active) c.generators.push_back(p.facet(i).normal);
  std::sort(c.generators.begin(), c.generators.end());
  return c;
}

bool satisfies_dual_cone_definition(const LabeledPolytope& p, const Face& face, const Cone& cone) {
  const auto& verts = p.vertices();
  for (const auto& alpha : cone.generators) {
    for (auto b : face.vertices) {
      const Rational on_face = dot(alpha, verts[b]);
      for (const auto& other : verts) {
        if (on_face - dot(alpha, other) > 0) return false;
      }
    }
  }
  return true;
}

Fan build_fan(const LabeledPolytope& p, bool verify) {
  Fan fan;
  fan.ambient_dim = p.dim();
  for (const auto& face : p.faces()) {
    Cone c = dual_cone(p, face);
    if (verify && !satisfies_dual_cone_definition(p, face, c)) {
      throw InvariantViolation("dual cone of face with facets " + format_vector(IntVector(face.active.begin(), face.active.end())) +
                               " violates <α, β - β'> <= 0");
    }
    fan.cones.push_back(std::move(c));
  }
  std::sort(fan.cones.begin(), fan.cones.end());
  fan.cones.erase(std::unique(fan.cones.begin(), fan.cones.end()), fan.cones.end());
  return fan;
}

bool fans_equal(const Fan& a, const Fan& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("dimension mismatch");
  return a.cones == b.cones;
}

}  // namespace torifold
