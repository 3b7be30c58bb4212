#pragma once

#include "torifold/polytope.hpp"

#include <cstddef>
#include <vector>

namespace torifold {

/// Simplicial cone given by its primitive ray generators, sorted
/// lexicographically. No generators means the zero cone.
struct Cone {
  std::vector<IntVector> generators;

  std::size_t dim() const { return generators.size(); }

  friend bool operator==(const Cone& a, const Cone& b) { return a.generators == b.generators; }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
    return a.generators < b.generators;
  }
};

/// Dual cones of all faces of a polytope, canonically ordered (by dimension,
/// then generators).
struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<Cone> cones;

  /// One-dimensional cones, sorted.
  std::vector<IntVector> rays() const;
};

/// Nonnegative span of the inward normals of the facets containing the face.
Cone dual_cone(const LabeledPolytope& p, const Face& face);

/// Checks <α, β - β'> <= 0 for every generator α, every vertex β of the face
/// and every vertex β' of the polytope.
bool satisfies_dual_cone_definition(const LabeledPolytope& p, const Face& face, const Cone& cone);

/// Labels are ignored. With verify set, every cone is re-checked against the
/// defining inequality and a failure throws InvariantViolation.
Fan build_fan(const LabeledPolytope& p, bool verify = false);

/// Throws std::invalid_argument on ambient dimension mismatch.
bool fans_equal(const Fan& a, const Fan& b);

}  // namespace torifold
