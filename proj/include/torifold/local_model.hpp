#pragma once

// Local invariants attached to a face F of a labeled polytope: the isotropy
// lattice, the orbifold structure group, the local cone and the weights of
// the slice representation.

#include "torifold/lattice.hpp"
#include "torifold/polytope.hpp"

#include <vector>

namespace torifold {

struct IsotropyData {
  Face face;
  std::vector<IntVector> normals;  // primitive g_F of the facets containing the face
  std::vector<IntVector> scaled;   // e_F = m_F g_F
  IntMatrix isotropy_lattice;      // saturation of span{g_F}, Hermite basis
};

/// The dual basis f_F to {e_F} at a vertex, in ambient coordinates:
/// <f_F, e_F'> = 1 if F = F' and 0 otherwise.
struct SliceWeights {
  std::vector<std::size_t> facets;
  std::vector<RatVector> weights;
};

/// Near a relative-interior point the polytope is apex + (span directions) x
/// (transverse cone). For a vertex the span part is empty.
struct LocalCone {
  RatVector apex;
  std::vector<IntVector> span_directions;
  std::vector<IntVector> generators;
};

/// Empty data for the whole polytope (trivial isotropy).
IsotropyData isotropy_data(const LabeledPolytope& p, const Face& face);

/// (ℓ ∩ h) / span{e_F}; cyclic of order m_F on a facet.
FiniteAbelianGroup structure_group(const LabeledPolytope& p, const Face& face);

LocalCone local_cone(const LabeledPolytope& p, const Face& face);

SliceWeights slice_weights(const LabeledPolytope& p, std::size_t vertex);

}  // namespace torifold
