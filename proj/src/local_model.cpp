#include "torifold/local_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace torifold {

namespace {

const Face& checked_face(const LabeledPolytope& p, const Face& face) {
  const auto idx = p.find_face(face.active);
  if (!idx) throw std::invalid_argument("not a face of the polytope");
  return p.faces()[*idx];
}

}  // namespace

IsotropyData isotropy_data(const LabeledPolytope& p, const Face& face) {
  IsotropyData data;
  data.face = checked_face(p, face);
  for (auto i : data.face.active) {
    data.normals.push_back(p.facet(i).normal);
    data.scaled.push_back(p.facet(i).scaled_normal());
  }
  if (data.normals.empty()) {
    data.isotropy_lattice = IntMatrix(0, p.dim());
    return data;
  }
  data.isotropy_lattice = saturate(rows_matrix(data.normals, p.dim()));
  return data;
}

FiniteAbelianGroup structure_group(const LabeledPolytope& p, const Face& face) {
  const IsotropyData data = isotropy_data(p, face);
  if (data.scaled.empty()) return {};
  return quotient_group(data.isotropy_lattice, rows_matrix(data.scaled, p.dim()));
}

LocalCone local_cone(const LabeledPolytope& p, const Face& face) {
  const Face& f = checked_face(p, face);
  LocalCone cone;
  cone.apex = p.barycenter(f);
  for (const auto& edge : edge_directions(p, f.vertices.front())) {
    const bool leaves = std::binary_search(f.active.begin(), f.active.end(), edge.dropped_facet);
    (leaves ? cone.generators : cone.span_directions).push_back(edge.direction);
  }
  return cone;
}

SliceWeights slice_weights(const LabeledPolytope& p, std::size_t vertex) {
  const auto& active = p.vertex_facets(vertex);
  RatMatrix e(active.size(), p.dim());
  for (std::size_t k = 0; k < active.size(); ++k) {
    const IntVector s = p.facet(active[k]).scaled_normal();
    for (std::size_t j = 0; j < p.dim(); ++j) e(k, j) = s[j];
  }
  const auto inv = inverse(e);
  if (!inv) throw InvariantViolation("scaled normals at a vertex are dependent");
  SliceWeights w;
  w.facets = active;
  for (std::size_t k = 0; k < active.size(); ++k) w.weights.push_back(inv->col_vector(k));
  return w;
}

}  // namespace torifold
