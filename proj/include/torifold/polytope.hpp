#pragma once

// Labeled rational simple polytopes in the inward convention
//
//   Δ = { β : <β, y_i> >= η_i },  y_i primitive, label m_i >= 1.
//
// Facet order as given is the canonical facet indexing everywhere.

#include "torifold/arith.hpp"
#include "torifold/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace torifold {

struct HalfSpace {
  IntVector normal;
  Rational offset;
  Integer label = 1;

  /// m_i * y_i
  IntVector scaled_normal() const;
};

struct Face {
  std::vector<std::size_t> active;    // facets containing the face, sorted
  std::vector<std::size_t> vertices;  // polytope vertices on the face, sorted

  std::size_t codim() const { return active.size(); }
  bool is_whole() const { return active.empty(); }
};

struct EdgeDirection {
  std::size_t dropped_facet;
  IntVector direction;  // primitive, points into the polytope along the edge
};

class LabeledPolytope {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return halfspaces_.size(); }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
  const HalfSpace& facet(std::size_t i) const { return halfspaces_.at(i); }

  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<std::size_t>& vertex_facets(std::size_t v) const { return vertex_facets_.at(v); }
  const std::vector<Face>& faces() const { return faces_; }

  /// Notes produced while ingesting (re-primitivized normals).
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::optional<std::size_t> find_face(const std::vector<std::size_t>& active) const;
  std::optional<std::size_t> find_vertex(const RatVector& point) const;

  /// First facet whose inequality β fails, if any.
  std::optional<std::size_t> violated_facet(const RatVector& point) const;
  bool contains(const RatVector& point) const { return !violated_facet(point); }

  /// Barycenter of the face's vertices; lies in the relative interior.
  RatVector barycenter(const Face& face) const;
  RatVector interior_point() const { return barycenter(faces_.front()); }

  std::vector<std::size_t> proper_face_indices() const;

 private:
  friend LabeledPolytope validate(std::size_t dim, std::vector<HalfSpace> halfspaces);

  std::size_t dim_ = 0;
  std::vector<HalfSpace> halfspaces_;
  std::vector<RatVector> vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  std::vector<Face> faces_;
  std::vector<std::string> warnings_;
};

/// Checks boundedness, full dimension, irredundancy and simplicity, and caches
/// vertices and faces. Non-primitive normals are divided by their content
/// (offset rescaled) with a warning. Throws ValidationError.
LabeledPolytope validate(std::size_t dim, std::vector<HalfSpace> halfspaces);

/// Vertices sorted lexicographically.
const std::vector<RatVector>& enumerate_vertices(const LabeledPolytope& p);

/// All nonempty faces ordered by codimension, then active set: the whole
/// polytope first, vertices last.
const std::vector<Face>& face_lattice(const LabeledPolytope& p);

/// One entry per active facet of the vertex, in active-set order: the
/// primitive direction of the edge obtained by dropping that facet.
std::vector<EdgeDirection> edge_directions(const LabeledPolytope& p, std::size_t vertex);

struct IsomorphismResult {
  std::optional<RatVector> translation;  // Q = P + translation
  std::string reason;                    // why not, when absent

  explicit operator bool() const { return translation.has_value(); }
};

/// Labeled-polytope isomorphism: a translation carrying P onto Q with
/// matching labels on corresponding facets. Throws std::invalid_argument on
/// dimension mismatch.
IsomorphismResult compare_labeled(const LabeledPolytope& p, const LabeledPolytope& q);

std::optional<RatVector> is_isomorphic(const LabeledPolytope& p, const LabeledPolytope& q);

/// P + c, facet order and labels preserved.
LabeledPolytope translate(const LabeledPolytope& p, const RatVector& shift);

}  // namespace torifold
