#include "torifold/polytope.hpp"

#include "torifold/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace torifold {

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatMatrix normals_matrix(const std::vector<HalfSpace>& hs, const std::vector<std::size_t>& rows, std::size_t dim) {
  RatMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = hs[rows[i]].normal[j];
  return m;
}

// Nonzero kernel vector of a matrix with fewer pivots than columns.
RatVector kernel_direction(const RatMatrix& a) {
  const std::size_t n = a.cols();
  RatMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < n; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.add_row_multiple(i, r, Rational(-m(i, c)));
    pivots.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  RatVector d(n, 0);
  d[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) d[pivots[i]] = -m(i, free_col);
  return d;
}

std::optional<RatVector> recession_direction(std::size_t dim, const std::vector<HalfSpace>& hs) {
  std::vector<std::size_t> all(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) all[i] = i;
  const RatMatrix y = normals_matrix(hs, all, dim);
  // The normals miss a direction: the set contains a line (or is empty).
  if (rank(y) < dim) return kernel_direction(y);

  // Pointed cone {d : Y d >= 0}: nonzero iff it has an extreme ray, and every
  // extreme ray is cut out by dim-1 independent tight rows.
  std::optional<RatVector> found;
  for_each_subset(hs.size(), dim - 1, [&](const std::vector<std::size_t>& rows) {
    if (found) return;
    const RatMatrix m = normals_matrix(hs, rows, dim);
    if (rank(m) != dim - 1) return;
    RatVector d = kernel_direction(m);
    for (int sign : {1, -1}) {
      bool inside = true;
      for (const auto& h : hs) {
        if (sign * dot(h.normal, d) < 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        if (sign < 0)
          for (auto& x : d) x = -x;
        found = d;
        return;
      }
    }
  });
  return found;
}

struct VertexData {
  std::vector<RatVector> points;
  std::vector<std::vector<std::size_t>> tight;
};

VertexData find_vertices(std::size_t dim, const std::vector<HalfSpace>& hs) {
  std::map<RatVector, std::vector<std::size_t>> found;
  for_each_subset(hs.size(), dim, [&](const std::vector<std::size_t>& rows) {
    RatVector rhs;
    for (auto r : rows) rhs.push_back(hs[r].offset);
    const auto x = solve(normals_matrix(hs, rows, dim), rhs);
    if (!x || found.count(*x)) return;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const Rational v = dot(hs[i].normal, *x);
      if (v < hs[i].offset) return;
      if (v == hs[i].offset) tight.push_back(i);
    }
    found.emplace(*x, std::move(tight));
  });
  VertexData out;
  for (auto& [p, t] : found) {
    out.points.push_back(p);
    out.tight.push_back(t);
  }
  return out;
}

}  // namespace

IntVector HalfSpace::scaled_normal() const {
  IntVector s = normal;
  for (auto& x : s) x *= label;
  return s;
}

std::optional<std::size_t> LabeledPolytope::find_face(const std::vector<std::size_t>& active) const {
  std::vector<std::size_t> key = active;
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].active == key) return i;
  return std::nullopt;
}

std::optional<std::size_t> LabeledPolytope::find_vertex(const RatVector& point) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), point);
  if (it == vertices_.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> LabeledPolytope::violated_facet(const RatVector& point) const {
  if (point.size() != dim_) throw std::invalid_argument("point has wrong dimension");
  for (std::size_t i = 0; i < halfspaces_.size(); ++i)
    if (dot(halfspaces_[i].normal, point) < halfspaces_[i].offset) return i;
  return std::nullopt;
}

RatVector LabeledPolytope::barycenter(const Face& face) const {
  RatVector c(dim_, 0);
  for (auto v : face.vertices)
    for (std::size_t j = 0; j < dim_; ++j) c[j] += vertices_[v][j];
  const Rational count(static_cast<unsigned long>(face.vertices.size()));
  for (auto& x : c) x /= count;
  return c;
}

std::vector<std::size_t> LabeledPolytope::proper_face_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (!faces_[i].is_whole()) out.push_back(i);
  return out;
}

LabeledPolytope validate(std::size_t dim, std::vector<HalfSpace> halfspaces) {
  if (dim == 0) throw ValidationError("dimension must be at least 1");
  LabeledPolytope p;
  p.dim_ = dim;

  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    auto& h = halfspaces[i];
    if (h.normal.size() != dim) {
      throw ValidationError("halfspace " + std::to_string(i) + ": normal has length " +
                            std::to_string(h.normal.size()) + ", expected " + std::to_string(dim));
    }
    if (h.label < 1) throw ValidationError("label < 1 on halfspace " + std::to_string(i));
    const Integer g = content(h.normal);
    if (g == 0) throw ValidationError("halfspace " + std::to_string(i) + " has zero normal");
    if (g != 1) {
      p.warnings_.push_back("halfspace " + std::to_string(i) + ": normal " + format_vector(h.normal) +
                            " divided by " + g.get_str() + " to make it primitive");
      for (auto& x : h.normal) x /= g;
      h.offset /= g;
    }
  }

  if (const auto d = recession_direction(dim, halfspaces)) {
    throw ValidationError("unbounded: recession direction " + format_vector(*d));
  }

  VertexData vd = find_vertices(dim, halfspaces);
  if (vd.points.empty()) throw ValidationError("empty: the halfspaces have no common point");

  RatVector center(dim, 0);
  for (const auto& v : vd.points)
    for (std::size_t j = 0; j < dim; ++j) center[j] += v[j];
  for (auto& x : center) x /= Rational(static_cast<unsigned long>(vd.points.size()));
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    if (dot(halfspaces[i].normal, center) == halfspaces[i].offset) {
      throw ValidationError("not full-dimensional: halfspace " + std::to_string(i) +
                            " is tight on the whole polytope");
    }
  }

  // Each halfspace must cut out a facet: its tight vertices span an
  // affine hyperplane, and no earlier halfspace cuts out the same one.
  std::vector<std::vector<std::size_t>> tight_on(halfspaces.size());
  for (std::size_t v = 0; v < vd.points.size(); ++v)
    for (auto i : vd.tight[v]) tight_on[i].push_back(v);
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    const auto& tv = tight_on[i];
    std::size_t affine_rank = 0;
    if (!tv.empty()) {
      RatMatrix diffs(tv.size() - 1, dim);
      for (std::size_t a = 1; a < tv.size(); ++a)
        for (std::size_t j = 0; j < dim; ++j) diffs(a - 1, j) = vd.points[tv[a]][j] - vd.points[tv[0]][j];
      affine_rank = diffs.rows() ? rank(diffs) + 1 : 1;
    }
    if (affine_rank != dim) throw ValidationError("redundant halfspace " + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) {
      if (tight_on[j] == tv) {
        throw ValidationError("redundant halfspace " + std::to_string(i) + " (same facet as halfspace " +
                              std::to_string(j) + ")");
      }
    }
  }

  for (std::size_t v = 0; v < vd.points.size(); ++v) {
    if (vd.tight[v].size() != dim) {
      throw ValidationError("not simple at vertex " + format_vector(vd.points[v]) + ": " +
                            std::to_string(vd.tight[v].size()) + " facets meet there");
    }
  }

  p.halfspaces_ = std::move(halfspaces);
  p.vertices_ = std::move(vd.points);
  p.vertex_facets_ = std::move(vd.tight);

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> faces;
  for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
    const auto& act = p.vertex_facets_[v];
    const std::size_t subsets = std::size_t{1} << act.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t b = 0; b < act.size(); ++b)
        if (mask & (std::size_t{1} << b)) s.push_back(act[b]);
      faces[s].push_back(v);
    }
  }
  for (auto& [active, verts] : faces) {
    std::sort(verts.begin(), verts.end());
    p.faces_.push_back(Face{active, verts});
  }
  std::stable_sort(p.faces_.begin(), p.faces_.end(),
                   [](const Face& a, const Face& b) { return a.codim() < b.codim(); });
  return p;
}

const std::vector<RatVector>& enumerate_vertices(const LabeledPolytope& p) { return p.vertices(); }

const std::vector<Face>& face_lattice(const LabeledPolytope& p) { return p.faces(); }

std::vector<EdgeDirection> edge_directions(const LabeledPolytope& p, std::size_t vertex) {
  const auto& active = p.vertex_facets(vertex);
  RatMatrix y(active.size(), p.dim());
  for (std::size_t k = 0; k < active.size(); ++k)
    for (std::size_t j = 0; j < p.dim(); ++j) y(k, j) = p.facet(active[k]).normal[j];
  const auto inv = inverse(y);
  if (!inv) throw InvariantViolation("active normals at a vertex are dependent");
  // Column k of Y^{-1} pairs to 1 with y_{i_k} and to 0 with the others.
  std::vector<EdgeDirection> out;
  for (std::size_t k = 0; k < active.size(); ++k) {
    out.push_back(EdgeDirection{active[k], clear_denominators(inv->col_vector(k))});
  }
  return out;
}

IsomorphismResult compare_labeled(const LabeledPolytope& p, const LabeledPolytope& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  if (p.facet_count() != q.facet_count()) return {std::nullopt, "facet counts differ"};

  std::map<IntVector, std::size_t> q_by_normal;
  for (std::size_t i = 0; i < q.facet_count(); ++i) q_by_normal.emplace(q.facet(i).normal, i);
  std::vector<std::size_t> match(p.facet_count());
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    const auto it = q_by_normal.find(p.facet(i).normal);
    if (it == q_by_normal.end()) {
      return {std::nullopt, "facet normals differ: no match for " + format_vector(p.facet(i).normal)};
    }
    match[i] = it->second;
  }

  const auto& basis = p.vertex_facets(0);
  RatMatrix y(p.dim(), p.dim());
  RatVector rhs(p.dim());
  for (std::size_t k = 0; k < p.dim(); ++k) {
    for (std::size_t j = 0; j < p.dim(); ++j) y(k, j) = p.facet(basis[k]).normal[j];
    rhs[k] = q.facet(match[basis[k]]).offset - p.facet(basis[k]).offset;
  }
  const auto shift = solve(y, rhs);
  if (!shift) throw InvariantViolation("active normals at a vertex are dependent");

  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    if (q.facet(match[i]).offset != p.facet(i).offset + dot(p.facet(i).normal, *shift)) {
      return {std::nullopt, "offsets are not related by a translation at facet " + std::to_string(i)};
    }
  }
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    if (q.facet(match[i]).label != p.facet(i).label) {
      return {std::nullopt, "labels differ at facet " + std::to_string(i) + ": " + p.facet(i).label.get_str() +
                                " vs " + q.facet(match[i]).label.get_str()};
    }
  }
  return {*shift, ""};
}

std::optional<RatVector> is_isomorphic(const LabeledPolytope& p, const LabeledPolytope& q) {
  return compare_labeled(p, q).translation;
}

LabeledPolytope translate(const LabeledPolytope& p, const RatVector& shift) {
  std::vector<HalfSpace> hs = p.halfspaces();
  for (auto& h : hs) h.offset += dot(h.normal, shift);
  return validate(p.dim(), std::move(hs));
}

}  // namespace torifold
