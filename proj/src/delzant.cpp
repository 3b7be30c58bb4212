#include "torifold/delzant.hpp"

#include <algorithm>
#include <random>

namespace torifold {

DelzantData build_construction(const LabeledPolytope& p) {
  const std::size_t n = p.dim();
  const std::size_t facets = p.facet_count();
  DelzantData d;
  d.projection = IntMatrix(n, facets);
  for (std::size_t i = 0; i < facets; ++i) {
    const IntVector col = p.facet(i).scaled_normal();
    for (std::size_t r = 0; r < n; ++r) d.projection(r, i) = col[r];
    d.scaled_offsets.push_back(Rational(p.facet(i).label) * p.facet(i).offset);
  }
  if (rank(d.projection) != n) throw InvariantViolation("projection does not have full row rank");
  d.kernel_basis = integer_kernel(d.projection);
  d.level = moment_level(d, sample_point(p, p.interior_point()));
  if (!level_identity_holds(d)) throw InvariantViolation("level is not constant on the polytope");
  return d;
}

KernelGroupInfo kernel_group(const DelzantData& d) {
  KernelGroupInfo info;
  info.torus_dim = d.facet_count() - d.dim();
  info.component_group = FiniteAbelianGroup::from_chain(smith_normal_form(d.projection).diagonal());
  return info;
}

FiniteAbelianGroup face_stabilizer(const DelzantData& d, const Face& face) {
  if (face.vertices.empty()) throw std::invalid_argument("face_stabilizer: empty face");
  if (face.active.empty()) return {};
  IntMatrix sub(d.dim(), face.active.size());
  for (std::size_t k = 0; k < face.active.size(); ++k) {
    const std::size_t i = face.active[k];
    if (i >= d.facet_count()) throw std::invalid_argument("face_stabilizer: facet index out of range");
    for (std::size_t r = 0; r < d.dim(); ++r) sub(r, k) = d.projection(r, i);
  }
  // U ϖ_S V = D: α with ϖ_S α integral are exactly V(D^{-1} Z^n), so the
  // quotient by Z^S is the sum of Z/d_k.
  const auto diag = smith_normal_form(sub).diagonal();
  if (std::find(diag.begin(), diag.end(), Integer(0)) != diag.end()) {
    throw std::domain_error("face_stabilizer: facet normals are dependent, stabilizer is not finite");
  }
  return FiniteAbelianGroup::from_chain(diag);
}

RegularityReport verify_regular_level(const DelzantData& d, const LabeledPolytope& p) {
  RegularityReport report;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto& active = p.vertex_facets(v);
    IntMatrix normals(active.size(), p.dim());
    for (std::size_t k = 0; k < active.size(); ++k)
      for (std::size_t j = 0; j < p.dim(); ++j) normals(k, j) = p.facet(active[k]).normal[j];
    if (active.size() != p.dim() || rank(normals) != p.dim()) {
      report.regular = false;
      report.failure = "dependent normals at vertex " + format_vector(p.vertices()[v]);
      return report;
    }
  }
  for (const auto& face : p.faces()) {
    try {
      const Integer order = face_stabilizer(d, face).order();
      if (order > report.max_stabilizer_order) report.max_stabilizer_order = order;
    } catch (const std::domain_error& e) {
      report.regular = false;
      report.failure = e.what();
      return report;
    }
  }
  return report;
}

RatVector sample_point(const LabeledPolytope& p, const RatVector& beta) {
  if (const auto bad = p.violated_facet(beta)) {
    throw OutsidePolytope(*bad, "point " + format_vector(beta) + " is outside the polytope (violates facet " +
                                    std::to_string(*bad) + ")");
  }
  RatVector s;
  s.reserve(p.facet_count());
  for (const auto& h : p.halfspaces()) {
    s.push_back(Rational(h.label) * (dot(h.normal, beta) - h.offset));
  }
  return s;
}

RatVector moment_level(const DelzantData& d, const RatVector& moduli) {
  RatVector level;
  for (std::size_t r = 0; r < d.kernel_basis.rows(); ++r) level.push_back(dot(d.kernel_basis.row_vector(r), moduli));
  return level;
}

bool level_identity_holds(const DelzantData& d) {
  const IntMatrix product = d.kernel_basis * d.projection.transpose();
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j)
      if (product(i, j) != 0) return false;
  RatVector negated = d.scaled_offsets;
  for (auto& x : negated) x = -x;
  return moment_level(d, negated) == d.level;
}

std::vector<RatVector> random_interior_points(const LabeledPolytope& p, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatVector> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    RatVector beta(p.dim(), 0);
    Integer total = 0;
    for (const auto& v : p.vertices()) {
      const Integer w = static_cast<unsigned long>(rng() % 16 + 1);
      total += w;
      for (std::size_t j = 0; j < p.dim(); ++j) beta[j] += Rational(w) * v[j];
    }
    for (auto& x : beta) x /= Rational(total);
    out.push_back(std::move(beta));
  }
  return out;
}

ReductionReport verify_reduction_invariants(const DelzantData& d, const LabeledPolytope& p,
                                            const std::vector<RatVector>& samples) {
  ReductionReport report;
  auto fail = [&](std::string why) {
    if (!report.counterexample) report.counterexample = std::move(why);
    report.pass = false;
  };

  for (const auto& beta : samples) {
    const RatVector s = sample_point(p, beta);
    ++report.samples_checked;
    if (moment_level(d, s) != d.level) fail("level differs at " + format_vector(beta));
    if (std::any_of(s.begin(), s.end(), [](const Rational& x) { return x < 0; })) {
      fail("negative squared modulus at " + format_vector(beta));
    }
    if (p.find_vertex(beta)) ++report.vertices_hit_by_samples;
  }

  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const RatVector s = sample_point(p, p.vertices()[v]);
    ++report.vertices_checked;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == 0) zeros.push_back(i);
    if (zeros != p.vertex_facets(v) || moment_level(d, s) != d.level) {
      report.vertices_attained = false;
      fail("vertex " + format_vector(p.vertices()[v]) + " is not attained on the level set");
    }
  }
  return report;
}

}  // namespace torifold
