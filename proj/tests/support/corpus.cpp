#include "corpus.hpp"

#include "torifold/lattice.hpp"

namespace torifold::testing {

LabeledPolytope make(std::size_t dim, const std::vector<Spec>& halfspaces) {
  std::vector<HalfSpace> hs;
  for (const auto& s : halfspaces) {
    HalfSpace h;
    for (long x : s.normal) h.normal.emplace_back(x);
    h.offset = parse_rational(s.offset);
    h.label = s.label;
    hs.push_back(std::move(h));
  }
  return validate(dim, std::move(hs));
}

LabeledPolytope unit_triangle(long l0, long l1, long l2) {
  return make(2, {{{1, 0}, "0", l0}, {{0, 1}, "0", l1}, {{-1, -1}, "-1", l2}});
}

LabeledPolytope w2() { return make(2, {{{1, 0}, "0"}, {{0, 1}, "0"}, {{-1, -2}, "-2"}}); }

LabeledPolytope interval(long n, long m) { return make(1, {{{1}, "0", n}, {{-1}, "-1", m}}); }

LabeledPolytope cube(std::size_t dim, long side) {
  std::vector<Spec> specs;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<long> e(dim, 0);
    e[i] = 1;
    specs.push_back({e, "0"});
    e[i] = -1;
    specs.push_back({e, std::to_string(-side)});
  }
  return make(dim, specs);
}

LabeledPolytope simplex(std::size_t dim, long scale) { return weighted_simplex(std::vector<long>(dim, 1), scale); }

LabeledPolytope weighted_simplex(const std::vector<long>& weights, long scale) {
  const std::size_t dim = weights.size();
  std::vector<Spec> specs;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<long> e(dim, 0);
    e[i] = 1;
    specs.push_back({e, "0"});
  }
  std::vector<long> last;
  for (long w : weights) last.push_back(-w);
  specs.push_back({last, std::to_string(-scale)});
  return make(dim, specs);
}

LabeledPolytope product(const LabeledPolytope& a, const LabeledPolytope& b) {
  const std::size_t dim = a.dim() + b.dim();
  std::vector<HalfSpace> hs;
  for (const auto& h : a.halfspaces()) {
    HalfSpace x = h;
    x.normal.resize(dim, 0);
    hs.push_back(std::move(x));
  }
  for (const auto& h : b.halfspaces()) {
    HalfSpace x = h;
    x.normal.assign(a.dim(), 0);
    x.normal.insert(x.normal.end(), h.normal.begin(), h.normal.end());
    hs.push_back(std::move(x));
  }
  return validate(dim, std::move(hs));
}

LabeledPolytope dilate(const LabeledPolytope& p, long factor) {
  std::vector<HalfSpace> hs = p.halfspaces();
  for (auto& h : hs) h.offset *= factor;
  return validate(p.dim(), std::move(hs));
}

LabeledPolytope with_labels(const LabeledPolytope& p, const std::vector<long>& labels) {
  std::vector<HalfSpace> hs = p.halfspaces();
  for (std::size_t i = 0; i < hs.size(); ++i) hs[i].label = labels.at(i);
  return validate(p.dim(), std::move(hs));
}

LabeledPolytope permute_facets(const LabeledPolytope& p, const std::vector<std::size_t>& order) {
  std::vector<HalfSpace> hs;
  for (auto i : order) hs.push_back(p.facet(i));
  return validate(p.dim(), std::move(hs));
}

LabeledPolytope random_simple_polytope(std::size_t dim, std::mt19937_64& rng, long max_label) {
  auto uniform = [&rng](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  while (true) {
    LabeledPolytope base = (rng() % 2 == 0) ? cube(dim, dim == 2 ? 6 : 4) : simplex(dim, dim == 2 ? 8 : 6);
    std::vector<HalfSpace> hs = base.halfspaces();
    const long cuts = uniform(1, dim == 2 ? 3 : 2);
    bool ok = true;
    for (long c = 0; c < cuts && ok; ++c) {
      IntVector y;
      for (std::size_t j = 0; j < dim; ++j) y.emplace_back(uniform(-3, 3));
      if (content(y) == 0) {
        ok = false;
        break;
      }
      y = primitive_vector(y);
      Rational lo, hi;
      for (std::size_t v = 0; v < base.vertices().size(); ++v) {
        const Rational t = dot(y, base.vertices()[v]);
        if (v == 0 || t < lo) lo = t;
        if (v == 0 || t > hi) hi = t;
      }
      HalfSpace h;
      h.normal = y;
      h.offset = lo + (hi - lo) * Rational(uniform(1, 7), 17);
      hs.push_back(h);
      try {
        base = validate(dim, hs);
      } catch (const ValidationError&) {
        ok = false;
      }
    }
    if (!ok) continue;
    for (auto& h : hs) h.label = uniform(1, max_label);
    try {
      return validate(dim, hs);
    } catch (const ValidationError&) {
    }
  }
}

const std::vector<Named>& corpus() {
  static const std::vector<Named> all = [] {
    std::vector<Named> c{
        {"T1", unit_triangle()},
        {"T1 labels (2,1,1)", unit_triangle(2, 1, 1)},
        {"2 T1", dilate(unit_triangle(), 2)},
        {"W2", w2()},
        {"P(1,2,3) triangle", weighted_simplex({2, 3}, 6)},
        {"unit square", cube(2)},
        {"square labels (1,2,3,4)", with_labels(cube(2), {1, 2, 3, 4})},
        {"hexagon", make(2, {{{1, 0}, "0"}, {{0, 1}, "0"}, {{-1, 0}, "-2"}, {{0, -1}, "-2"}, {{1, 1}, "1"}, {{-1, -1}, "-3"}})},
        {"unit cube", cube(3)},
        {"simplex 3", simplex(3)},
        {"prism T1 x I", product(unit_triangle(), interval(1, 1))},
        {"P(1,1,2,3) simplex", weighted_simplex({2, 3, 6}, 6)},
        {"labeled cube", with_labels(cube(3), {2, 1, 3, 1, 1, 4})},
        {"I(3,5)", interval(3, 5)},
        {"I(6,4)", interval(6, 4)},
        {"I(2,2)", interval(2, 2)},
        {"cube 4", cube(4)},
        {"simplex 4", simplex(4)},
    };
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 22; ++i) c.push_back({"random 2D #" + std::to_string(i), random_simple_polytope(2, rng)});
    for (int i = 0; i < 22; ++i) c.push_back({"random 3D #" + std::to_string(i), random_simple_polytope(3, rng)});
    return c;
  }();
  return all;
}

std::vector<Named> delzant_manifolds() {
  return {
      {"simplex 2", simplex(2)},
      {"simplex 3", simplex(3)},
      {"unit square", cube(2)},
      {"unit cube", cube(3)},
      {"interval", interval(1, 1)},
      {"T1 x I", product(unit_triangle(), interval(1, 1))},
      {"T1 x T1", product(unit_triangle(), unit_triangle())},
      {"hexagon", make(2, {{{1, 0}, "0"}, {{0, 1}, "0"}, {{-1, 0}, "-2"}, {{0, -1}, "-2"}, {{1, 1}, "1"}, {{-1, -1}, "-3"}})},
  };
}

}  // namespace torifold::testing
