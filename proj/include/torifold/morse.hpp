#pragma once

#include "torifold/polytope.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace torifold {

/// Coefficients c_0, c_1, ... of Σ c_k x^k.
using Polynomial = std::vector<std::int64_t>;

struct MorseReport {
  IntVector xi;
  std::vector<int> indices;  // per vertex, in vertex order
  Polynomial poincare;       // Betti numbers from the face numbers (h-vector)
  Polynomial morse_poly;     // Σ_v x^{index(v)}
};

/// <ξ, d> != 0 for every edge direction d. Throws std::invalid_argument for
/// ξ = 0 or a length mismatch.
bool is_generic(const LabeledPolytope& p, const IntVector& xi);

/// 2 * #{edges at v with <ξ, d> < 0}. Throws std::invalid_argument unless ξ
/// is generic.
int vertex_index(const LabeledPolytope& p, std::size_t vertex, const IntVector& xi);

/// Σ_v x^{index(v)}, length 2n + 1.
Polynomial poincare_polynomial(const LabeledPolytope& p, const IntVector& xi);

/// b_{2k} = h_k where Σ h_k t^k = Σ_i f_i (t - 1)^i and f_i counts
/// i-dimensional faces. Length 2n + 1, independent of any direction.
Polynomial betti_from_face_numbers(const LabeledPolytope& p);

/// Q with M - P = (1 + x) Q when Q exists with nonnegative coefficients;
/// nullopt otherwise. Q = 0 is the empty list.
std::optional<Polynomial> morse_inequality_check(const Polynomial& morse, const Polynomial& poincare);

MorseReport morse_report(const LabeledPolytope& p, const IntVector& xi);

/// Seeded draw of a generic integer direction with entries in [-bound, bound].
IntVector random_generic_direction(const LabeledPolytope& p, std::uint64_t seed, int bound = 9);

}  // namespace torifold
