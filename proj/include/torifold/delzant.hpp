#pragma once

// Reduction construction of the toric orbifold of a labeled polytope.
//
// With N facets, the projection ϖ : R^N -> R^n sends e_i to m_i y_i. Its
// kernel k gives the exact sequence 0 -> k -> R^N -> R^n -> 0, and
// K = { [α] in R^N / Z^N : ϖ(α) in Z^n } acts on C^N. A point β of the
// polytope corresponds to the level-set point with squared moduli
//
//   s_i(β) = <β, m_i y_i> - m_i η_i  >= 0,
//
// and the K moment map j*(s) = kernel_basis · s is the constant κ.

#include "torifold/lattice.hpp"
#include "torifold/polytope.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torifold {

struct DelzantData {
  IntMatrix projection;      // n x N, column i = m_i y_i
  RatVector scaled_offsets;  // c_i = m_i η_i
  IntMatrix kernel_basis;    // (N - n) x N, Hermite basis of ker ϖ ∩ Z^N
  RatVector level;           // κ = kernel_basis · s(β) for any β

  std::size_t facet_count() const { return projection.cols(); }
  std::size_t dim() const { return projection.rows(); }
};

struct KernelGroupInfo {
  std::size_t torus_dim = 0;
  FiniteAbelianGroup component_group;  // π0(K) = Z^n / ϖ(Z^N)
};

struct RegularityReport {
  bool regular = true;
  Integer max_stabilizer_order = 1;
  std::string failure;
};

struct ReductionReport {
  bool pass = true;
  std::size_t samples_checked = 0;
  std::size_t vertices_checked = 0;
  std::size_t vertices_hit_by_samples = 0;
  bool vertices_attained = true;
  std::optional<std::string> counterexample;
};

/// Thrown by sample_point for a point outside the polytope.
class OutsidePolytope : public std::invalid_argument {
 public:
  OutsidePolytope(std::size_t facet, const std::string& what) : std::invalid_argument(what), facet_(facet) {}
  std::size_t facet() const { return facet_; }

 private:
  std::size_t facet_;
};

DelzantData build_construction(const LabeledPolytope& p);

KernelGroupInfo kernel_group(const DelzantData& d);

/// K_z for z vanishing exactly on the face's facets S: ϖ_S^{-1}(Z^n) / Z^S,
/// read off the Smith diagonal of the column submatrix ϖ_S. Throws
/// std::invalid_argument for a face with no vertices or facet index out of
/// range, std::domain_error when ϖ_S has dependent columns.
FiniteAbelianGroup face_stabilizer(const DelzantData& d, const Face& face);

/// Every vertex has independent active normals and every face stabilizer is
/// finite; reports the largest stabilizer order.
RegularityReport verify_regular_level(const DelzantData& d, const LabeledPolytope& p);

/// Squared moduli s(β). Throws OutsidePolytope naming the violated facet.
RatVector sample_point(const LabeledPolytope& p, const RatVector& beta);

/// kernel_basis · s
RatVector moment_level(const DelzantData& d, const RatVector& moduli);

/// Symbolic form of the constancy of j*∘s: kernel_basis · ϖᵀ = 0 and
/// -kernel_basis · c = κ.
bool level_identity_holds(const DelzantData& d);

/// Seeded rational points of the polytope: convex combinations of the
/// vertices with positive integer weights in [1, 16], so they are interior.
std::vector<RatVector> random_interior_points(const LabeledPolytope& p, std::size_t count, std::uint64_t seed);

/// For every sample: j*(s) = κ and s >= 0. For every vertex: s vanishes
/// exactly on its facets and sits on the same level. Samples outside the
/// polytope propagate OutsidePolytope.
ReductionReport verify_reduction_invariants(const DelzantData& d, const LabeledPolytope& p,
                                            const std::vector<RatVector>& samples);

}  // namespace torifold
