#pragma once

// Exact integer and rational linear algebra: Smith and Hermite normal forms,
// saturation, primitive vectors and finite abelian quotients of lattices.
// Lattices live in Z^n with standard coordinates and are given by matrices
// whose rows are the basis vectors.

#include "torifold/arith.hpp"
#include "torifold/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torifold {

/// A finite abelian group in invariant-factor form Z/f1 x Z/f2 x ... with
/// f1 | f2 | ... and every fi >= 2. The empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Accepts a divisibility chain of positive integers (typically a Smith
  /// diagonal); unit entries are dropped. Throws std::invalid_argument on a
  /// non-positive entry or a broken chain.
  static FiniteAbelianGroup from_chain(const std::vector<Integer>& chain);

  /// Z/n, trivial for n = 1.
  static FiniteAbelianGroup cyclic(const Integer& n);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// "trivial", "Z/3", "Z/2 x Z/4"
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ...,
/// nonnegative, zeros last.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};

/// U * A = H, H in row Hermite form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix H;
  IntMatrix U;
};

/// v / gcd(v). Throws std::invalid_argument for the zero vector.
IntVector primitive_vector(const IntVector& v);

SmithDecomposition smith_normal_form(const IntMatrix& a);
HermiteDecomposition hermite_normal_form(const IntMatrix& a);

/// Canonical basis (nonzero HNF rows) of the lattice generated by the rows.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Lattice equality by HNF comparison.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Basis of (Q-span of rows of B) ∩ Z^n, in Hermite form. Rows of B must be
/// linearly independent.
IntMatrix saturate(const IntMatrix& basis);

/// Invariant factors of L / S where the rows of S lie in the row lattice of
/// L and both have full rank k.
FiniteAbelianGroup quotient_group(const IntMatrix& lattice, const IntMatrix& sublattice);

/// Hermite-reduced basis (as rows) of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular integer matrix. Throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

std::size_t rank(const RatMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Exact inverse; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Solution of the square system A x = b; nullopt when A is singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Coordinates X with X * L = S (rows of S in the Q-span of the rows of L,
/// L of full row rank); nullopt when some row of S is outside the span.
std::optional<RatMatrix> coordinates_in_basis(const RatMatrix& basis, const RatMatrix& vectors);

}  // namespace torifold
