#pragma once

#include <optional>
#include <vector>

#include "jacobi/cohomology.hpp"
#include "jacobi/hilbert.hpp"

namespace jacobi {

enum class CharOrder { First, Second };

/// A characteristic subvariety of P(R_1) = P^8 in coordinates z1..z9.
struct CharVariety {
  CharOrder order = CharOrder::First;
  RingPtr ring;
  /// Nine quadrics for the first, one cubic for the second.
  std::vector<Polynomial> equations;
  /// Multiplication matrix S^k(R_1) -> R_k, one row per sorted index tuple
  /// (45 x 9, resp. 165 x 1).
  ExactMatrix m;
  /// Transpose of m after the duality scaling (9 x 45, resp. 1 x 165).
  ExactMatrix c;
};

/// K[z1..z9].
RingPtr charvar_ring(const FieldConfig &field);

/// Quadrics f_l = sum_{i<=j} C[l][pos(i,j)] z_i z_j where C carries factor 2
/// on off-diagonal pairs.
CharVariety charvar_first(const JacobianRing &jr, const GradedBasis &basis, unsigned threads = 1);

/// Cubic g = sum_{i<=j<=k} C[0][pos(i,j,k)] z_i z_j z_k with factors 1, 3, 6
/// for one, two, three distinct indices.
CharVariety charvar_second(const JacobianRing &jr, const GradedBasis &basis, unsigned threads = 1);

struct VarietyInvariants {
  HilbertData hilbert;
  FieldConfig field;
  std::size_t groebner_size = 0;

  int dimension() const noexcept { return hilbert.dimension; }
};

/// Dimension and arithmetic genus of Proj K[z]/(equations), the equations
/// first mapped into `field`. Equations over F_p must stay in F_p
/// (FieldMismatch otherwise). Raises IdealIsUnit for the empty variety.
VarietyInvariants charvar_dimension_genus(const CharVariety &v, const FieldConfig &field);

} // namespace jacobi
