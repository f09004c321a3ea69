#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jacobi/exactla.hpp"
#include "jacobi/groebner.hpp"
#include "jacobi/matrixgen.hpp"

namespace jacobi {

inline constexpr std::size_t kXVars = 8;
inline constexpr std::size_t kYVars = 4;
inline constexpr std::size_t kJacobianVars = kXVars + kYVars;
inline constexpr std::size_t kCohomologyDim = 20;
inline constexpr std::array<std::size_t, 4> kExpectedDims = {1, 9, 9, 1};

/// K[x0..x7, y1..y4] with glex order, x0 largest.
RingPtr jacobian_polynomial_ring(const FieldConfig &field);

/// F = sum_i y_i f_i with f_i = sum_j A(i,j) x_j^2, and the ideal of its
/// twelve partial derivatives with a reduced Groebner basis.
struct JacobianRing {
  RingPtr ring;
  CoeffMatrix coefficients;
  std::vector<Polynomial> quadrics;  // f_1..f_4
  Polynomial hypersurface;           // F
  GroebnerIdeal ideal;
};

JacobianRing build_jacobian_ring(const CoeffMatrix &a);

/// Parity filter for the finite group action: deg x_i + deg x_{i+1} even for
/// i = 0..6 and deg x_0 + deg x_7 even.
bool is_h_invariant(const Monomial &m);

/// x7^6 * y4^3, the spanning class of the top component.
Monomial top_class_monomial();

/// Monomials of x-degree `xdeg` and y-degree `ydeg` in the 12-variable ring,
/// x-part outer and y-part inner, each in descending glex.
std::vector<Monomial> bidegree_monomials(unsigned xdeg, unsigned ydeg);

/// Monomial basis of R = R_0 + R_1 + R_2 + R_3, R_p spanned by standard
/// invariant monomials of bidegree (2p, p).
class GradedBasis {
public:
  explicit GradedBasis(std::array<std::vector<Monomial>, 4> components);

  const std::vector<Monomial> &component(std::size_t p) const { return components_.at(p); }
  std::array<std::size_t, 4> dims() const;
  const std::array<std::size_t, 4> &offsets() const noexcept { return offsets_; }
  std::size_t total_dim() const noexcept { return flat_.size(); }

  /// The k-th element of the concatenated basis b_0..b_{n-1}.
  const Monomial &element(std::size_t k) const { return flat_.at(k); }
  std::span<const Monomial> elements() const noexcept { return flat_; }
  /// Graded degree p of b_k.
  std::size_t degree_of(std::size_t k) const;
  std::optional<std::size_t> index_of(const Monomial &m) const;

private:
  std::array<std::vector<Monomial>, 4> components_;
  std::array<std::size_t, 4> offsets_{};
  std::vector<Monomial> flat_;
  std::unordered_map<Monomial, std::size_t> index_;
};

struct BasisOptions {
  /// Enumerate bidegree (6,3) instead of taking the top class directly.
  bool compute_top = false;
  unsigned threads = 1;
  /// Raise UnexpectedDimensions unless the sizes are (1,9,9,1).
  bool require_expected_dims = true;
};

GradedBasis compute_graded_basis(const JacobianRing &jr, const BasisOptions &options = {});

/// Coordinates of the class of g in the concatenated basis. H-invariant
/// normal-form terms outside the basis raise ResidueOffBasis.
Vector coordinate_vector(const Polynomial &g, const JacobianRing &jr, const GradedBasis &basis);

std::vector<Vector> coordinate_vectors(std::span<const Polynomial> gs, const JacobianRing &jr,
                                       const GradedBasis &basis, unsigned threads = 1);

/// The basis element b_k as a polynomial of the Jacobian ring.
Polynomial basis_polynomial(const JacobianRing &jr, const GradedBasis &basis, std::size_t k);

} // namespace jacobi
