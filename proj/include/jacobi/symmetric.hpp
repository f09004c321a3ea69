#pragma once

#include <vector>

#include "jacobi/higgs.hpp"

namespace jacobi {

/// Ranking of sorted index tuples i <= j (<= k) over {0..nvars-1}: the
/// closed-form position map and its inverse table. All indices 0-based.
class SymIndexer {
public:
  SymIndexer(std::size_t nvars, std::size_t degree);

  std::size_t nvars() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return table_.size(); }

  /// Argument order is irrelevant.
  std::size_t pos_of_pair(std::size_t i, std::size_t j) const;
  std::size_t pos_of_triple(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t pos_of(std::span<const std::size_t> tuple) const;
  /// The sorted tuple at `pos`.
  const std::vector<std::size_t> &tuple_of(std::size_t pos) const;

private:
  void check_index(std::size_t i) const;

  std::size_t n_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> table_;
};

/// S^2(R) is identified with K^210 through b_i b_j -> e_{pos(i,j)}.
const SymIndexer &symm2_indexer();

/// mu_th(b_i b_j) = b_i mu_th(b_j) + mu_th(b_i) b_j for (i,j) = tuple_of(pos).
Vector symm2_im_theta(const ThetaMatrices &t, std::size_t th, std::size_t pos);
/// Linear extension of symm2_im_theta to an arbitrary vector of K^210.
Vector symm2_apply(const ThetaMatrices &t, std::size_t th, std::span<const Scalar> v);
/// mu_1(U) + ... + mu_9(U).
Subspace symm2_image(const ThetaMatrices &t, const Subspace &u, unsigned threads = 1);

/// Positions of b_a b_b with deg b_a + deg b_b = p, for the graded basis
/// layout b_0 | b_1..b_9 | b_10..b_18 | b_19. Order follows the case table:
/// mixed blocks first, then the symmetric block with i <= j.
std::vector<std::size_t> symm2_graded_indices(std::size_t p);
Subspace symm2_graded_subspace(std::size_t p, const FieldConfig &field);

inline constexpr std::size_t kPlethysmBound = 65;

struct PlethysmReport {
  std::size_t u51 = 0;
  std::size_t u42 = 0;
  std::size_t u33 = 0;
  std::size_t bound = kPlethysmBound;
  bool modular_consistent = false;
};

/// U51 = S^2(R)_1, U42 = image(U51), U33 = image(U42). Raises
/// GradingViolation unless U42 lies in S^2(R)_2 and U33 in S^2(R)_3.
PlethysmReport run_plethysm(const ThetaMatrices &t, unsigned threads = 1);

} // namespace jacobi
