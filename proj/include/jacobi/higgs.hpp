#pragma once

#include <vector>

#include "jacobi/cohomology.hpp"

namespace jacobi {

/// The nine multiplication maps mu_w : R -> R for w running over the R_1
/// basis. Vectors are rows acting on the left: row k of mats[j] holds the
/// coordinates of e_j * b_k, so v * mats[j] is mu_{e_j}(v).
struct ThetaMatrices {
  std::vector<ExactMatrix> mats;

  std::size_t size() const noexcept { return mats.size(); }
  const ExactMatrix &operator[](std::size_t j) const { return mats.at(j); }
};

ThetaMatrices compute_theta_matrices(const JacobianRing &jr, const GradedBasis &basis, unsigned threads = 1);

/// v * mats[j].
Vector apply_theta(const ThetaMatrices &t, std::size_t j, std::span<const Scalar> v);

} // namespace jacobi
