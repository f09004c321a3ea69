#include "jacobi/higgs.hpp"

#include "jacobi/parallel.hpp"

namespace jacobi {

ThetaMatrices compute_theta_matrices(const JacobianRing &jr, const GradedBasis &basis, unsigned threads) {
  const auto &r1 = basis.component(1);
  const std::size_t n = basis.total_dim();
  const FieldConfig &field = jr.ring->field();
  ThetaMatrices out;
  out.mats.assign(r1.size(), ExactMatrix(n, n, field));
  // One flat job list over (j, k) so all workers stay busy.
  parallel_for(r1.size() * n, threads, [&](std::size_t job) {
    const std::size_t j = job / n, k = job % n;
    Polynomial prod = Polynomial::monomial(jr.ring, r1[j] * basis.element(k));
    out.mats[j].set_row(k, coordinate_vector(prod, jr, basis));
  });
  return out;
}

Vector apply_theta(const ThetaMatrices &t, std::size_t j, std::span<const Scalar> v) {
  if (j >= t.size()) throw Error(ErrorCode::IndexOutOfRange, "theta index " + std::to_string(j));
  return row_times(v, t.mats[j]);
}

} // namespace jacobi
