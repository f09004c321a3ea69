#include "jacobi/charvar.hpp"

#include <set>

#include "jacobi/parallel.hpp"
#include "jacobi/symmetric.hpp"

namespace jacobi {

namespace {

constexpr std::size_t kNine = 9;

Monomial z_monomial(std::span<const std::size_t> tuple) {
  Monomial m(kNine);
  for (std::size_t i : tuple) m.set(i, m[i] + 1);
  return m;
}

void require_expected(const GradedBasis &basis) {
  if (basis.dims() != kExpectedDims)
    throw Error(ErrorCode::UnexpectedDimensions, "characteristic varieties need a (1,9,9,1) basis");
}

/// Rows of M: coordinates in [first, first + width) of the product of the
/// R_1 basis elements indexed by each tuple of `idx`.
ExactMatrix multiplication_matrix(const JacobianRing &jr, const GradedBasis &basis, const SymIndexer &idx,
                                  std::size_t first, std::size_t width, unsigned threads) {
  const auto &r1 = basis.component(1);
  ExactMatrix m(idx.size(), width, jr.ring->field());
  parallel_for(idx.size(), threads, [&](std::size_t l) {
    Monomial prod(kJacobianVars);
    for (std::size_t i : idx.tuple_of(l)) prod = prod * r1[i];
    Vector vec = coordinate_vector(Polynomial::monomial(jr.ring, prod), jr, basis);
    for (std::size_t k = 0; k < width; ++k) m(l, k) = vec[first + k];
  });
  return m;
}

CharVariety assemble(CharOrder order, const JacobianRing &jr, const SymIndexer &idx, ExactMatrix m) {
  const FieldConfig &field = jr.ring->field();
  ExactMatrix n = m;
  for (std::size_t l = 0; l < idx.size(); ++l) {
    const auto &t = idx.tuple_of(l);
    const std::size_t distinct = std::set<std::size_t>(t.begin(), t.end()).size();
    // Dual basis scaling: (e_i e_j)* = 2 e_i* e_j*; (e_i^2 e_j)* = 3 ..., (e_i e_j e_k)* = 6 ...
    long factor = 1;
    if (idx.degree() == 2) factor = distinct == 2 ? 2 : 1;
    else factor = distinct == 1 ? 1 : distinct == 2 ? 3 : 6;
    Scalar s = field.from_int(factor);
    for (std::size_t k = 0; k < n.cols(); ++k) n(l, k) *= s;
  }
  ExactMatrix c = n.transpose();
  RingPtr ring = charvar_ring(field);
  std::vector<Polynomial> eqs;
  for (std::size_t row = 0; row < c.rows(); ++row) {
    std::vector<Term> terms;
    for (std::size_t l = 0; l < idx.size(); ++l)
      if (!c(row, l).is_zero()) terms.push_back(Term{z_monomial(idx.tuple_of(l)), c(row, l)});
    eqs.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return CharVariety{order, std::move(ring), std::move(eqs), std::move(m), std::move(c)};
}

} // namespace

RingPtr charvar_ring(const FieldConfig &field) { return make_ring("z", kNine, field, 1); }

CharVariety charvar_first(const JacobianRing &jr, const GradedBasis &basis, unsigned threads) {
  require_expected(basis);
  static const SymIndexer idx(kNine, 2);
  ExactMatrix m = multiplication_matrix(jr, basis, idx, basis.offsets()[2], kNine, threads);
  return assemble(CharOrder::First, jr, idx, std::move(m));
}

CharVariety charvar_second(const JacobianRing &jr, const GradedBasis &basis, unsigned threads) {
  require_expected(basis);
  static const SymIndexer idx(kNine, 3);
  ExactMatrix m = multiplication_matrix(jr, basis, idx, basis.offsets()[3], 1, threads);
  return assemble(CharOrder::Second, jr, idx, std::move(m));
}

VarietyInvariants charvar_dimension_genus(const CharVariety &v, const FieldConfig &field) {
  // Residues cannot be lifted meaningfully; only Q -> Q or Q -> F_p reductions.
  if (!v.ring->field().is_rational() && !(v.ring->field() == field))
    throw Error(ErrorCode::FieldMismatch, "equations over " + v.ring->field().name() + " cannot be moved to " +
                                              field.name());
  RingPtr ring = charvar_ring(field);
  std::vector<Polynomial> eqs;
  for (const auto &e : v.equations) {
    Polynomial mapped = change_ring(e, ring);
    if (!mapped.is_zero()) eqs.push_back(std::move(mapped));
  }
  VarietyInvariants out{HilbertData{}, field, 0};
  if (eqs.empty()) {
    out.hilbert = hilbert_series({}, kNine);
    return out;
  }
  GroebnerIdeal gb = buchberger(eqs);
  if (gb.is_unit()) throw Error(ErrorCode::IdealIsUnit, "the equations generate the unit ideal; the variety is empty");
  out.groebner_size = gb.basis().size();
  auto lms = gb.leading_monomials();
  out.hilbert = hilbert_series(lms, kNine);
  if (out.hilbert.dimension < 0)
    throw Error(ErrorCode::IdealIsUnit, "the equations define the empty projective variety");
  return out;
}

} // namespace jacobi
