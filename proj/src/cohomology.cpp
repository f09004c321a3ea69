#include "jacobi/cohomology.hpp"

#include "jacobi/parallel.hpp"

namespace jacobi {

RingPtr jacobian_polynomial_ring(const FieldConfig &field) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < kXVars; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= kYVars; ++i) names.push_back("y" + std::to_string(i));
  return make_ring(std::move(names), field);
}

JacobianRing build_jacobian_ring(const CoeffMatrix &a) {
  const ExactMatrix &m = a.entries;
  if (m.rows() != kCoeffRows || m.cols() != kCoeffCols)
    throw Error(ErrorCode::DimensionMismatch, "coefficient matrix must be 4x8");
  RingPtr ring = jacobian_polynomial_ring(m.field());
  std::vector<Polynomial> f;
  Polynomial hyper(ring);
  for (std::size_t i = 0; i < kCoeffRows; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < kCoeffCols; ++j)
      terms.push_back(Term{Monomial::variable(kJacobianVars, j, 2), m(i, j)});
    f.push_back(Polynomial::from_terms(ring, std::move(terms)));
    hyper = hyper + Polynomial::variable(ring, kXVars + i) * f.back();
  }
  std::vector<Polynomial> partials;
  for (std::size_t v = 0; v < kJacobianVars; ++v) partials.push_back(derivative(hyper, v));
  GroebnerIdeal ideal = buchberger(partials);
  return JacobianRing{ring, a, std::move(f), std::move(hyper), std::move(ideal)};
}

bool is_h_invariant(const Monomial &m) {
  for (std::size_t i = 0; i + 1 < kXVars; ++i)
    if ((m[i] + m[i + 1]) % 2 != 0) return false;
  return (m[0] + m[kXVars - 1]) % 2 == 0;
}

Monomial top_class_monomial() {
  Monomial m(kJacobianVars);
  m.set(kXVars - 1, 6);
  m.set(kJacobianVars - 1, 3);
  return m;
}

std::vector<Monomial> bidegree_monomials(unsigned xdeg, unsigned ydeg) {
  std::vector<Monomial> out;
  auto xs = monomials_of_degree(kXVars, xdeg);
  auto ys = monomials_of_degree(kYVars, ydeg);
  out.reserve(xs.size() * ys.size());
  for (const auto &xm : xs)
    for (const auto &ym : ys) {
      Monomial m(kJacobianVars);
      for (std::size_t i = 0; i < kXVars; ++i)
        if (xm[i]) m.set(i, xm[i]);
      for (std::size_t i = 0; i < kYVars; ++i)
        if (ym[i]) m.set(kXVars + i, ym[i]);
      out.push_back(m);
    }
  return out;
}

GradedBasis::GradedBasis(std::array<std::vector<Monomial>, 4> components) : components_(std::move(components)) {
  std::size_t offset = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    offsets_[p] = offset;
    for (const auto &m : components_[p]) {
      index_.emplace(m, flat_.size());
      flat_.push_back(m);
    }
    offset += components_[p].size();
  }
}

std::array<std::size_t, 4> GradedBasis::dims() const {
  return {components_[0].size(), components_[1].size(), components_[2].size(), components_[3].size()};
}

std::size_t GradedBasis::degree_of(std::size_t k) const {
  if (k >= flat_.size()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(k));
  std::size_t p = 0;
  while (p + 1 < 4 && offsets_[p + 1] <= k) ++p;
  return p;
}

std::optional<std::size_t> GradedBasis::index_of(const Monomial &m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<Monomial> scan_component(const JacobianRing &jr, unsigned p, unsigned threads) {
  auto candidates = bidegree_monomials(2 * p, p);
  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    keep[i] = is_h_invariant(candidates[i]) && jr.ideal.is_basis_elt(candidates[i]);
  });
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  return out;
}

} // namespace

GradedBasis compute_graded_basis(const JacobianRing &jr, const BasisOptions &options) {
  std::array<std::vector<Monomial>, 4> comps;
  for (unsigned p = 0; p < 3; ++p) comps[p] = scan_component(jr, p, options.threads);
  if (options.compute_top) {
    comps[3] = scan_component(jr, 3, options.threads);
  } else {
    Monomial top = top_class_monomial();
    if (!is_h_invariant(top) || !jr.ideal.is_basis_elt(top))
      throw Error(ErrorCode::TopClassInvalid, "x7^6*y4^3 is not a standard invariant monomial for this matrix");
    comps[3] = {top};
  }
  GradedBasis basis(std::move(comps));
  if (options.require_expected_dims && basis.dims() != kExpectedDims) {
    auto d = basis.dims();
    throw Error(ErrorCode::UnexpectedDimensions, "graded basis sizes (" + std::to_string(d[0]) + "," +
                                                     std::to_string(d[1]) + "," + std::to_string(d[2]) + "," +
                                                     std::to_string(d[3]) + "), expected (1,9,9,1)");
  }
  return basis;
}

Vector coordinate_vector(const Polynomial &g, const JacobianRing &jr, const GradedBasis &basis) {
  Polynomial nf = jr.ideal.normal_form(g);
  Vector v = zero_vector(basis.total_dim(), jr.ring->field());
  for (const auto &t : nf.terms()) {
    if (auto k = basis.index_of(t.monomial)) {
      v[*k] = t.coeff;
    } else if (is_h_invariant(t.monomial)) {
      throw Error(ErrorCode::ResidueOffBasis,
                  "normal form term " + Polynomial::monomial(jr.ring, t.monomial).to_string() +
                      " is invariant but not a basis element");
    }
  }
  return v;
}

std::vector<Vector> coordinate_vectors(std::span<const Polynomial> gs, const JacobianRing &jr,
                                       const GradedBasis &basis, unsigned threads) {
  std::vector<Vector> out(gs.size());
  parallel_for(gs.size(), threads, [&](std::size_t i) { out[i] = coordinate_vector(gs[i], jr, basis); });
  return out;
}

Polynomial basis_polynomial(const JacobianRing &jr, const GradedBasis &basis, std::size_t k) {
  return Polynomial::monomial(jr.ring, basis.element(k));
}

} // namespace jacobi
