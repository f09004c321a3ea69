#include "jacobi/symmetric.hpp"

#include <algorithm>
#include <array>

#include "jacobi/parallel.hpp"

namespace jacobi {

namespace {

constexpr std::size_t tri(std::size_t p) { return p * (p + 1) / 2; }

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

} // namespace

SymIndexer::SymIndexer(std::size_t nvars, std::size_t degree) : n_(nvars), degree_(degree) {
  if (nvars == 0 || (degree != 2 && degree != 3))
    throw Error(ErrorCode::InvalidConfig, "symmetric indexer supports degree 2 or 3 over at least one variable");
  const std::size_t size = binomial(n_ + degree_ - 1, degree_);
  table_.assign(size, {});
  auto place = [&](std::vector<std::size_t> tuple) {
    std::size_t pos = pos_of(tuple);
    if (pos >= size || !table_[pos].empty())
      throw Error(ErrorCode::IndexOutOfRange, "position formula is not a bijection");
    table_[pos] = std::move(tuple);
  };
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      if (degree_ == 2) {
        place({i, j});
      } else {
        for (std::size_t k = j; k < n_; ++k) place({i, j, k});
      }
    }
}

void SymIndexer::check_index(std::size_t i) const {
  if (i >= n_) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(n_ - 1));
}

std::size_t SymIndexer::pos_of_pair(std::size_t i, std::size_t j) const {
  if (degree_ != 2) throw Error(ErrorCode::ArityMismatch, "pair lookup on a degree-3 indexer");
  check_index(i);
  check_index(j);
  if (i > j) std::swap(i, j);
  // Rows i, i+1, ... hold n-i, n-i-1, ... entries; row i starts at T - tri(n-i).
  return tri(n_) - tri(n_ - i) + (j - i);
}

std::size_t SymIndexer::pos_of_triple(std::size_t i, std::size_t j, std::size_t k) const {
  if (degree_ != 3) throw Error(ErrorCode::ArityMismatch, "triple lookup on a degree-2 indexer");
  check_index(i);
  check_index(j);
  check_index(k);
  std::array<std::size_t, 3> s{i, j, k};
  std::sort(s.begin(), s.end());
  // Blocks of fixed smallest index l hold tri(n-l) pairs (j,k) with l <= j <= k.
  std::size_t offs = 0;
  for (std::size_t l = 0; l < s[0]; ++l) offs += tri(n_ - l);
  const std::size_t p0 = n_ - s[0];
  const std::size_t j0 = s[1] - s[0];
  return offs + tri(p0) - tri(p0 - j0) + (s[2] - s[1]);
}

std::size_t SymIndexer::pos_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != degree_) throw Error(ErrorCode::ArityMismatch, "tuple length differs from indexer degree");
  return degree_ == 2 ? pos_of_pair(tuple[0], tuple[1]) : pos_of_triple(tuple[0], tuple[1], tuple[2]);
}

const std::vector<std::size_t> &SymIndexer::tuple_of(std::size_t pos) const {
  if (pos >= table_.size()) throw Error(ErrorCode::IndexOutOfRange, "position " + std::to_string(pos));
  return table_[pos];
}

const SymIndexer &symm2_indexer() {
  static const SymIndexer idx(kCohomologyDim, 2);
  return idx;
}

Vector symm2_im_theta(const ThetaMatrices &t, std::size_t th, std::size_t pos) {
  if (th >= t.size()) throw Error(ErrorCode::IndexOutOfRange, "theta index " + std::to_string(th));
  const SymIndexer &idx = symm2_indexer();
  const auto &ij = idx.tuple_of(pos);
  const std::size_t i = ij[0], j = ij[1];
  const ExactMatrix &m = t.mats[th];
  Vector res = zero_vector(idx.size(), m.field());
  auto rj = m.row(j);
  auto ri = m.row(i);
  for (std::size_t k = 0; k < m.cols(); ++k) {
    if (!rj[k].is_zero()) res[idx.pos_of_pair(i, k)] += rj[k];
    if (!ri[k].is_zero()) res[idx.pos_of_pair(k, j)] += ri[k];
  }
  return res;
}

Vector symm2_apply(const ThetaMatrices &t, std::size_t th, std::span<const Scalar> v) {
  const SymIndexer &idx = symm2_indexer();
  if (v.size() != idx.size()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from 210");
  if (th >= t.size()) throw Error(ErrorCode::IndexOutOfRange, "theta index " + std::to_string(th));
  Vector res = zero_vector(idx.size(), t.mats[th].field());
  for (std::size_t pos = 0; pos < v.size(); ++pos) {
    if (v[pos].is_zero()) continue;
    Vector im = symm2_im_theta(t, th, pos);
    for (std::size_t q = 0; q < im.size(); ++q)
      if (!im[q].is_zero()) res[q] += v[pos] * im[q];
  }
  return res;
}

Subspace symm2_image(const ThetaMatrices &t, const Subspace &u, unsigned threads) {
  const SymIndexer &idx = symm2_indexer();
  if (u.ambient_dim() != idx.size()) throw Error(ErrorCode::DimensionMismatch, "subspace ambient differs from 210");
  auto basis = u.basis();
  const std::size_t nth = t.size();
  std::vector<Vector> ims(basis.size() * nth);
  parallel_for(ims.size(), threads,
               [&](std::size_t job) { ims[job] = symm2_apply(t, job % nth, basis[job / nth]); });
  return Subspace::from_vectors(ims, idx.size(), u.field());
}

std::vector<std::size_t> symm2_graded_indices(std::size_t p) {
  const SymIndexer &idx = symm2_indexer();
  // b_0 spans R_0, b_1..b_9 span R_1, b_10..b_18 span R_2, b_19 spans R_3.
  constexpr std::size_t r1 = 1, r2 = 10, r3 = 19, nine = 9;
  std::vector<std::size_t> res;
  auto sym_block = [&](std::size_t base) {
    for (std::size_t i = 0; i < nine; ++i)
      for (std::size_t j = i; j < nine; ++j) res.push_back(idx.pos_of_pair(base + i, base + j));
  };
  switch (p) {
  case 0:
    res.push_back(idx.pos_of_pair(0, 0));
    break;
  case 1:
    for (std::size_t i = 0; i < nine; ++i) res.push_back(idx.pos_of_pair(0, r1 + i));
    break;
  case 2:
    for (std::size_t i = 0; i < nine; ++i) res.push_back(idx.pos_of_pair(0, r2 + i));
    sym_block(r1);
    break;
  case 3:
    res.push_back(idx.pos_of_pair(0, r3));
    for (std::size_t i = 0; i < nine; ++i)
      for (std::size_t j = 0; j < nine; ++j) res.push_back(idx.pos_of_pair(r1 + i, r2 + j));
    break;
  case 4:
    for (std::size_t i = 0; i < nine; ++i) res.push_back(idx.pos_of_pair(r1 + i, r3));
    sym_block(r2);
    break;
  case 5:
    for (std::size_t i = 0; i < nine; ++i) res.push_back(idx.pos_of_pair(r2 + i, r3));
    break;
  case 6:
    res.push_back(idx.pos_of_pair(r3, r3));
    break;
  default:
    throw Error(ErrorCode::IndexOutOfRange, "graded degree " + std::to_string(p) + " outside 0..6");
  }
  return res;
}

Subspace symm2_graded_subspace(std::size_t p, const FieldConfig &field) {
  const std::size_t n = symm2_indexer().size();
  std::vector<Vector> vs;
  for (std::size_t pos : symm2_graded_indices(p)) vs.push_back(unit_vector(n, pos, field));
  return Subspace::from_vectors(vs, n, field);
}

PlethysmReport run_plethysm(const ThetaMatrices &t, unsigned threads) {
  if (t.size() == 0) throw Error(ErrorCode::EmptyInput, "no theta matrices");
  const FieldConfig &field = t.mats.front().field();
  Subspace u51 = symm2_graded_subspace(1, field);
  Subspace u42 = symm2_image(t, u51, threads);
  if (!symm2_graded_subspace(2, field).contains(u42))
    throw Error(ErrorCode::GradingViolation, "U42 is not contained in S^2(R)_2");
  Subspace u33 = symm2_image(t, u42, threads);
  if (!symm2_graded_subspace(3, field).contains(u33))
    throw Error(ErrorCode::GradingViolation, "U33 is not contained in S^2(R)_3");
  PlethysmReport r;
  r.u51 = u51.dimension();
  r.u42 = u42.dimension();
  r.u33 = u33.dimension();
  r.modular_consistent = r.u33 <= r.bound;
  return r;
}

} // namespace jacobi
