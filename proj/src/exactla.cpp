#include "jacobi/exactla.hpp"

#include <algorithm>

namespace jacobi {

Vector zero_vector(std::size_t n, const FieldConfig &field) { return Vector(n, field.zero()); }

Vector unit_vector(std::size_t n, std::size_t k, const FieldConfig &field) {
  if (k >= n) throw Error(ErrorCode::IndexOutOfRange, "unit vector index " + std::to_string(k));
  Vector v = zero_vector(n, field);
  v[k] = field.one();
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar &s) { return s.is_zero(); });
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldConfig &field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldConfig &field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::span<const Vector> rows, const FieldConfig &field, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

void ExactMatrix::set_row(std::size_t i, std::span<const Scalar> values) {
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!(values[j].field() == field_)) throw Error(ErrorCode::FieldMismatch, "entry from another field");
    (*this)(i, j) = values[j];
  }
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool ExactMatrix::is_zero() const { return jacobi::is_zero(data_); }

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  ExactMatrix c(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
  ExactMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shapes");
  ExactMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Vector row_times(std::span<const Scalar> v, const ExactMatrix &m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from row count");
  Vector out = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[j] += v[i] * m(i, j);
  }
  return out;
}

RrefResult rref(ExactMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{std::move(m), r, std::move(pivots)};
}

Scalar determinant(const ExactMatrix &m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const FieldConfig &field = m.field();
  if (n == 0) return field.one();
  ExactMatrix a = m;
  Scalar prev = field.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return field.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return negate ? -d : d;
}

Subspace::Subspace(std::size_t ambient_dim, const FieldConfig &field) : ambient_(ambient_dim), field_(field) {}

Subspace Subspace::from_vectors(std::span<const Vector> vs, std::size_t ambient_dim, const FieldConfig &field) {
  Subspace u(ambient_dim, field);
  for (const auto &v : vs) u.insert(v);
  return u;
}

void Subspace::reduce_in_place(Vector &v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar &c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    const Vector &row = rows_[r];
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
}

bool Subspace::insert(Vector v) {
  if (v.size() != ambient_)
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in K^" + std::to_string(ambient_));
  reduce_in_place(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar &s) { return !s.is_zero(); });
  if (lead == v.end()) return false;
  std::size_t pc = static_cast<std::size_t>(lead - v.begin());
  Scalar inv = lead->inverse();
  for (std::size_t j = pc; j < ambient_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  // clear the new pivot column from the existing rows
  for (auto &row : rows_) {
    if (row[pc].is_zero()) continue;
    Scalar f = row[pc];
    for (std::size_t j = pc; j < ambient_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pc);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "membership test in a different ambient space");
  Vector w(v.begin(), v.end());
  reduce_in_place(w);
  return is_zero(w);
}

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspaces of different ambient spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector &v) { return contains(v); });
}

Subspace operator+(const Subspace &u, const Subspace &v) {
  if (u.ambient_ != v.ambient_) throw Error(ErrorCode::DimensionMismatch, "sum of subspaces of different ambient spaces");
  Subspace s = u;
  for (const auto &row : v.rows_) s.insert(row);
  return s;
}

bool operator==(const Subspace &u, const Subspace &v) {
  return u.ambient_ == v.ambient_ && u.pivots_ == v.pivots_ && u.rows_ == v.rows_;
}

Subspace subspace_from_vectors(std::span<const Vector> vs, std::size_t ambient_dim, const FieldConfig &field) {
  return Subspace::from_vectors(vs, ambient_dim, field);
}

Subspace subspace_sum(const Subspace &u, const Subspace &v) { return u + v; }

} // namespace jacobi
