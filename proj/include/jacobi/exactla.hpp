#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/scalar.hpp"

namespace jacobi {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, const FieldConfig &field);
Vector unit_vector(std::size_t n, std::size_t k, const FieldConfig &field);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over one field.
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols, const FieldConfig &field);

  static ExactMatrix identity(std::size_t n, const FieldConfig &field);
  /// Raises DimensionMismatch on ragged rows.
  static ExactMatrix from_rows(std::span<const Vector> rows, const FieldConfig &field, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldConfig &field() const noexcept { return field_; }

  Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  void set_row(std::size_t i, std::span<const Scalar> values);

  ExactMatrix transpose() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
  friend ExactMatrix operator+(const ExactMatrix &a, const ExactMatrix &b);
  friend ExactMatrix operator-(const ExactMatrix &a, const ExactMatrix &b);
  friend bool operator==(const ExactMatrix &a, const ExactMatrix &b);

private:
  std::size_t rows_;
  std::size_t cols_;
  FieldConfig field_;
  std::vector<Scalar> data_;
};

/// Row vector times matrix, v*M.
Vector row_times(std::span<const Scalar> v, const ExactMatrix &m);

struct RrefResult {
  ExactMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots chosen as the first nonzero entry.
RrefResult rref(ExactMatrix m);

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Scalar determinant(const ExactMatrix &m);

/// A subspace of K^n stored by its reduced row echelon basis, so two
/// subspaces are equal iff their bases are structurally equal.
class Subspace {
public:
  /// The zero subspace of K^n.
  Subspace(std::size_t ambient_dim, const FieldConfig &field);

  static Subspace from_vectors(std::span<const Vector> vs, std::size_t ambient_dim, const FieldConfig &field);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const FieldConfig &field() const noexcept { return field_; }
  std::span<const Vector> basis() const noexcept { return rows_; }
  std::span<const std::size_t> pivots() const noexcept { return pivots_; }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vector v);
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace &other) const;

  friend Subspace operator+(const Subspace &u, const Subspace &v);
  friend bool operator==(const Subspace &u, const Subspace &v);

private:
  /// Eliminates the pivot columns of the current basis from v in place.
  void reduce_in_place(Vector &v) const;

  std::size_t ambient_;
  FieldConfig field_;
  std::vector<Vector> rows_;          // sorted by pivot column
  std::vector<std::size_t> pivots_;   // strictly increasing
};

Subspace subspace_from_vectors(std::span<const Vector> vs, std::size_t ambient_dim, const FieldConfig &field);
Subspace subspace_sum(const Subspace &u, const Subspace &v);

} // namespace jacobi
