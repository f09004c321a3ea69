#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jacobi/exactla.hpp"

namespace jacobi {

enum class MatrixMode { User, Random, Hyperelliptic };

std::string to_string(MatrixMode mode);
MatrixMode matrix_mode_from_string(const std::string &s);

inline constexpr std::size_t kCoeffRows = 4;
inline constexpr std::size_t kCoeffCols = 8;

/// The 4x8 coefficient matrix defining the four diagonal quadrics.
struct CoeffMatrix {
  ExactMatrix entries;
  MatrixMode provenance = MatrixMode::User;
  std::optional<std::vector<Scalar>> lambda;  // present iff hyperelliptic
  std::optional<std::uint64_t> seed;          // present iff sampled

  const FieldConfig &field() const { return entries.field(); }
};

struct GenConfig {
  MatrixMode mode = MatrixMode::Hyperelliptic;
  int randrange = 10;
  std::uint64_t seed = 0;
  FieldConfig field = FieldConfig::rationals();
  std::size_t max_attempts = 10000;
};

struct NondegeneracyReport {
  bool ok = true;
  /// Lexicographically first column subset with vanishing minor (0-based).
  std::optional<std::array<std::size_t, 4>> first_failing;
  std::size_t subsets_checked = 0;
};

/// Checks all C(8,4) = 70 maximal minors.
NondegeneracyReport check_nondegenerate(const ExactMatrix &a);

/// Rows are the powers 0..3 of the lambda values: entries(i, j) = lambda_j^i.
ExactMatrix hyperelliptic_matrix(std::span<const Scalar> lambda);

/// mt19937_64 with rejection sampling, so a seed reproduces the same matrix
/// on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi);

private:
  std::mt19937_64 engine_;
};

/// User mode returns the supplied entries unchecked. Random and
/// hyperelliptic modes sample entries (or lambda values) uniformly from
/// [-N+1, N-1] with N = randrange and retry until every maximal minor is
/// nonzero. A user-supplied lambda in hyperelliptic mode is used as is.
CoeffMatrix generate_matrix(const GenConfig &cfg, const std::optional<ExactMatrix> &user_entries = std::nullopt,
                            const std::optional<std::vector<Scalar>> &user_lambda = std::nullopt);

} // namespace jacobi
