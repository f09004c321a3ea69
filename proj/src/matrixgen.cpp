#include "jacobi/matrixgen.hpp"

#include <limits>

namespace jacobi {

std::string to_string(MatrixMode mode) {
  switch (mode) {
  case MatrixMode::User: return "user";
  case MatrixMode::Random: return "random";
  case MatrixMode::Hyperelliptic: return "hyperelliptic";
  }
  return "user";
}

MatrixMode matrix_mode_from_string(const std::string &s) {
  if (s == "user") return MatrixMode::User;
  if (s == "random") return MatrixMode::Random;
  if (s == "hyperelliptic") return MatrixMode::Hyperelliptic;
  throw Error(ErrorCode::ParseError, "unknown matrix mode '" + s + "'");
}

NondegeneracyReport check_nondegenerate(const ExactMatrix &a) {
  if (a.rows() != kCoeffRows || a.cols() != kCoeffCols)
    throw Error(ErrorCode::DimensionMismatch, "coefficient matrix must be 4x8");
  NondegeneracyReport report;
  std::array<std::size_t, 4> s{};
  for (s[0] = 0; s[0] < 8; ++s[0])
    for (s[1] = s[0] + 1; s[1] < 8; ++s[1])
      for (s[2] = s[1] + 1; s[2] < 8; ++s[2])
        for (s[3] = s[2] + 1; s[3] < 8; ++s[3]) {
          ExactMatrix minor(4, 4, a.field());
          for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) minor(i, j) = a(i, s[j]);
          ++report.subsets_checked;
          if (determinant(minor).is_zero() && report.ok) {
            report.ok = false;
            report.first_failing = s;
          }
        }
  return report;
}

ExactMatrix hyperelliptic_matrix(std::span<const Scalar> lambda) {
  if (lambda.size() != kCoeffCols) throw Error(ErrorCode::DimensionMismatch, "expected 8 lambda values");
  const FieldConfig field = lambda.front().field();
  ExactMatrix a(kCoeffRows, kCoeffCols, field);
  for (std::size_t j = 0; j < kCoeffCols; ++j) {
    Scalar p = field.one();
    for (std::size_t i = 0; i < kCoeffRows; ++i) {
      a(i, j) = p;
      p *= lambda[j];
    }
  }
  return a;
}

long long SeededRng::uniform(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long long>(x % span);
}

CoeffMatrix generate_matrix(const GenConfig &cfg, const std::optional<ExactMatrix> &user_entries,
                            const std::optional<std::vector<Scalar>> &user_lambda) {
  const FieldConfig &field = cfg.field;
  if (cfg.mode == MatrixMode::User) {
    if (!user_entries) throw Error(ErrorCode::MissingUserInput, "user mode needs a 4x8 matrix");
    if (user_entries->rows() != kCoeffRows || user_entries->cols() != kCoeffCols)
      throw Error(ErrorCode::DimensionMismatch, "coefficient matrix must be 4x8");
    return CoeffMatrix{*user_entries, MatrixMode::User, std::nullopt, std::nullopt};
  }

  if (cfg.mode == MatrixMode::Hyperelliptic && user_lambda) {
    if (user_lambda->size() != kCoeffCols) throw Error(ErrorCode::DimensionMismatch, "expected 8 lambda values");
    for (std::size_t i = 0; i < kCoeffCols; ++i)
      for (std::size_t j = i + 1; j < kCoeffCols; ++j)
        if ((*user_lambda)[i] == (*user_lambda)[j])
          throw Error(ErrorCode::DuplicateLambda, "lambda values " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " coincide");
    ExactMatrix a = hyperelliptic_matrix(*user_lambda);
    auto check = check_nondegenerate(a);
    if (!check.ok) throw Error(ErrorCode::DegenerateMatrix, "hyperelliptic matrix has a vanishing minor");
    return CoeffMatrix{std::move(a), MatrixMode::Hyperelliptic, *user_lambda, std::nullopt};
  }

  if (cfg.randrange < 2) throw Error(ErrorCode::InvalidConfig, "randrange must be at least 2");
  SeededRng rng(cfg.seed);
  const long long n = cfg.randrange;
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    if (cfg.mode == MatrixMode::Hyperelliptic) {
      std::vector<Scalar> lambda;
      for (std::size_t j = 0; j < kCoeffCols; ++j) lambda.push_back(field.from_int(rng.uniform(-n + 1, n - 1)));
      ExactMatrix a = hyperelliptic_matrix(lambda);
      if (check_nondegenerate(a).ok)
        return CoeffMatrix{std::move(a), MatrixMode::Hyperelliptic, std::move(lambda), cfg.seed};
    } else {
      ExactMatrix a(kCoeffRows, kCoeffCols, field);
      for (std::size_t i = 0; i < kCoeffRows; ++i)
        for (std::size_t j = 0; j < kCoeffCols; ++j) a(i, j) = field.from_int(rng.uniform(-n + 1, n - 1));
      if (check_nondegenerate(a).ok) return CoeffMatrix{std::move(a), MatrixMode::Random, std::nullopt, cfg.seed};
    }
  }
  throw Error(ErrorCode::NonConvergence,
              "no admissible matrix after " + std::to_string(cfg.max_attempts) + " attempts");
}

} // namespace jacobi
