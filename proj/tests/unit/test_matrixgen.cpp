#include <doctest.h>

#include "jacobi/matrixgen.hpp"
#include "support.hpp"

using namespace jacobi;

TEST_SUITE("matrixgen") {
  TEST_CASE("hyperelliptic lambda = 1..8") {
    auto a = support::lambda_1_8_matrix();
    const FieldConfig &q = a.field();
    for (std::size_t j = 0; j < 8; ++j) {
      const long long l = static_cast<long long>(j) + 1;
      CHECK(a.entries(0, j) == q.one());
      CHECK(a.entries(1, j) == q.from_int(l));
      CHECK(a.entries(2, j) == q.from_int(l * l));
      CHECK(a.entries(3, j) == q.from_int(l * l * l));
    }
    CHECK(a.provenance == MatrixMode::Hyperelliptic);
    REQUIRE(a.lambda);
    CHECK(a.lambda->size() == 8);
    auto rep = check_nondegenerate(a.entries);
    CHECK(rep.ok);
    CHECK(rep.subsets_checked == 70);
    CHECK_FALSE(rep.first_failing);
  }

  TEST_CASE("degenerate matrices") {
    FieldConfig q = FieldConfig::rationals();
    std::vector<Scalar> lam;
    for (int v : {1, 1, 3, 4, 5, 6, 7, 8}) lam.push_back(q.from_int(v));
    auto rep = check_nondegenerate(hyperelliptic_matrix(lam));
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.first_failing);
    CHECK(*rep.first_failing == std::array<std::size_t, 4>{0, 1, 2, 3});

    auto a = support::lambda_1_8_matrix().entries;
    for (std::size_t i = 0; i < 4; ++i) a(i, 5) = q.zero();
    rep = check_nondegenerate(a);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.first_failing);
    const auto &s = *rep.first_failing;
    CHECK(std::find(s.begin(), s.end(), 5) != s.end());
    CHECK(s == std::array<std::size_t, 4>{0, 1, 2, 5});
  }

  TEST_CASE("non-degeneracy is invariant under invertible row operations") {
    std::mt19937_64 rng(31);
    GenConfig cfg;
    cfg.mode = MatrixMode::Random;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      cfg.seed = seed;
      auto a = generate_matrix(cfg).entries;
      REQUIRE(check_nondegenerate(a).ok);
      ExactMatrix g(4, 4, a.field());
      do {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) g(i, j) = support::random_rational(rng, 3);
      } while (determinant(g).is_zero());
      CHECK(check_nondegenerate(g * a).ok);
      // each minor of A equals the minor of its transpose
      ExactMatrix sub(4, 4, a.field());
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) sub(i, j) = a(i, j + 2);
      CHECK(determinant(sub) == determinant(sub.transpose()));
    }
  }

  TEST_CASE("seeded sampling is reproducible") {
    for (auto mode : {MatrixMode::Random, MatrixMode::Hyperelliptic}) {
      GenConfig cfg;
      cfg.mode = mode;
      cfg.seed = 42;
      auto a = generate_matrix(cfg), b = generate_matrix(cfg);
      CHECK(a.entries == b.entries);
      CHECK(a.seed == std::optional<std::uint64_t>(42));
      CHECK(check_nondegenerate(a.entries).ok);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 8; ++j)
          if (mode == MatrixMode::Random) {
            const auto &v = a.entries(i, j).rational_value();
            CHECK(v.get_den() == 1);
            CHECK(abs(v) <= 9);
          }
      cfg.seed = 43;
      CHECK_FALSE(generate_matrix(cfg).entries == a.entries);
    }
    SeededRng r1(7), r2(7);
    for (int i = 0; i < 100; ++i) CHECK(r1.uniform(-9, 9) == r2.uniform(-9, 9));
  }

  TEST_CASE("prime field sampling") {
    GenConfig cfg;
    cfg.mode = MatrixMode::Random;
    cfg.field = FieldConfig::prime_field(32003);
    cfg.seed = 1;
    auto a = generate_matrix(cfg);
    CHECK(a.field() == cfg.field);
    CHECK(check_nondegenerate(a.entries).ok);
  }

  TEST_CASE("errors") {
    GenConfig cfg;
    cfg.mode = MatrixMode::User;
    try {
      (void)generate_matrix(cfg);
      FAIL("user mode without entries must throw");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::MissingUserInput);
    }
    cfg.mode = MatrixMode::Hyperelliptic;
    FieldConfig q = FieldConfig::rationals();
    std::vector<Scalar> lam;
    for (int v : {1, 2, 3, 4, 5, 6, 7, 1}) lam.push_back(q.from_int(v));
    try {
      (void)generate_matrix(cfg, std::nullopt, lam);
      FAIL("duplicate lambda must throw");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::DuplicateLambda);
    }
    cfg.mode = MatrixMode::Random;
    cfg.randrange = 1;
    try {
      (void)generate_matrix(cfg);
      FAIL("randrange 1 must throw");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::InvalidConfig);
    }
    // no 4x8 matrix over F_3 has all maximal minors nonzero
    cfg.randrange = 2;
    cfg.field = FieldConfig::prime_field(3);
    cfg.max_attempts = 50;
    try {
      (void)generate_matrix(cfg);
      FAIL("must not converge");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::NonConvergence);
    }
  }

  TEST_CASE("user matrices are returned unchecked") {
    GenConfig cfg;
    cfg.mode = MatrixMode::User;
    ExactMatrix zero(4, 8, FieldConfig::rationals());
    auto a = generate_matrix(cfg, zero);
    CHECK(a.entries == zero);
    CHECK(a.provenance == MatrixMode::User);
    CHECK_FALSE(a.lambda);
  }

  TEST_CASE("mode names") {
    for (auto m : {MatrixMode::User, MatrixMode::Random, MatrixMode::Hyperelliptic})
      CHECK(matrix_mode_from_string(to_string(m)) == m);
    CHECK_THROWS_AS(matrix_mode_from_string("vandermonde"), Error);
  }
}
