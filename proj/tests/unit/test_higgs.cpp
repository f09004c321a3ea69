#include <doctest.h>

#include "jacobi/higgs.hpp"
#include "support.hpp"

using namespace jacobi;

TEST_SUITE("higgs") {
  TEST_CASE("shape and grading") {
    const auto &r = support::lambda_1_8();
    const auto &t = r.theta;
    const FieldConfig &q = r.jacobian.ring->field();
    REQUIRE(t.size() == 9);
    for (std::size_t j = 0; j < 9; ++j) {
      const auto &m = t[j];
      CHECK(m.rows() == 20);
      CHECK(m.cols() == 20);
      CHECK(Vector(m.row(0).begin(), m.row(0).end()) == unit_vector(20, 1 + j, q));
      for (std::size_t k = 10; k < 19; ++k)
        for (std::size_t l = 0; l < 19; ++l) CHECK(m(k, l).is_zero());
      CHECK(is_zero(m.row(19)));
      for (std::size_t k = 0; k < 20; ++k)
        for (std::size_t l = 0; l < 20; ++l)
          if (!m(k, l).is_zero()) CHECK(r.basis.degree_of(l) == r.basis.degree_of(k) + 1);
    }
  }

  TEST_CASE("apply_theta") {
    const auto &r = support::lambda_1_8();
    const auto &t = r.theta;
    const FieldConfig &q = r.jacobian.ring->field();
    for (std::size_t k = 0; k < 20; ++k) {
      auto v = apply_theta(t, 4, unit_vector(20, k, q));
      CHECK(v == Vector(t[4].row(k).begin(), t[4].row(k).end()));
    }
    CHECK(is_zero(apply_theta(t, 0, zero_vector(20, q))));
    try {
      (void)apply_theta(t, 9, zero_vector(20, q));
      FAIL("must throw");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::IndexOutOfRange);
    }
    std::mt19937_64 rng(4);
    for (int n = 0; n < 30; ++n) {
      Vector u(20, q.zero());
      for (auto &x : u) x = support::random_rational(rng);
      std::size_t i = n % 9, j = (n * 5 + 2) % 9;
      CHECK(apply_theta(t, j, apply_theta(t, i, u)) == apply_theta(t, i, apply_theta(t, j, u)));
    }
  }

  TEST_CASE("matrices commute and are nilpotent") {
    const auto &t = support::lambda_1_8().theta;
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = i + 1; j < 9; ++j) CHECK(t[i] * t[j] == t[j] * t[i]);
    CHECK((t[0] * t[3] * t[5] * t[8]).is_zero());
    CHECK_FALSE((t[0] * t[0] * t[0]).is_zero());
  }

  TEST_CASE("thread count does not change the matrices") {
    const auto &r = support::lambda_1_8();
    auto t1 = compute_theta_matrices(r.jacobian, r.basis, 1);
    for (std::size_t j = 0; j < 9; ++j) CHECK(t1[j] == r.theta[j]);
  }
}
