#pragma once

#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "jacobi/poly.hpp"

namespace jacobi {

/// Hilbert series N(t)/(1-t)^n of K[x_1..x_n]/I computed from the monomial
/// ideal of leading terms, together with the Hilbert polynomial of the
/// projective scheme it defines.
struct HilbertData {
  std::size_t nvars = 0;
  /// Coefficients of N(t), low degree first.
  std::vector<mpz_class> numerator;
  /// h(t) = N(t)/(1-t)^(n-k) with h(1) != 0; series = h(t)/(1-t)^k.
  std::vector<mpz_class> reduced_numerator;
  std::size_t pole_order = 0;
  /// Coefficients of P(d), low degree first; empty when P = 0.
  std::vector<mpq_class> polynomial;
  /// Projective dimension k-1 (-1 for an empty scheme).
  int dimension = -1;
  /// (-1)^dim (P(0) - 1); absent for the empty scheme.
  std::optional<mpz_class> genus;
  /// H(d) = P(d) for all d >= regularity_index.
  std::size_t regularity_index = 0;

  /// Coefficient of t^d in the series.
  mpz_class series_coefficient(std::size_t d) const;
  /// P(d).
  mpq_class polynomial_value(const mpq_class &d) const;
  /// Renders P as e.g. "6*t^2 + 24*t - 40".
  std::string polynomial_string() const;
};

/// Divisible and duplicate generators are pruned; an empty list is the zero
/// ideal, and a list containing 1 the unit ideal.
HilbertData hilbert_series(std::span<const Monomial> leading_monomials, std::size_t nvars);

/// Number of degree-d monomials divisible by no generator. Raises
/// BudgetExceeded when more than `cap` monomials would be enumerated.
std::size_t hilbert_function_bruteforce(std::span<const Monomial> leading_monomials, std::size_t nvars,
                                        unsigned d, std::size_t cap = 5'000'000);

} // namespace jacobi
