#include "jacobi/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

using Series = std::vector<mpz_class>;

void trim(Series &s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(const Series &a, const Series &b, std::size_t shift_b = 0) {
  Series r(std::max(a.size(), b.size() + shift_b), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift_b] += b[i];
  trim(r);
  return r;
}

Series times_one_minus_t_pow(const Series &a, unsigned d) {
  // a * (1 - t^d)
  Series r = a;
  r.resize(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + d] -= a[i];
  trim(r);
  return r;
}

/// Removes duplicates and generators divisible by another generator.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial &a, const Monomial &b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto &g : gens) {
    bool redundant = false;
    for (const auto &h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

/// Numerator of the Hilbert series of K[x]/(gens) over (1-t)^n, by the
/// pivot recursion N(I) = N(I + (p)) + t^deg p * N(I : p).
Series numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto &g : gens)
    if (g.degree() == 0) return {};

  std::uint32_t seen = 0;
  bool coprime = true;
  for (const auto &g : gens) {
    if (seen & g.support()) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    Series r{1};
    for (const auto &g : gens) r = times_one_minus_t_pow(r, g.degree());
    return r;
  }

  // Pivot x_v^e on the variable of a non-pure-power generator that occurs
  // in the most generators, e the median of its exponents but below any pure
  // power of x_v. Then x_v^e is not in I and I : x_v^e is strictly larger
  // than I, so both branches make progress.
  const std::size_t n = gens.front().nvars();
  std::uint32_t mixed = 0;
  for (const auto &g : gens)
    if (std::popcount(g.support()) > 1) mixed |= g.support();
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(mixed >> v & 1u)) continue;
    std::size_t c = 0;
    for (const auto &g : gens) c += g[v] > 0;
    if (c > best_count) best = v, best_count = c;
  }
  std::vector<unsigned> exps;
  unsigned pure_cap = ~0u;
  for (const auto &g : gens) {
    if (g[best] == 0) continue;
    if (std::popcount(g.support()) == 1) pure_cap = std::min(pure_cap, g[best] - 1u);
    else exps.push_back(g[best]);
  }
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  const unsigned e = std::min(exps[exps.size() / 2], pure_cap);
  Monomial pivot = Monomial::variable(n, best, e);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto &g : gens) {
    Monomial q = g;
    q.set(best, g[best] > e ? g[best] - e : 0);
    quotient.push_back(q);
  }
  return add(numerator(std::move(with_pivot)), numerator(std::move(quotient)), e);
}

mpz_class binomial(long n, unsigned long k) {
  if (n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
  return r;
}

} // namespace

mpz_class HilbertData::series_coefficient(std::size_t d) const {
  mpz_class r = 0;
  const long k = static_cast<long>(pole_order);
  for (std::size_t i = 0; i < reduced_numerator.size() && i <= d; ++i) {
    if (k == 0) {
      if (i == d) r += reduced_numerator[i];
    } else {
      r += reduced_numerator[i] * binomial(static_cast<long>(d - i) + k - 1, static_cast<unsigned long>(k - 1));
    }
  }
  return r;
}

mpq_class HilbertData::polynomial_value(const mpq_class &d) const {
  mpq_class r = 0;
  for (std::size_t i = polynomial.size(); i-- > 0;) r = r * d + polynomial[i];
  return r;
}

std::string HilbertData::polynomial_string() const {
  if (polynomial.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = polynomial.size(); i-- > 0;) {
    const mpq_class &c = polynomial[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) {
      out << a.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

HilbertData hilbert_series(std::span<const Monomial> leading_monomials, std::size_t nvars) {
  for (const auto &m : leading_monomials)
    if (m.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "leading monomial arity differs from nvars");
  HilbertData h;
  h.nvars = nvars;
  h.numerator = numerator({leading_monomials.begin(), leading_monomials.end()});
  if (h.numerator.empty()) return h;  // unit ideal: series 0

  // Cancel factors (1-t) while N(1) = 0, by synthetic division.
  Series num = h.numerator;
  std::size_t k = nvars;
  while (k > 0) {
    mpz_class at_one = 0;
    for (const auto &c : num) at_one += c;
    if (at_one != 0) break;
    // num = (1-t) q  =>  q_i = sum_{m <= i} num_m
    Series q(num.size() - 1);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) q[i] = (acc += num[i]);
    num = std::move(q);
    trim(num);
    --k;
  }
  h.reduced_numerator = num;
  h.pole_order = k;
  h.dimension = static_cast<int>(k) - 1;
  const std::size_t degh = num.empty() ? 0 : num.size() - 1;
  h.regularity_index = degh + 1 > k ? degh + 1 - k : 0;
  if (k == 0) return h;

  // P(d) = sum_i h_i C(d - i + k - 1, k - 1) = sum_i h_i prod_{m=1}^{k-1} (d - i + m) / (k-1)!
  std::vector<mpq_class> poly(k, 0);
  mpz_class fact = 1;
  for (std::size_t m = 2; m < k; ++m) fact *= static_cast<unsigned long>(m);
  for (std::size_t i = 0; i < num.size(); ++i) {
    std::vector<mpq_class> term{1};
    for (std::size_t m = 1; m < k; ++m) {
      mpq_class shift = static_cast<long>(m) - static_cast<long>(i);
      std::vector<mpq_class> next(term.size() + 1, 0);
      for (std::size_t a = 0; a < term.size(); ++a) {
        next[a + 1] += term[a];
        next[a] += term[a] * shift;
      }
      term = std::move(next);
    }
    for (std::size_t a = 0; a < term.size(); ++a) poly[a] += mpq_class(num[i]) * term[a] / mpq_class(fact);
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  for (auto &c : poly) c.canonicalize();
  h.polynomial = std::move(poly);
  mpq_class p0 = h.polynomial.empty() ? mpq_class(0) : h.polynomial.front();
  mpz_class g = p0.get_num() - 1;  // P is integer valued, so P(0) is an integer
  if (h.dimension % 2 != 0) g = -g;
  h.genus = g;
  return h;
}

std::size_t hilbert_function_bruteforce(std::span<const Monomial> leading_monomials, std::size_t nvars, unsigned d,
                                        std::size_t cap) {
  mpz_class count = binomial(static_cast<long>(nvars + d) - 1, d);
  if (nvars == 0) count = d == 0 ? 1 : 0;
  if (count > cap) throw Error(ErrorCode::BudgetExceeded, "brute-force Hilbert function would enumerate " +
                                                              count.get_str() + " monomials");
  if (nvars == 0) return d == 0 && leading_monomials.empty() ? 1 : 0;
  std::size_t standard = 0;
  for (const auto &m : monomials_of_degree(nvars, d)) {
    bool divisible = false;
    for (const auto &g : leading_monomials)
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    standard += !divisible;
  }
  return standard;
}

} // namespace jacobi
