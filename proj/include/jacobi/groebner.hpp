#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jacobi/poly.hpp"

namespace jacobi {

/// Remainder of `f` under multivariate division by `divisors`, reducing the
/// glex-largest reducible term first. `divisors` need not be monic. When
/// `divisor_order` is nonempty it is a permutation of divisor indices that
/// fixes which divisor is tried first for each term.
Polynomial reduce(const Polynomial &f, std::span<const Polynomial> divisors,
                  std::span<const std::size_t> divisor_order = {});

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t criterion1_skips = 0;
  std::size_t criterion2_skips = 0;
  std::size_t zero_reductions = 0;
};

/// An ideal together with its reduced Groebner basis under glex.
///
/// Invariants: every basis element is monic, no basis leading monomial
/// divides a term of another element, the basis is sorted descending by
/// leading monomial, and every generator reduces to zero.
class GroebnerIdeal {
public:
  GroebnerIdeal(RingPtr ring, std::vector<Polynomial> generators, std::vector<Polynomial> reduced_basis,
                BuchbergerStats stats = {});

  const RingPtr &ring() const noexcept { return ring_; }
  std::span<const Polynomial> generators() const noexcept { return generators_; }
  std::span<const Polynomial> basis() const noexcept { return basis_; }
  const BuchbergerStats &stats() const noexcept { return stats_; }

  std::vector<Monomial> leading_monomials() const;

  /// Unique remainder of f. Safe to call concurrently.
  Polynomial normal_form(const Polynomial &f) const;
  bool contains(const Polynomial &f) const { return normal_form(f).is_zero(); }
  /// True iff the monomial is its own normal form (a standard monomial).
  bool is_basis_elt(const Monomial &m) const;
  bool is_basis_elt(const Polynomial &mon) const;
  bool is_unit() const;

private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::vector<Polynomial> basis_;
  BuchbergerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by `gens`. Pairs are taken
/// smallest lcm first; Buchberger's coprime and chain criteria discard pairs.
/// Raises EmptyInput on an empty list and RingMismatch on mixed rings.
GroebnerIdeal buchberger(std::span<const Polynomial> gens);

/// Interreduces a Groebner basis: drops redundant elements, reduces tails,
/// makes everything monic and sorts descending by leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

} // namespace jacobi
