#include "jacobi/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace jacobi {

namespace {

struct Divisor {
  const Polynomial *poly;
  Scalar inv_lc;
};

const Divisor *find_divisor(const Monomial &m, const std::vector<Divisor> &ds) {
  for (const auto &d : ds)
    if (d.poly->leading_monomial().divides(m)) return &d;
  return nullptr;
}

} // namespace

Polynomial reduce(const Polynomial &f, std::span<const Polynomial> divisors,
                  std::span<const std::size_t> divisor_order) {
  std::vector<Divisor> ds;
  ds.reserve(divisors.size());
  auto add = [&](const Polynomial &g) {
    if (!(*g.ring() == *f.ring())) throw Error(ErrorCode::RingMismatch, "divisor in a different ring");
    if (!g.is_zero()) ds.push_back(Divisor{&g, g.leading_coeff().inverse()});
  };
  if (divisor_order.empty()) {
    for (const auto &g : divisors) add(g);
  } else {
    if (divisor_order.size() != divisors.size())
      throw Error(ErrorCode::DimensionMismatch, "divisor order is not a permutation");
    for (std::size_t i : divisor_order) add(divisors[i]);
  }

  std::vector<Term> remainder;
  std::vector<Term> p(f.terms().begin(), f.terms().end());
  std::size_t head = 0;
  while (head < p.size()) {
    const Term &lt = p[head];
    if (const Divisor *d = find_divisor(lt.monomial, ds)) {
      Monomial q = lt.monomial / d->poly->leading_monomial();
      Scalar c = lt.coeff * d->inv_lc;
      p = subtract_shifted(std::span<const Term>(p).subspan(head), q, c, d->poly->terms());
      head = 0;
    } else {
      remainder.push_back(lt);
      ++head;
    }
  }
  return Polynomial::from_sorted_terms(f.ring(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g) {
  if (!(*f.ring() == *g.ring())) throw Error(ErrorCode::RingMismatch, "S-polynomial of mixed rings");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = f.shifted(l / f.leading_monomial(), f.leading_coeff().inverse());
  return a.minus_shifted(l / g.leading_monomial(), g.leading_coeff().inverse(), g);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
  std::erase_if(basis, [](const Polynomial &p) { return p.is_zero(); });
  for (auto &p : basis) p = p.monic();
  std::sort(basis.begin(), basis.end(), [](const Polynomial &a, const Polynomial &b) {
    return glex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  // minimal basis: keep an element only if no kept element's leading monomial divides it
  std::vector<Polynomial> minimal;
  for (auto &p : basis) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial &q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  // tail reduction against the others; leading terms are untouched since
  // no other leading monomial divides them
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(j < i ? reduced[j] : minimal[j]);
    const Term &lead = minimal[i].leading_term();
    Polynomial tail = minimal[i] - Polynomial::term(minimal[i].ring(), lead.monomial, lead.coeff);
    Polynomial r = reduce(tail, others);
    reduced.push_back(Polynomial::term(minimal[i].ring(), lead.monomial, lead.coeff) + r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial &a, const Polynomial &b) {
    return glex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

GroebnerIdeal buchberger(std::span<const Polynomial> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  RingPtr ring = gens.front().ring();
  for (const auto &g : gens)
    if (!(*g.ring() == *ring)) throw Error(ErrorCode::RingMismatch, "generators live in different rings");

  BuchbergerStats stats;
  std::vector<Polynomial> basis;
  for (const auto &g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  // min-heap on (lcm, j, i): smallest lcm first, ties by index for determinism
  auto later = [](const Pair &a, const Pair &b) {
    int c = glex_cmp(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
  // pending[j][i] for i < j: pair (i, j) has not been treated yet
  std::vector<std::vector<bool>> pending;

  auto add_pairs_for = [&](std::size_t j) {
    pending.emplace_back(j, true);
    for (std::size_t i = 0; i < j; ++i)
      queue.push(Pair{lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<bool>(pending[b][a]);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    Pair pr = queue.top();
    queue.pop();
    ++stats.pairs_considered;
    const Polynomial &f = basis[pr.i];
    const Polynomial &g = basis[pr.j];
    bool skip = false;
    if (coprime(f.leading_monomial(), g.leading_monomial())) {
      ++stats.criterion1_skips;
      skip = true;
    } else {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
        if (is_pending(pr.i, k) || is_pending(pr.j, k)) continue;
        ++stats.criterion2_skips;
        skip = true;
        break;
      }
    }
    pending[pr.j][pr.i] = false;
    if (skip) continue;

    ++stats.pairs_reduced;
    Polynomial h = reduce(s_polynomial(f, g), basis);
    if (h.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  std::vector<Polynomial> generators(gens.begin(), gens.end());
  return GroebnerIdeal(ring, std::move(generators), reduce_basis(std::move(basis)), stats);
}

GroebnerIdeal::GroebnerIdeal(RingPtr ring, std::vector<Polynomial> generators, std::vector<Polynomial> reduced_basis,
                             BuchbergerStats stats)
    : ring_(std::move(ring)), generators_(std::move(generators)), basis_(std::move(reduced_basis)), stats_(stats) {}

std::vector<Monomial> GroebnerIdeal::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto &g : basis_) out.push_back(g.leading_monomial());
  return out;
}

Polynomial GroebnerIdeal::normal_form(const Polynomial &f) const {
  if (!(*f.ring() == *ring_)) throw Error(ErrorCode::RingMismatch, "normal form in a different ring");
  return reduce(f, basis_);
}

bool GroebnerIdeal::is_basis_elt(const Monomial &m) const {
  if (m.nvars() != ring_->nvars()) throw Error(ErrorCode::RingMismatch, "monomial arity differs from ring");
  // a monomial is its own normal form iff no leading monomial divides it
  return std::none_of(basis_.begin(), basis_.end(),
                      [&](const Polynomial &g) { return g.leading_monomial().divides(m); });
}

bool GroebnerIdeal::is_basis_elt(const Polynomial &mon) const {
  if (!(*mon.ring() == *ring_)) throw Error(ErrorCode::RingMismatch, "monomial in a different ring");
  if (!mon.is_monomial()) throw Error(ErrorCode::InvalidConfig, "expected a monomial with coefficient 1");
  return normal_form(mon) == mon;
}

bool GroebnerIdeal::is_unit() const {
  return basis_.size() == 1 && basis_.front().leading_monomial().degree() == 0;
}

} // namespace jacobi
