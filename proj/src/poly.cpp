#include "jacobi/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jacobi {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxVars)
    throw Error(ErrorCode::ArityMismatch,
                std::to_string(n) + " variables exceed the limit of " + std::to_string(kMaxVars));
}

std::uint8_t checked_exponent(unsigned e) {
  if (e > 255) throw Error(ErrorCode::IndexOutOfRange, "exponent " + std::to_string(e) + " exceeds 255");
  return static_cast<std::uint8_t>(e);
}

} // namespace

Monomial::Monomial(std::size_t nvars) {
  check_arity(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) exps_[i++] = checked_exponent(e);
  refresh();
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error(ErrorCode::IndexOutOfRange, "negative exponent");
    m.exps_[i] = checked_exponent(static_cast<unsigned>(exps[i]));
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exps_.begin(), exps_.begin() + nvars_);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_)
    throw Error(ErrorCode::IndexOutOfRange,
                "variable " + std::to_string(i) + " of " + std::to_string(nvars_));
  exps_[i] = checked_exponent(e);
  refresh();
}

void Monomial::refresh() {
  unsigned d = 0;
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    d += exps_[i];
    if (exps_[i] != 0) s |= (1u << i);
  }
  degree_ = static_cast<std::uint16_t>(d);
  support_ = s;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i)
    r.exps_[i] = checked_exponent(unsigned{a.exps_[i]} + b.exps_[i]);
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial &a, const Monomial &b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
  r.refresh();
  return r;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the exponent bytes
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering compare_glex(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::ArityMismatch,
                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
  int c = glex_cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  check_arity(nvars);
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  // Lexicographically descending exponent vectors: first variable takes the
  // largest share first.
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto &&self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, static_cast<int>(d));
  return out;
}

Ring::Ring(std::vector<std::string> varnames, FieldConfig field)
    : names_(std::move(varnames)), field_(field) {
  check_arity(names_.size());
  std::set<std::string> seen;
  for (const auto &n : names_) {
    if (n.empty()) throw Error(ErrorCode::InvalidConfig, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorCode::InvalidConfig, "duplicate variable name " + n);
  }
}

RingPtr make_ring(std::vector<std::string> varnames, FieldConfig field) {
  return std::make_shared<const Ring>(std::move(varnames), field);
}

RingPtr make_ring(const std::string &prefix, std::size_t count, FieldConfig field, int first) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(first + static_cast<int>(i)));
  return make_ring(std::move(names), field);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar &c) {
  Monomial one(ring->nvars());
  return term(std::move(ring), one, c);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial &m, const Scalar &c) {
  if (m.nvars() != ring->nvars())
    throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ring");
  if (!(c.field() == ring->field())) throw Error(ErrorCode::FieldMismatch, "coefficient field differs from ring");
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial &m) {
  auto one = ring->field().one();
  return term(std::move(ring), m, one);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  auto m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), m);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto &t : terms)
    if (t.monomial.nvars() != ring->nvars())
      throw Error(ErrorCode::ArityMismatch, "monomial arity differs from ring");
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term &a, const Term &b) { return glex_cmp(a.monomial, b.monomial) > 0; });
  Polynomial p(std::move(ring));
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
  return p;
}

void Polynomial::require_same_ring(const Polynomial &other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw Error(ErrorCode::RingMismatch, "operands live in different rings");
}

Scalar Polynomial::coefficient(const Monomial &m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term &t, const Monomial &x) { return glex_cmp(t.monomial, x) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return field().zero();
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term &t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) r.terms_.push_back(Term{t.monomial, -t.coeff});
  return r;
}

Polynomial Polynomial::scaled(const Scalar &c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) r.terms_.push_back(Term{t.monomial, t.coeff * c});
  return r;
}

Polynomial Polynomial::shifted(const Monomial &m, const Scalar &c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto &t : terms_) r.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::vector<Term> subtract_shifted(std::span<const Term> a, const Monomial &m, const Scalar &c,
                                   std::span<const Term> g) {
  std::vector<Term> r;
  r.reserve(a.size() + g.size());
  std::size_t ia = 0, ib = 0;
  Monomial shifted;
  if (ib < g.size()) shifted = g[ib].monomial * m;
  while (ia < a.size() || ib < g.size()) {
    int cmp = ib == g.size() ? 1 : (ia == a.size() ? -1 : glex_cmp(a[ia].monomial, shifted));
    if (cmp > 0) {
      r.push_back(a[ia++]);
      continue;
    }
    if (cmp < 0) {
      r.push_back(Term{shifted, -(g[ib].coeff * c)});
    } else {
      Scalar v = a[ia].coeff - g[ib].coeff * c;
      if (!v.is_zero()) r.push_back(Term{shifted, std::move(v)});
      ++ia;
    }
    if (++ib < g.size()) shifted = g[ib].monomial * m;
  }
  return r;
}

Polynomial Polynomial::minus_shifted(const Monomial &m, const Scalar &c, const Polynomial &g) const {
  require_same_ring(g);
  return from_sorted_terms(ring_, subtract_shifted(terms_, m, c, g.terms_));
}

Polynomial operator+(const Polynomial &f, const Polynomial &g) {
  f.require_same_ring(g);
  Polynomial r(f.ring_);
  r.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    int cmp = b == g.terms_.end() ? 1 : (a == f.terms_.end() ? -1 : glex_cmp(a->monomial, b->monomial));
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back(*b++);
    } else {
      Scalar v = a->coeff + b->coeff;
      if (!v.is_zero()) r.terms_.push_back(Term{a->monomial, std::move(v)});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial &f, const Polynomial &g) { return f + (-g); }

Polynomial operator*(const Polynomial &f, const Polynomial &g) {
  f.require_same_ring(g);
  Polynomial r(f.ring_);
  for (const auto &t : f.terms_) r = r + g.shifted(t.monomial, t.coeff);
  return r;
}

bool operator==(const Polynomial &f, const Polynomial &g) {
  if (f.ring_ != g.ring_ && !(*f.ring_ == *g.ring_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].monomial == g.terms_[i].monomial) || !(f.terms_[i].coeff == g.terms_[i].coeff))
      return false;
  return true;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars())
    throw Error(ErrorCode::ArityMismatch, "evaluation point has wrong length");
  Scalar acc = field().zero();
  for (const auto &t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = t.coeff.is_rational() && sgn(t.coeff.rational_value()) < 0;
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = c == "1";
    bool any_var = t.monomial.degree() > 0;
    if (!unit || !any_var) os << c;
    bool need_star = !unit || !any_var;
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << ring_->varnames()[i];
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
    }
  }
  return os.str();
}

Polynomial derivative(const Polynomial &f, std::size_t var) {
  if (var >= f.ring()->nvars())
    throw Error(ErrorCode::IndexOutOfRange,
                "variable " + std::to_string(var) + " of " + std::to_string(f.ring()->nvars()));
  std::vector<Term> out;
  for (const auto &t : f.terms()) {
    unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back(Term{m, t.coeff * f.field().from_int(e)});
  }
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial change_ring(const Polynomial &f, RingPtr target) {
  if (target->nvars() != f.ring()->nvars())
    throw Error(ErrorCode::ArityMismatch, "change_ring needs rings of equal arity");
  std::vector<Term> out;
  const auto &field = target->field();
  for (const auto &t : f.terms()) {
    Scalar c = t.coeff.is_rational() ? field.from_rational(t.coeff.rational_value())
                                     : field.from_int(static_cast<long long>(t.coeff.residue_value()));
    out.push_back(Term{t.monomial, std::move(c)});
  }
  return Polynomial::from_terms(std::move(target), std::move(out));
}

Polynomial pow(const Polynomial &f, unsigned e) {
  Polynomial r = Polynomial::constant(f.ring(), f.field().one());
  for (unsigned i = 0; i < e; ++i) r = r * f;
  return r;
}

} // namespace jacobi
