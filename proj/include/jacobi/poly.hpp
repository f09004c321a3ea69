#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jacobi/scalar.hpp"

namespace jacobi {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a monomial in at most kMaxVars variables. Exponents
/// are limited to 255; products that overflow raise IndexOutOfRange.
class Monomial {
public:
  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t support() const noexcept { return support_; }
  std::vector<int> exponents() const;

  void set(std::size_t i, unsigned e);

  /// True iff this monomial divides `other`.
  bool divides(const Monomial &other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial &a, const Monomial &b);
  /// Precondition: `b` divides `a`.
  friend Monomial operator/(const Monomial &a, const Monomial &b);
  friend Monomial lcm(const Monomial &a, const Monomial &b);
  friend bool coprime(const Monomial &a, const Monomial &b) noexcept {
    return (a.support_ & b.support_) == 0;
  }

  friend bool operator==(const Monomial &a, const Monomial &b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  /// Graded lexicographic comparison without arity checks: returns <0, 0, >0.
  friend int glex_cmp(const Monomial &a, const Monomial &b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
    return std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
  }

  std::size_t hash() const noexcept;

private:
  void refresh();

  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Graded lex: higher total degree wins, ties broken lexicographically with
/// the first variable largest. Raises ArityMismatch on differing arities.
std::strong_ordering compare_glex(const Monomial &a, const Monomial &b);

/// All monomials of total degree d in n variables, sorted descending by glex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// A polynomial ring K[v_1..v_n] with named variables and glex order.
class Ring {
public:
  Ring(std::vector<std::string> varnames, FieldConfig field);

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string> &varnames() const noexcept { return names_; }
  const FieldConfig &field() const noexcept { return field_; }

  friend bool operator==(const Ring &, const Ring &) = default;

private:
  std::vector<std::string> names_;
  FieldConfig field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> varnames, FieldConfig field);
/// Variables named prefix+first, prefix+(first+1), ...
RingPtr make_ring(const std::string &prefix, std::size_t count, FieldConfig field, int first = 0);

struct Term {
  Monomial monomial;
  Scalar coeff;
};

/// Sparse polynomial: terms sorted strictly descending in glex, no zero
/// coefficients. Immutable by convention; arithmetic returns new values.
class Polynomial {
public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar &c);
  static Polynomial term(RingPtr ring, const Monomial &m, const Scalar &c);
  static Polynomial monomial(RingPtr ring, const Monomial &m);
  static Polynomial variable(RingPtr ring, std::size_t index);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusted: terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr &ring() const noexcept { return ring_; }
  const FieldConfig &field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Precondition: nonzero.
  const Term &leading_term() const { return terms_.front(); }
  const Monomial &leading_monomial() const { return terms_.front().monomial; }
  const Scalar &leading_coeff() const { return terms_.front().coeff; }

  Scalar coefficient(const Monomial &m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1 && terms_.front().coeff.is_one(); }

  Polynomial operator-() const;
  Polynomial scaled(const Scalar &c) const;
  Polynomial shifted(const Monomial &m, const Scalar &c) const;
  Polynomial monic() const;

  /// this - c*m*g, the elementary reduction step.
  Polynomial minus_shifted(const Monomial &m, const Scalar &c, const Polynomial &g) const;

  friend Polynomial operator+(const Polynomial &f, const Polynomial &g);
  friend Polynomial operator-(const Polynomial &f, const Polynomial &g);
  friend Polynomial operator*(const Polynomial &f, const Polynomial &g);
  friend bool operator==(const Polynomial &f, const Polynomial &g);

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Terms descending in glex, e.g. "2*x0*y1 + x3^2".
  std::string to_string() const;

private:
  void require_same_ring(const Polynomial &other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// a - c*m*g on sorted term lists; the result is sorted with no zeros.
std::vector<Term> subtract_shifted(std::span<const Term> a, const Monomial &m, const Scalar &c,
                                   std::span<const Term> g);

/// Formal partial derivative with respect to variable `var` (0-based).
Polynomial derivative(const Polynomial &f, std::size_t var);

/// Same exponents, coefficients mapped into `target`'s field. The rings must
/// have equal arity.
Polynomial change_ring(const Polynomial &f, RingPtr target);

Polynomial pow(const Polynomial &f, unsigned e);

} // namespace jacobi

template <> struct std::hash<jacobi::Monomial> {
  std::size_t operator()(const jacobi::Monomial &m) const noexcept { return m.hash(); }
};
