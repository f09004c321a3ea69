#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "jacobi/error.hpp"

namespace jacobi {

class Scalar;

/// The coefficient field K: the rationals, or a prime field F_p with p an odd
/// prime below 2^31 (so residue products fit in 64 bits).
class FieldConfig {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldConfig rationals() { return FieldConfig(Kind::Rationals, 0); }
  /// Throws InvalidField unless p is an odd prime < 2^31.
  static FieldConfig prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_mpz(const mpz_class &n) const;
  /// Image of a rational number; over F_p the denominator must be a unit.
  Scalar from_rational(const mpq_class &q) const;
  /// Accepts "p/q", "p", with an optional sign.
  Scalar parse(std::string_view text) const;

  /// "rational" or "gfp(p)".
  std::string name() const;

  friend bool operator==(const FieldConfig &, const FieldConfig &) = default;

private:
  friend class Scalar;

  FieldConfig(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Values are kept canonical (reduced fraction with
/// positive denominator, or least nonnegative residue) so equality is
/// structural. Mixing elements of different fields raises FieldMismatch.
class Scalar {
public:
  static Scalar rational(mpq_class q);
  static Scalar residue(long long value, std::uint64_t modulus);

  FieldConfig field() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(rep_); }

  bool is_zero() const;
  bool is_one() const;

  /// Precondition: is_rational().
  const mpq_class &rational_value() const { return std::get<mpq_class>(rep_); }
  /// Precondition: !is_rational().
  std::uint64_t residue_value() const { return std::get<Residue>(rep_).value; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar &operator+=(const Scalar &rhs);
  Scalar &operator-=(const Scalar &rhs);
  Scalar &operator*=(const Scalar &rhs);
  Scalar &operator/=(const Scalar &rhs);

  friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar &a, const Scalar &b);

  /// "p/q" or "p" over the rationals, decimal residue over F_p.
  std::string to_string() const;

private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Residue r) : rep_(r) {}

  void require_same_field(const Scalar &rhs) const;

  std::variant<mpq_class, Residue> rep_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace jacobi
