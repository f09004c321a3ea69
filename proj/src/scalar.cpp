#include "jacobi/scalar.hpp"

#include <ostream>

namespace jacobi {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed values; p < 2^31 so no overflow
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class &n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldConfig FieldConfig::prime_field(std::uint64_t p) {
  if (p == 2)
    throw Error(ErrorCode::InvalidField, "characteristic 2 is not supported");
  if (p >= (std::uint64_t{1} << 31))
    throw Error(ErrorCode::InvalidField, "modulus must be below 2^31, got " + std::to_string(p));
  if (!is_prime(p))
    throw Error(ErrorCode::InvalidField, "modulus " + std::to_string(p) + " is not prime");
  return FieldConfig(Kind::PrimeField, p);
}

Scalar FieldConfig::zero() const { return from_int(0); }
Scalar FieldConfig::one() const { return from_int(1); }

Scalar FieldConfig::from_int(long long n) const {
  if (is_rational()) return Scalar::rational(mpq_class(mpz_class(static_cast<signed long>(n))));
  return Scalar::residue(n, modulus_);
}

Scalar FieldConfig::from_mpz(const mpz_class &n) const {
  if (is_rational()) return Scalar::rational(mpq_class(n));
  return Scalar::residue(static_cast<long long>(reduce_mpz(n, modulus_)), modulus_);
}

Scalar FieldConfig::from_rational(const mpq_class &q) const {
  if (is_rational()) return Scalar::rational(q);
  Scalar den = from_mpz(q.get_den());
  if (den.is_zero())
    throw Error(ErrorCode::DivisionByZero,
                "denominator of " + q.get_str() + " vanishes mod " + std::to_string(modulus_));
  return from_mpz(q.get_num()) / den;
}

Scalar FieldConfig::parse(std::string_view text) const {
  std::string s(text);
  auto valid = [](const std::string &t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool digits = false, slash = false, after_slash = false;
    for (; i < t.size(); ++i) {
      char c = t[i];
      if (c >= '0' && c <= '9') {
        digits = true;
        if (slash) after_slash = true;
      } else if (c == '/' && !slash && digits) {
        slash = true;
      } else {
        return false;
      }
    }
    return digits && (!slash || after_slash);
  };
  if (!valid(s)) throw Error(ErrorCode::ParseError, "not a rational number: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  auto slash = s.find('/');
  mpz_class num(s.substr(0, slash), 10);
  mpz_class den(1);
  if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q = mpq_class(num, den);
  q.canonicalize();
  return from_rational(q);
}

std::string FieldConfig::name() const {
  if (is_rational()) return "rational";
  return "gfp(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::residue(long long value, std::uint64_t modulus) {
  auto p = static_cast<long long>(modulus);
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint64_t>(r), modulus});
}

FieldConfig Scalar::field() const {
  if (is_rational()) return FieldConfig::rationals();
  return FieldConfig(FieldConfig::Kind::PrimeField, std::get<Residue>(rep_).modulus);
}

bool Scalar::is_zero() const {
  if (auto *q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
  return std::get<Residue>(rep_).value == 0;
}

bool Scalar::is_one() const {
  if (auto *q = std::get_if<mpq_class>(&rep_)) return *q == 1;
  return std::get<Residue>(rep_).value == 1;
}

void Scalar::require_same_field(const Scalar &rhs) const {
  if (rep_.index() != rhs.rep_.index() ||
      (!is_rational() && std::get<Residue>(rep_).modulus != std::get<Residue>(rhs.rep_).modulus))
    throw Error(ErrorCode::FieldMismatch, field().name() + " vs " + rhs.field().name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto *q = std::get_if<mpq_class>(&rep_)) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q->get_mpq_t());
    return Scalar(std::move(r));
  }
  const auto &r = std::get<Residue>(rep_);
  return Scalar(Residue{inverse_mod(r.value, r.modulus), r.modulus});
}

Scalar Scalar::operator-() const {
  if (auto *q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
  const auto &r = std::get<Residue>(rep_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
  require_same_field(rhs);
  if (auto *q = std::get_if<mpq_class>(&rep_)) {
    *q += std::get<mpq_class>(rhs.rep_);
  } else {
    auto &r = std::get<Residue>(rep_);
    r.value = (r.value + std::get<Residue>(rhs.rep_).value) % r.modulus;
  }
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
  require_same_field(rhs);
  if (auto *q = std::get_if<mpq_class>(&rep_)) {
    *q -= std::get<mpq_class>(rhs.rep_);
  } else {
    auto &r = std::get<Residue>(rep_);
    r.value = (r.value + r.modulus - std::get<Residue>(rhs.rep_).value) % r.modulus;
  }
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
  require_same_field(rhs);
  if (auto *q = std::get_if<mpq_class>(&rep_)) {
    *q *= std::get<mpq_class>(rhs.rep_);
  } else {
    auto &r = std::get<Residue>(rep_);
    r.value = (r.value * std::get<Residue>(rhs.rep_).value) % r.modulus;
  }
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  if (auto *q = std::get_if<mpq_class>(&a.rep_)) return *q == std::get<mpq_class>(b.rep_);
  const auto &ra = std::get<Scalar::Residue>(a.rep_);
  const auto &rb = std::get<Scalar::Residue>(b.rep_);
  return ra.modulus == rb.modulus && ra.value == rb.value;
}

std::string Scalar::to_string() const {
  if (auto *q = std::get_if<mpq_class>(&rep_)) return q->get_str();
  return std::to_string(std::get<Residue>(rep_).value);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

} // namespace jacobi
