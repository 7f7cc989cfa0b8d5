#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo a prime.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qqplane/error.hpp"

namespace qqplane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, Prime };

/// Descriptor of a coefficient field. A `Prime` spec is only trusted once a
/// `Field` has been built from it.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;

  static constexpr FieldSpec rationals() noexcept { return {}; }
  static constexpr FieldSpec prime(std::uint64_t modulus) noexcept {
    return {FieldKind::Prime, modulus};
  }

  constexpr bool is_prime_field() const noexcept { return kind == FieldKind::Prime; }
  /// 0 for the rationals.
  constexpr std::uint64_t characteristic() const noexcept { return is_prime_field() ? p : 0; }

  friend constexpr bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline std::string to_string(const FieldSpec& spec) {
  return spec.is_prime_field() ? "GF(" + std::to_string(spec.p) + ")" : std::string("Q");
}

namespace detail {

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  for (b %= m; e != 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
  }
  return r;
}

}  // namespace detail

/// Miller-Rabin with the first twelve prime bases, exact below 2^64.
constexpr bool is_prime_number(std::uint64_t n) noexcept {
  constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (std::uint64_t b : bases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  for (; d % 2 == 0; d /= 2) ++s;
  for (std::uint64_t b : bases) {
    std::uint64_t x = detail::pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = detail::mul_mod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

class Field;

class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(Rational(0)) {}

  const FieldSpec& field() const noexcept { return spec_; }

  bool is_zero() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return std::get<Rational>(value_).is_zero();
  }
  bool is_one() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<Rational>(value_) == 1;
  }

  /// Residue in [0, p). Only valid over a prime field.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Reduced fraction. Only valid over the rationals.
  const Rational& rational() const { return std::get<Rational>(value_); }

  /// "n", "n/d" or a residue, matching the JSON text form.
  std::string to_string() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    const Rational& q = std::get<Rational>(value_);
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  }

  Scalar operator-() const {
    Scalar out = *this;
    if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
      if (*r != 0) *r = spec_.p - *r;
    } else {
      std::get<Rational>(out.value_) = -std::get<Rational>(out.value_);
    }
    return out;
  }

  Scalar inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in " + qqplane::to_string(spec_));
    Scalar out = *this;
    if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
      *r = mod_inverse(*r, spec_.p);
    } else {
      std::get<Rational>(out.value_) = Rational(1) / std::get<Rational>(out.value_);
    }
    return out;
  }

  Scalar& operator+=(const Scalar& rhs) {
    check_same_field(rhs, "addition");
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
      const std::uint64_t b = rhs.residue();
      *r = (*r >= spec_.p - b) ? *r - (spec_.p - b) : *r + b;
    } else {
      std::get<Rational>(value_) += rhs.rational();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& rhs) {
    check_same_field(rhs, "subtraction");
    return *this += -rhs;
  }
  Scalar& operator*=(const Scalar& rhs) {
    check_same_field(rhs, "multiplication");
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
      const auto prod = static_cast<unsigned __int128>(*r) * rhs.residue();
      *r = static_cast<std::uint64_t>(prod % spec_.p);
    } else {
      std::get<Rational>(value_) *= rhs.rational();
    }
    return *this;
  }
  Scalar& operator/=(const Scalar& rhs) {
    check_same_field(rhs, "division");
    return *this *= rhs.inverse();
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Structural; values are always canonical, so this is field equality.
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  friend class Field;

  Scalar(FieldSpec spec, std::uint64_t residue) : spec_(spec), value_(residue) {}
  Scalar(FieldSpec spec, Rational q) : spec_(spec), value_(std::move(q)) {}

  void check_same_field(const Scalar& rhs, const char* op) const {
    if (!(spec_ == rhs.spec_)) {
      throw Error(Errc::FieldMismatch, std::string(op) + " of " + qqplane::to_string(spec_) + " and " +
                                           qqplane::to_string(rhs.spec_) + " scalars");
    }
  }

  static std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on signed 128-bit to stay clear of overflow for any 64-bit p.
    __int128 r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      __int128 tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (t0 < 0) t0 += p;
    return static_cast<std::uint64_t>(t0);
  }

  FieldSpec spec_{};
  std::variant<std::uint64_t, Rational> value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(Errc::InvariantViolation, "unknown arithmetic op");
}

inline Scalar inverse(const Scalar& a) { return a.inverse(); }

/// A validated field: the only way to mint scalars.
class Field {
 public:
  explicit Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::Rationals) {
      spec_.p = 0;
    } else if (!is_prime_number(spec_.p)) {
      throw Error(Errc::NotPrime, std::to_string(spec_.p) + " is not prime");
    }
  }

  static Field rationals() { return Field(FieldSpec::rationals()); }
  static Field prime(std::uint64_t p) { return Field(FieldSpec::prime(p)); }

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_prime_field() const noexcept { return spec_.is_prime_field(); }

  Scalar zero() const { return from_integer(0); }
  Scalar one() const { return from_integer(1); }

  /// Integers embed as n mod p over GF(p).
  Scalar from_integer(long long n) const { return from_bigint(BigInt(n)); }

  Scalar from_bigint(const BigInt& n) const {
    if (!is_prime_field()) return Scalar(spec_, Rational(n));
    BigInt r = n % spec_.p;
    if (r < 0) r += spec_.p;
    return Scalar(spec_, r.convert_to<std::uint64_t>());
  }

  Scalar from_fraction(const BigInt& num, const BigInt& den) const {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    // Boost 1.74's rational constructor rejects a negative denominator.
    if (!is_prime_field()) return Scalar(spec_, den < 0 ? Rational(-num, -den) : Rational(num, den));
    return from_bigint(num) / from_bigint(den);
  }

  /// Parses the text form: "n" or "n/d" over Q, a decimal integer over GF(p)
  /// (reduced mod p, so "-1" is accepted).
  Scalar parse(std::string_view text) const {
    const auto bad = [&](const char* why) {
      return Error(Errc::BadScalar, "'" + std::string(text) + "' " + why + " in " + qqplane::to_string(spec_));
    };
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) throw bad("is not a number");
    const BigInt num = decimal(num_text);
    if (slash == std::string_view::npos) return from_bigint(num);
    if (is_prime_field()) throw bad("must be an integer residue");
    const std::string_view den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      throw bad("has a malformed denominator");
    }
    const BigInt den = decimal(den_text);
    if (den == 0) throw bad("has a zero denominator");
    return from_fraction(num, den);
  }

  /// All p elements in residue order. Prime fields only.
  std::vector<Scalar> elements() const {
    if (!is_prime_field()) throw Error(Errc::FieldMismatch, "the rationals are not enumerable");
    std::vector<Scalar> out;
    out.reserve(spec_.p);
    for (std::uint64_t r = 0; r < spec_.p; ++r) out.push_back(Scalar(spec_, r));
    return out;
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  static bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  }

  // cpp_int reads a leading 0 as octal, so digits are fed without sign or padding.
  static BigInt decimal(std::string_view s) {
    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    BigInt v(std::string{s});
    return negative ? BigInt(-v) : v;
  }

  FieldSpec spec_;
};

inline Field make_field(FieldSpec spec) { return Field(spec); }

}  // namespace qqplane
