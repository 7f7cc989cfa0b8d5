#pragma once

// Homogeneous-coordinate projective plane over an exact field.
//
// Points and lines share one representation, HomTriple, distinguished by a
// role tag. Join and meet are both the cross product; duality is a role swap.

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include "qqplane/error.hpp"
#include "qqplane/scalar_field.hpp"

namespace qqplane {

enum class Role { Point, Line };

constexpr Role dual(Role r) noexcept { return r == Role::Point ? Role::Line : Role::Point; }

constexpr const char* role_name(Role r) noexcept { return r == Role::Point ? "point" : "line"; }

using RawTriple = std::array<Scalar, 3>;

/// A projective point or line in canonical form. Over GF(p) the first nonzero
/// coordinate is 1; over Q the coordinates are coprime integers with a
/// positive first nonzero entry. Equal classes therefore compare equal.
class HomTriple {
 public:
  const FieldSpec& field() const noexcept { return coords_[0].field(); }
  Role role() const noexcept { return role_; }
  bool is_point() const noexcept { return role_ == Role::Point; }
  bool is_line() const noexcept { return role_ == Role::Line; }
  const RawTriple& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  /// "(x,y,z)" for points, "[a,b,c]" for lines.
  std::string to_string() const {
    const char open = is_point() ? '(' : '[';
    const char close = is_point() ? ')' : ']';
    return std::string(1, open) + coords_[0].to_string() + "," + coords_[1].to_string() + "," +
           coords_[2].to_string() + close;
  }

  friend bool operator==(const HomTriple&, const HomTriple&) = default;

 private:
  friend HomTriple normalize(RawTriple raw, Role role);
  friend HomTriple dualize(const HomTriple& t);

  HomTriple(RawTriple coords, Role role) : coords_(std::move(coords)), role_(role) {}

  RawTriple coords_;
  Role role_;
};

using Point = HomTriple;
using Line = HomTriple;

namespace detail {

inline void require_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::FieldMismatch, to_string(a.field()) + " vs " + to_string(b.field()));
  }
}

inline void require_same_field(const HomTriple& a, const HomTriple& b) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::FieldMismatch, a.to_string() + " over " + to_string(a.field()) + " vs " + b.to_string() +
                                         " over " + to_string(b.field()));
  }
}

inline void require_role(const HomTriple& t, Role role) {
  if (t.role() != role) {
    throw Error(Errc::RoleMismatch, t.to_string() + " is a " + role_name(t.role()) + ", expected a " + role_name(role));
  }
}

inline bool integral(const RawTriple& t) {
  for (const auto& c : t) {
    if (c.field().is_prime_field() || boost::multiprecision::denominator(c.rational()) != 1) return false;
  }
  return true;
}

inline RawTriple cross(const RawTriple& a, const RawTriple& b) {
  // Canonical rational triples are integer vectors; skip the per-product gcd.
  if (integral(a) && integral(b)) {
    const auto n = [](const Scalar& c) -> BigInt { return boost::multiprecision::numerator(c.rational()); };
    const Field q = Field::rationals();
    return {q.from_bigint(n(a[1]) * n(b[2]) - n(a[2]) * n(b[1])), q.from_bigint(n(a[2]) * n(b[0]) - n(a[0]) * n(b[2])),
            q.from_bigint(n(a[0]) * n(b[1]) - n(a[1]) * n(b[0]))};
  }
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Scalar dot(const RawTriple& a, const RawTriple& b) {
  if (integral(a) && integral(b)) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      sum += boost::multiprecision::numerator(a[i].rational()) * boost::multiprecision::numerator(b[i].rational());
    }
    return Field::rationals().from_bigint(sum);
  }
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Scalar det3(const RawTriple& a, const RawTriple& b, const RawTriple& c) { return dot(a, cross(b, c)); }

inline bool is_zero(const RawTriple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

inline BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace detail

/// Canonical representative of the projective class of `raw`.
inline HomTriple normalize(RawTriple raw, Role role) {
  detail::require_same_field(raw[0], raw[1]);
  detail::require_same_field(raw[0], raw[2]);
  if (detail::is_zero(raw)) throw Error(Errc::ZeroTriple, "(0,0,0) is not a projective element");

  std::size_t lead = 0;
  while (raw[lead].is_zero()) ++lead;

  const FieldSpec spec = raw[0].field();
  if (spec.is_prime_field()) {
    if (!raw[lead].is_one()) {
      const Scalar scale = raw[lead].inverse();
      for (auto& c : raw) c *= scale;
    }
    return HomTriple(std::move(raw), role);
  }

  // Clear denominators, then divide out the content and fix the sign.
  BigInt den_lcm = 1;
  for (const auto& c : raw) {
    const BigInt& d = boost::multiprecision::denominator(c.rational());
    if (d != 1) den_lcm = detail::lcm(den_lcm, d);
  }
  std::array<BigInt, 3> ints;
  BigInt content = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& q = raw[i].rational();
    ints[i] = boost::multiprecision::numerator(q) * (den_lcm / boost::multiprecision::denominator(q));
    content = boost::multiprecision::gcd(content, ints[i]);
  }
  if (ints[lead] < 0) content = -content;
  const Field field(spec);
  RawTriple out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = field.from_bigint(ints[i] / content);
  return HomTriple(std::move(out), role);
}

inline HomTriple make_triple(const Field& field, const std::array<long long, 3>& xs, Role role) {
  return normalize({field.from_integer(xs[0]), field.from_integer(xs[1]), field.from_integer(xs[2])}, role);
}
inline Point make_point(const Field& field, const std::array<long long, 3>& xs) {
  return make_triple(field, xs, Role::Point);
}
inline Line make_line(const Field& field, const std::array<long long, 3>& xs) {
  return make_triple(field, xs, Role::Line);
}

/// True iff `a` and `b` differ by a nonzero scalar multiple.
inline bool proj_eq(const HomTriple& a, const HomTriple& b) {
  detail::require_same_field(a, b);
  detail::require_role(b, a.role());
  return a == b;
}

inline Line join(const Point& p, const Point& q) {
  detail::require_role(p, Role::Point);
  detail::require_role(q, Role::Point);
  detail::require_same_field(p, q);
  RawTriple l = detail::cross(p.coords(), q.coords());
  if (detail::is_zero(l)) throw Error(Errc::CoincidentPoints, "join of " + p.to_string() + " with itself");
  return normalize(std::move(l), Role::Line);
}

inline Point meet(const Line& l, const Line& m) {
  detail::require_role(l, Role::Line);
  detail::require_role(m, Role::Line);
  detail::require_same_field(l, m);
  RawTriple x = detail::cross(l.coords(), m.coords());
  if (detail::is_zero(x)) throw Error(Errc::CoincidentLines, "meet of " + l.to_string() + " with itself");
  return normalize(std::move(x), Role::Point);
}

inline bool incident(const Point& p, const Line& l) {
  detail::require_role(p, Role::Point);
  detail::require_role(l, Role::Line);
  detail::require_same_field(p, l);
  return detail::dot(p.coords(), l.coords()).is_zero();
}

/// Role-agnostic linear dependence of three triples (det = 0).
inline bool dependent(const HomTriple& a, const HomTriple& b, const HomTriple& c) {
  detail::require_same_field(a, b);
  detail::require_same_field(a, c);
  detail::require_role(b, a.role());
  detail::require_role(c, a.role());
  return detail::det3(a.coords(), b.coords(), c.coords()).is_zero();
}

inline bool collinear(const Point& p, const Point& q, const Point& r) {
  detail::require_role(p, Role::Point);
  return dependent(p, q, r);
}

inline bool concurrent(const Line& l, const Line& m, const Line& n) {
  detail::require_role(l, Role::Line);
  return dependent(l, m, n);
}

/// Four same-role elements, pairwise distinct and no three dependent.
inline bool general_position4(const std::array<HomTriple, 4>& t) {
  for (std::size_t i = 1; i < 4; ++i) {
    detail::require_same_field(t[0], t[i]);
    detail::require_role(t[i], t[0].role());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (t[i] == t[j]) return false;
    }
  }
  constexpr std::array<std::array<std::size_t, 3>, 4> triples{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  for (const auto& [a, b, c] : triples) {
    if (dependent(t[a], t[b], t[c])) return false;
  }
  return true;
}

inline HomTriple dualize(const HomTriple& t) { return HomTriple(t.coords(), dual(t.role())); }

template <std::size_t N>
std::array<HomTriple, N> dualize(const std::array<HomTriple, N>& ts) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<HomTriple, N>{dualize(ts[I])...};
  }(std::make_index_sequence<N>{});
}

using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

/// Projective transformation given by an invertible 3x3 matrix. Points map
/// by the matrix, lines by its cofactor matrix (inverse-transpose up to the
/// scalar det).
class Collineation {
 public:
  explicit Collineation(Matrix3 m) : matrix_(std::move(m)) {
    for (const auto& row : matrix_) {
      for (const auto& x : row) detail::require_same_field(matrix_[0][0], x);
    }
    if (determinant().is_zero()) throw Error(Errc::SingularMatrix, "collineation matrix has zero determinant");
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        cofactor_[i][j] = matrix_[i1][j1] * matrix_[i2][j2] - matrix_[i1][j2] * matrix_[i2][j1];
      }
    }
  }

  static Collineation identity(const Field& field) {
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m[i][j] = i == j ? field.one() : field.zero();
    }
    return Collineation(std::move(m));
  }

  const FieldSpec& field() const noexcept { return matrix_[0][0].field(); }
  const Matrix3& matrix() const noexcept { return matrix_; }

  Scalar determinant() const {
    return detail::det3(matrix_[0], matrix_[1], matrix_[2]);
  }

  HomTriple operator()(const HomTriple& t) const {
    if (!(t.field() == field())) {
      throw Error(Errc::FieldMismatch, "collineation over " + to_string(field()) + " applied to " + t.to_string() +
                                           " over " + to_string(t.field()));
    }
    const Matrix3& m = t.is_point() ? matrix_ : cofactor_;
    return normalize({detail::dot(m[0], t.coords()), detail::dot(m[1], t.coords()), detail::dot(m[2], t.coords())},
                     t.role());
  }

 private:
  Matrix3 matrix_;
  Matrix3 cofactor_;
};

inline HomTriple apply_collineation(const Collineation& t, const HomTriple& x) { return t(x); }

template <std::size_t N>
std::array<HomTriple, N> apply_collineation(const Collineation& t, const std::array<HomTriple, N>& xs) {
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<HomTriple, N>{t(xs[I])...};
  }(std::make_index_sequence<N>{});
}

}  // namespace qqplane
