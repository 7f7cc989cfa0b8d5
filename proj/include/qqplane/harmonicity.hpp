#pragma once

// Complete quadrangles and quadrilaterals, their diagonal triangles, and the
// Desargues construction that pairs a quadrangle with the quadrilateral
// sharing its diagonal triangle.
//
// Index conventions (P0..P3 vertices, p0..p3 sides, 1-based D/d in comments,
// 0-based in arrays):
//   D1 = P0P1 . P2P3,  D2 = P0P2 . P3P1,  D3 = P0P3 . P1P2
//   d1 = (p0.p1)(p2.p3), d2 = (p0.p2)(p3.p1), d3 = (p0.p3)(p1.p2)

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "qqplane/error.hpp"
#include "qqplane/incidence.hpp"

namespace qqplane {

/// Four points, no three collinear, in a fixed order.
class CompleteQuadrangle {
 public:
  explicit CompleteQuadrangle(std::array<Point, 4> vertices) : vertices_(std::move(vertices)) {
    for (const auto& v : vertices_) detail::require_role(v, Role::Point);
    if (!general_position4(vertices_)) {
      throw Error(Errc::InvalidQuadrangle, describe() + " is not in general position");
    }
  }

  const std::array<Point, 4>& vertices() const noexcept { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const FieldSpec& field() const noexcept { return vertices_[0].field(); }

  std::string describe() const {
    return vertices_[0].to_string() + vertices_[1].to_string() + vertices_[2].to_string() + vertices_[3].to_string();
  }

  friend bool operator==(const CompleteQuadrangle&, const CompleteQuadrangle&) = default;

 private:
  std::array<Point, 4> vertices_;
};

/// Four lines, no three concurrent, in a fixed order.
class CompleteQuadrilateral {
 public:
  explicit CompleteQuadrilateral(std::array<Line, 4> sides) : sides_(std::move(sides)) {
    for (const auto& s : sides_) detail::require_role(s, Role::Line);
    if (!general_position4(sides_)) {
      throw Error(Errc::InvalidQuadrilateral, describe() + " is not in general position");
    }
  }

  const std::array<Line, 4>& sides() const noexcept { return sides_; }
  const Line& operator[](std::size_t i) const { return sides_[i]; }
  const FieldSpec& field() const noexcept { return sides_[0].field(); }

  std::string describe() const {
    return sides_[0].to_string() + sides_[1].to_string() + sides_[2].to_string() + sides_[3].to_string();
  }

  friend bool operator==(const CompleteQuadrilateral&, const CompleteQuadrilateral&) = default;

 private:
  std::array<Line, 4> sides_;
};

/// Noncollinear D1 D2 D3 with d1 = D2D3, d2 = D3D1, d3 = D1D2.
struct DiagonalTriangle {
  std::array<Point, 3> points;
  std::array<Line, 3> lines;

  friend bool operator==(const DiagonalTriangle&, const DiagonalTriangle&) = default;
};

struct QQPair {
  CompleteQuadrangle quadrangle;
  CompleteQuadrilateral quadrilateral;
  DiagonalTriangle triangle;
};

/// The diagonal points all lie on `line` (characteristic 2).
class DiagonalsCollinearError : public Error {
 public:
  DiagonalsCollinearError(const std::string& what, Line line)
      : Error(Errc::DiagonalsCollinear, what), line_(std::move(line)) {}
  const Line& line() const noexcept { return line_; }

 private:
  Line line_;
};

/// The diagonal lines all pass through `point` (characteristic 2).
class DiagonalsConcurrentError : public Error {
 public:
  DiagonalsConcurrentError(const std::string& what, Point point)
      : Error(Errc::DiagonalsConcurrent, what), point_(std::move(point)) {}
  const Point& point() const noexcept { return point_; }

 private:
  Point point_;
};

inline CompleteQuadrilateral dualize(const CompleteQuadrangle& q) { return CompleteQuadrilateral(dualize(q.vertices())); }
inline CompleteQuadrangle dualize(const CompleteQuadrilateral& s) { return CompleteQuadrangle(dualize(s.sides())); }

inline CompleteQuadrangle apply_collineation(const Collineation& t, const CompleteQuadrangle& q) {
  return CompleteQuadrangle(apply_collineation(t, q.vertices()));
}
inline CompleteQuadrilateral apply_collineation(const Collineation& t, const CompleteQuadrilateral& s) {
  return CompleteQuadrilateral(apply_collineation(t, s.sides()));
}

namespace detail {

inline Error invariant(const std::string& what) { return Error(Errc::InvariantViolation, what); }

// Opposite-side pairs of a quadrangle, in D1, D2, D3 order.
inline constexpr std::array<std::array<std::size_t, 4>, 3> kOppositePairs{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};

}  // namespace detail

/// D1, D2, D3. Pairwise distinct for every complete quadrangle: if two
/// coincided, the common point would be both P0 and P3.
inline std::array<Point, 3> diagonal_points(const CompleteQuadrangle& q) {
  const auto& v = q.vertices();
  const auto diag = [&](const std::array<std::size_t, 4>& ix) {
    return meet(join(v[ix[0]], v[ix[1]]), join(v[ix[2]], v[ix[3]]));
  };
  std::array<Point, 3> d{diag(detail::kOppositePairs[0]), diag(detail::kOppositePairs[1]),
                         diag(detail::kOppositePairs[2])};
  if (d[0] == d[1] || d[1] == d[2] || d[2] == d[0]) {
    throw detail::invariant("diagonal points of " + q.describe() + " are not distinct");
  }
  return d;
}

/// d1, d2, d3; the exact dual of diagonal_points.
inline std::array<Line, 3> diagonal_lines(const CompleteQuadrilateral& s) {
  const auto& v = s.sides();
  const auto diag = [&](const std::array<std::size_t, 4>& ix) {
    return join(meet(v[ix[0]], v[ix[1]]), meet(v[ix[2]], v[ix[3]]));
  };
  std::array<Line, 3> d{diag(detail::kOppositePairs[0]), diag(detail::kOppositePairs[1]),
                        diag(detail::kOppositePairs[2])};
  if (d[0] == d[1] || d[1] == d[2] || d[2] == d[0]) {
    throw detail::invariant("diagonal lines of " + s.describe() + " are not distinct");
  }
  return d;
}

namespace detail {

// Sides D2D3, D3D1, D1D2 of a triangle with distinct vertices.
inline std::array<Line, 3> triangle_sides(const std::array<Point, 3>& d) {
  return {join(d[1], d[2]), join(d[2], d[0]), join(d[0], d[1])};
}

inline std::array<Point, 3> triangle_vertices(const std::array<Line, 3>& d) {
  return {meet(d[1], d[2]), meet(d[2], d[0]), meet(d[0], d[1])};
}

}  // namespace detail

/// Throws DiagonalsCollinearError (carrying the common line) when the
/// diagonal points are collinear.
inline DiagonalTriangle diagonal_triangle(const CompleteQuadrangle& q) {
  const auto points = diagonal_points(q);
  if (collinear(points[0], points[1], points[2])) {
    Line common = join(points[0], points[1]);
    throw DiagonalsCollinearError("diagonal points of " + q.describe() + " lie on " + common.to_string() +
                                      " (characteristic-2 collapse)",
                                  std::move(common));
  }
  DiagonalTriangle tri{points, detail::triangle_sides(points)};
  if (detail::triangle_vertices(tri.lines) != tri.points) {
    throw detail::invariant("diagonal triangle of " + q.describe() + " does not close");
  }
  return tri;
}

/// Dual form: throws DiagonalsConcurrentError (carrying the common point).
inline DiagonalTriangle diagonal_triangle(const CompleteQuadrilateral& s) {
  const auto lines = diagonal_lines(s);
  if (concurrent(lines[0], lines[1], lines[2])) {
    Point common = meet(lines[0], lines[1]);
    throw DiagonalsConcurrentError("diagonal lines of " + s.describe() + " pass through " + common.to_string() +
                                       " (characteristic-2 collapse)",
                                   std::move(common));
  }
  DiagonalTriangle tri{detail::triangle_vertices(lines), lines};
  if (detail::triangle_sides(tri.points) != tri.lines) {
    throw detail::invariant("diagonal triangle of " + s.describe() + " does not close");
  }
  return tri;
}

/// Axis of two triangles perspective from `center`. Side i of a triangle is
/// the one opposite vertex i, so the side meets are
///   T1[1]T1[2] . T2[1]T2[2],  T1[2]T1[0] . T2[2]T2[0],  T1[0]T1[1] . T2[0]T2[1].
/// The axis is spanned by the first two distinct meets and the remaining one
/// is checked against it (the Desargues conclusion).
inline Line desargues_axis(const std::array<Point, 3>& first, const std::array<Point, 3>& second,
                           const Point& center) {
  detail::require_role(center, Role::Point);
  for (std::size_t i = 0; i < 3; ++i) {
    detail::require_role(first[i], Role::Point);
    detail::require_role(second[i], Role::Point);
    detail::require_same_field(center, first[i]);
    detail::require_same_field(center, second[i]);
  }
  const auto describe = [](const std::array<Point, 3>& t) {
    return t[0].to_string() + t[1].to_string() + t[2].to_string();
  };
  for (const auto* tri : {&first, &second}) {
    const auto& t = *tri;
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[0] || collinear(t[0], t[1], t[2])) {
      throw Error(Errc::DegenerateTriangle, describe(t) + " has collinear vertices");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!dependent(first[i], second[i], center)) {
      throw Error(Errc::NotPerspectiveFromPoint, "join of " + first[i].to_string() + " and " +
                                                     second[i].to_string() + " misses " + center.to_string());
    }
  }
  const auto first_sides = detail::triangle_sides(first);
  const auto second_sides = detail::triangle_sides(second);
  std::array<std::optional<Point>, 3> meets;
  for (std::size_t i = 0; i < 3; ++i) {
    if (first_sides[i] == second_sides[i]) {
      throw Error(Errc::CorrespondingSidesEqual, "both triangles have side " + first_sides[i].to_string());
    }
    meets[i] = meet(first_sides[i], second_sides[i]);
  }
  // Two side meets coincide only at a shared vertex; the third then differs.
  std::size_t a = 0, b = 1, c = 2;
  if (*meets[0] == *meets[1]) {
    b = 2;
    c = 1;
  }
  if (*meets[a] == *meets[b]) throw detail::invariant("all side meets of " + describe(first) + " coincide");
  Line axis = join(*meets[a], *meets[b]);
  if (!incident(*meets[c], axis)) {
    throw detail::invariant("Desargues conclusion failed: " + meets[c]->to_string() + " is off " + axis.to_string());
  }
  return axis;
}

/// The quadrilateral sharing the diagonal triangle of `q`. The diagonal
/// triangle is perspective to P1P2P3 from P0, to P0P3P2 from P1, to P3P0P1
/// from P2 and to P2P1P0 from P3; the four axes are the sides p0..p3.
inline CompleteQuadrilateral construct_quadrilateral(const CompleteQuadrangle& q) {
  const DiagonalTriangle tri = diagonal_triangle(q);
  const auto& v = q.vertices();
  const auto& d = tri.points;
  std::array<Line, 4> sides{
      desargues_axis(d, {v[1], v[2], v[3]}, v[0]),
      desargues_axis(d, {v[0], v[3], v[2]}, v[1]),
      desargues_axis(d, {v[3], v[0], v[1]}, v[2]),
      desargues_axis(d, {v[2], v[1], v[0]}, v[3]),
  };
  if (!general_position4(sides)) {
    throw detail::invariant("constructed sides of " + q.describe() + " are not a quadrilateral");
  }
  CompleteQuadrilateral out(std::move(sides));
  if (diagonal_lines(out) != tri.lines) {
    throw detail::invariant("constructed quadrilateral of " + q.describe() + " has a different diagonal triangle");
  }
  return out;
}

/// Exact dual of construct_quadrilateral, preserving index order.
inline CompleteQuadrangle construct_quadrangle(const CompleteQuadrilateral& s) {
  CompleteQuadrangle as_points = dualize(s);
  try {
    return dualize(construct_quadrilateral(as_points));
  } catch (const DiagonalsCollinearError& e) {
    throw DiagonalsConcurrentError("diagonal lines of " + s.describe() + " pass through " +
                                       dualize(e.line()).to_string() + " (characteristic-2 collapse)",
                                   dualize(e.line()));
  }
}

namespace detail {

inline void require_same_field(const CompleteQuadrangle& q, const CompleteQuadrilateral& s) {
  if (!(q.field() == s.field())) {
    throw Error(Errc::FieldMismatch, "quadrangle over " + to_string(q.field()) + ", quadrilateral over " +
                                         to_string(s.field()));
  }
}

}  // namespace detail

/// d1 = D2D3, d2 = D3D1, d3 = D1D2. The dual set D1 = d2.d3, ... is
/// evaluated too and must agree.
inline bool is_qq_configuration(const CompleteQuadrangle& q, const CompleteQuadrilateral& s) {
  detail::require_same_field(q, s);
  const auto points = diagonal_points(q);
  const auto lines = diagonal_lines(s);
  const bool sides_match = detail::triangle_sides(points) == lines;
  const bool vertices_match = detail::triangle_vertices(lines) == points;
  if (sides_match != vertices_match) {
    throw detail::invariant("relation sets disagree for " + q.describe() + " / " + s.describe());
  }
  return sides_match;
}

/// For {i,j,k} = {1,2,3}: pi.pj = P0Pk . DiDj and p0.pk = PiPj . DiDj.
inline bool mated_point_relations(const CompleteQuadrangle& q, const CompleteQuadrilateral& s) {
  detail::require_same_field(q, s);
  const auto d = diagonal_points(q);
  const auto& v = q.vertices();
  const auto& p = s.sides();
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t i = k % 3 + 1, j = (k + 1) % 3 + 1;
    const Line dij = join(d[i - 1], d[j - 1]);
    if (meet(p[i], p[j]) != meet(join(v[0], v[k]), dij)) return false;
    if (meet(p[0], p[k]) != meet(join(v[i], v[j]), dij)) return false;
  }
  return true;
}

/// For {i,j,k} = {1,2,3}: PiPj = (p0.pk)(di.dj) and P0Pk = (pi.pj)(di.dj).
inline bool mated_line_relations(const CompleteQuadrangle& q, const CompleteQuadrilateral& s) {
  detail::require_same_field(q, s);
  const auto d = diagonal_lines(s);
  const auto& v = q.vertices();
  const auto& p = s.sides();
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t i = k % 3 + 1, j = (k + 1) % 3 + 1;
    const Point dij = meet(d[i - 1], d[j - 1]);
    if (join(v[i], v[j]) != join(meet(p[0], p[k]), dij)) return false;
    if (join(v[0], v[k]) != join(meet(p[i], p[j]), dij)) return false;
  }
  return true;
}

inline bool is_mated(const CompleteQuadrangle& q, const CompleteQuadrilateral& s) {
  return mated_point_relations(q, s) && mated_line_relations(q, s);
}

/// `q` with its constructed quadrilateral and shared triangle.
inline QQPair companion_pair(const CompleteQuadrangle& q) {
  CompleteQuadrilateral s = construct_quadrilateral(q);
  DiagonalTriangle tri = diagonal_triangle(q);
  return QQPair{q, std::move(s), std::move(tri)};
}

}  // namespace qqplane
