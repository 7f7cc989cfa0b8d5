#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"

using namespace qqplane;
using gen::canonical_quadrangle;
using gen::canonical_quadrilateral;

namespace {

template <class E = Error>
E expect_error(Errc code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << errc_name(code);
  } catch (const E& e) {
    EXPECT_EQ(e.code(), code) << e.what();
    return e;
  }
  throw std::logic_error("unreachable");
}

oracle::Vec to_vec(const HomTriple& t) {
  oracle::Vec v;
  for (int i = 0; i < 3; ++i) {
    v[i] = t.field().is_prime_field() ? oracle::Int(t[i].residue())
                                      : oracle::Int(boost::multiprecision::numerator(t[i].rational()));
  }
  return v;
}

bool on(const HomTriple& x, const HomTriple& l, std::int64_t p = 0) {
  const oracle::Int d = oracle::dot(to_vec(x), to_vec(l));
  return p == 0 ? d == 0 : oracle::mod(d, p) == 0;
}

const Field kQ = Field::rationals();
const Field kF2 = Field::prime(2);
const Field kF3 = Field::prime(3);
const Field kF5 = Field::prime(5);
const Field kF7 = Field::prime(7);

std::array<Point, 3> points3(const Field& f, std::array<std::array<long long, 3>, 3> xs) {
  return {make_point(f, xs[0]), make_point(f, xs[1]), make_point(f, xs[2])};
}
std::array<Line, 3> lines3(const Field& f, std::array<std::array<long long, 3>, 3> xs) {
  return {make_line(f, xs[0]), make_line(f, xs[1]), make_line(f, xs[2])};
}

}  // namespace

TEST(DiagonalPoints, CanonicalOverQ) {
  const auto q = canonical_quadrangle(kQ);
  const auto d = diagonal_points(q);
  EXPECT_EQ(d, points3(kQ, {{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}}));
  // Incidence of each D with its two defining sides, via integer cross products.
  const auto& v = q.vertices();
  const auto side = [&](int a, int b) { return oracle::cross(to_vec(v[a]), to_vec(v[b])); };
  EXPECT_EQ(oracle::dot(to_vec(d[0]), side(0, 1)), 0);
  EXPECT_EQ(oracle::dot(to_vec(d[0]), side(2, 3)), 0);
  EXPECT_EQ(oracle::dot(to_vec(d[1]), side(0, 2)), 0);
  EXPECT_EQ(oracle::dot(to_vec(d[1]), side(3, 1)), 0);
  EXPECT_EQ(oracle::dot(to_vec(d[2]), side(0, 3)), 0);
  EXPECT_EQ(oracle::dot(to_vec(d[2]), side(1, 2)), 0);
}

TEST(DiagonalPoints, CanonicalOverGF2AreCollinear) {
  const auto d = diagonal_points(canonical_quadrangle(kF2));
  EXPECT_EQ(d, points3(kF2, {{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}}));
  EXPECT_EQ(oracle::mod(oracle::det(to_vec(d[0]), to_vec(d[1]), to_vec(d[2])), 2), 0);
  for (const auto& x : d) EXPECT_TRUE(incident(x, make_line(kF2, {1, 1, 1})));
}

TEST(DiagonalPoints, EquivariantUnderCollineations) {
  gen::Source src(17);
  for (const Field& f : {kQ, kF5, kF7}) {
    for (int i = 0; i < 50; ++i) {
      const Collineation t = src.collineation(f);
      const auto q = canonical_quadrangle(f);
      EXPECT_EQ(diagonal_points(apply_collineation(t, q)), apply_collineation(t, diagonal_points(q)));
    }
  }
}

TEST(DiagonalLines, CanonicalQuadrilateral) {
  const auto s = canonical_quadrilateral(kQ);
  const auto d = diagonal_lines(s);
  EXPECT_EQ(d, lines3(kQ, {{{1, 1, -1}, {1, -1, 1}, {1, -1, -1}}}));
  // d1 passes through p0.p1 = (1,1,2) and p2.p3 = (1,-1,0).
  EXPECT_TRUE(on(make_point(kQ, {1, 1, 2}), d[0]));
  EXPECT_TRUE(on(make_point(kQ, {1, -1, 0}), d[0]));
  // They are the sides D2D3, D3D1, D1D2 of the canonical diagonal triangle.
  EXPECT_EQ(d, diagonal_triangle(canonical_quadrangle(kQ)).lines);
}

TEST(DiagonalLines, DualOfQuadrangleGivesDualDiagonalPoints) {
  gen::Source src(5);
  for (const Field& f : {kQ, kF2, kF3, kF7}) {
    for (int i = 0; i < 50; ++i) {
      const auto q = src.quadrangle(f);
      EXPECT_EQ(diagonal_lines(dualize(q)), dualize(diagonal_points(q)));
    }
  }
}

TEST(DiagonalLines, InvalidQuadrilateralRejected) {
  expect_error(Errc::InvalidQuadrilateral, [] {
    CompleteQuadrilateral({make_line(kQ, {1, 0, 0}), make_line(kQ, {0, 1, 0}), make_line(kQ, {1, 1, 0}),
                           make_line(kQ, {0, 0, 1})});
  });
  expect_error(Errc::InvalidQuadrangle, [] {
    CompleteQuadrangle({make_point(kQ, {1, 0, 0}), make_point(kQ, {0, 1, 0}), make_point(kQ, {0, 0, 1}),
                        make_point(kQ, {1, 1, 0})});
  });
}

TEST(DiagonalTriangle, Examples) {
  const DiagonalTriangle tri = diagonal_triangle(canonical_quadrangle(kQ));
  EXPECT_EQ(tri.points, points3(kQ, {{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}}));
  EXPECT_EQ(tri.lines, lines3(kQ, {{{1, 1, -1}, {1, -1, 1}, {1, -1, -1}}}));

  const auto e = expect_error<DiagonalsCollinearError>(Errc::DiagonalsCollinear,
                                                       [] { diagonal_triangle(canonical_quadrangle(kF2)); });
  EXPECT_EQ(e.line(), make_line(kF2, {1, 1, 1}));

  // det = -2 = 1 mod 3
  const DiagonalTriangle tri3 = diagonal_triangle(canonical_quadrangle(kF3));
  EXPECT_EQ(oracle::mod(oracle::det(to_vec(tri3.points[0]), to_vec(tri3.points[1]), to_vec(tri3.points[2])), 3), 1);
}

TEST(DesarguesAxis, CanonicalP0) {
  const auto q = canonical_quadrangle(kQ);
  const auto d = diagonal_points(q);
  const Line axis = desargues_axis(d, {q[1], q[2], q[3]}, q[0]);
  EXPECT_EQ(axis, make_line(kQ, {3, -1, -1}));
  const oracle::Vec m0{1, 1, 2}, m1{1, 2, 1}, m2{0, -1, 1};
  EXPECT_EQ(oracle::det(m0, m1, m2), 0);
  for (const auto& m : {m0, m1, m2}) EXPECT_EQ(oracle::dot(m, to_vec(axis)), 0);
}

TEST(DesarguesAxis, DegenerateInputs) {
  const auto tri = points3(kQ, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  const Point centre = make_point(kQ, {1, 1, 1});
  // A triangle against its scalar-matrix image, itself.
  expect_error(Errc::CorrespondingSidesEqual, [&] { desargues_axis(tri, tri, centre); });
  expect_error(Errc::NotPerspectiveFromPoint,
               [&] { desargues_axis(tri, points3(kQ, {{{1, 2, 3}, {0, 1, 5}, {2, 0, 1}}}), centre); });
  expect_error(Errc::DegenerateTriangle,
               [&] { desargues_axis(points3(kQ, {{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}), tri, centre); });
}

TEST(DesarguesAxis, RandomPerspectivePairsOverGF7) {
  gen::Source src(71);
  int made = 0;
  while (made < 300) {
    const Point centre = src.point(kF7);
    std::array<Point, 3> first{src.point(kF7), src.point(kF7), src.point(kF7)};
    if (first[0] == centre || first[1] == centre || first[2] == centre) continue;
    if (collinear(first[0], first[1], first[2])) continue;
    // Project each vertex along its ray from the centre.
    std::array<std::optional<Point>, 3> second;
    for (int i = 0; i < 3; ++i) {
      const Scalar a = src.scalar(kF7), b = src.nonzero_scalar(kF7);
      RawTriple raw;
      for (int k = 0; k < 3; ++k) raw[k] = a * centre[k] + b * first[i][k];
      if (raw[0].is_zero() && raw[1].is_zero() && raw[2].is_zero()) break;
      second[i] = normalize(raw, Role::Point);
    }
    if (!second[0] || !second[1] || !second[2]) continue;
    const std::array<Point, 3> t2{*second[0], *second[1], *second[2]};
    if (collinear(t2[0], t2[1], t2[2])) continue;
    const auto s1 = std::array<Line, 3>{join(first[1], first[2]), join(first[2], first[0]), join(first[0], first[1])};
    const auto s2 = std::array<Line, 3>{join(t2[1], t2[2]), join(t2[2], t2[0]), join(t2[0], t2[1])};
    if (s1[0] == s2[0] || s1[1] == s2[1] || s1[2] == s2[2]) continue;
    ++made;
    const Line axis = desargues_axis(first, t2, centre);
    for (int i = 0; i < 3; ++i) {
      const oracle::Vec m = oracle::cross(to_vec(s1[i]), to_vec(s2[i]));
      EXPECT_EQ(oracle::mod(oracle::dot(m, to_vec(axis)), 7), 0);
    }
  }
}

TEST(ConstructQuadrilateral, CanonicalOverQ) {
  const auto q = canonical_quadrangle(kQ);
  const auto s = construct_quadrilateral(q);
  EXPECT_EQ(s, canonical_quadrilateral(kQ));

  // Every displayed membership, from integer arithmetic only.
  const auto& P = q.vertices();
  const auto D = diagonal_points(q);
  const auto line = [](const HomTriple& a, const HomTriple& b) { return oracle::cross(to_vec(a), to_vec(b)); };
  const auto point_on = [&](const Line& l, int di, int dj, int pa, int pb) {
    const oracle::Vec x = oracle::cross(line(D[di], D[dj]), line(P[pa], P[pb]));
    return oracle::dot(x, to_vec(l)) == 0;
  };
  // p0 contains D2D3.P2P3, D3D1.P3P1, D1D2.P1P2, and so on for p1..p3.
  const std::array<std::array<int, 6>, 4> listed{{{2, 3, 3, 1, 1, 2}, {3, 2, 2, 0, 0, 3}, {0, 1, 1, 3, 3, 0},
                                                   {1, 0, 0, 2, 2, 1}}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_TRUE(point_on(s[i], 1, 2, listed[i][0], listed[i][1])) << i;
    EXPECT_TRUE(point_on(s[i], 2, 0, listed[i][2], listed[i][3])) << i;
    EXPECT_TRUE(point_on(s[i], 0, 1, listed[i][4], listed[i][5])) << i;
  }
}

TEST(ConstructQuadrilateral, CanonicalOverGF3) {
  const auto s = construct_quadrilateral(canonical_quadrangle(kF3));
  EXPECT_EQ(s.sides(), (std::array<Line, 4>{make_line(kF3, {0, 1, 1}), make_line(kF3, {1, 0, 1}),
                                            make_line(kF3, {1, 1, 0}), make_line(kF3, {1, 1, 1})}));
  // Reduction mod 3 commutes with the construction.
  EXPECT_EQ(s.sides(), (std::array<Line, 4>{make_line(kF3, {3, -1, -1}), make_line(kF3, {1, -3, 1}),
                                            make_line(kF3, {1, 1, -3}), make_line(kF3, {1, 1, 1})}));
}

TEST(ConstructQuadrilateral, FanoFails) {
  const auto e = expect_error<DiagonalsCollinearError>(Errc::DiagonalsCollinear,
                                                       [] { construct_quadrilateral(canonical_quadrangle(kF2)); });
  EXPECT_EQ(e.line(), make_line(kF2, {1, 1, 1}));
}

TEST(ConstructQuadrangle, Examples) {
  EXPECT_EQ(construct_quadrangle(canonical_quadrilateral(kQ)), canonical_quadrangle(kQ));
  const CompleteQuadrilateral axes({make_line(kQ, {1, 0, 0}), make_line(kQ, {0, 1, 0}), make_line(kQ, {0, 0, 1}),
                                    make_line(kQ, {1, 1, 1})});
  EXPECT_EQ(construct_quadrangle(axes).vertices(),
            (std::array<Point, 4>{make_point(kQ, {3, -1, -1}), make_point(kQ, {1, -3, 1}), make_point(kQ, {1, 1, -3}),
                                  make_point(kQ, {1, 1, 1})}));
}

TEST(ConstructQuadrangle, FanoFails) {
  // The canonical quadrilateral collapses to a single line mod 2, so the dual
  // Fano failure is shown on the coordinate quadrilateral instead.
  expect_error(Errc::InvalidQuadrilateral, [] { canonical_quadrilateral(kF2); });
  const CompleteQuadrilateral axes({make_line(kF2, {1, 0, 0}), make_line(kF2, {0, 1, 0}), make_line(kF2, {0, 0, 1}),
                                    make_line(kF2, {1, 1, 1})});
  const auto e =
      expect_error<DiagonalsConcurrentError>(Errc::DiagonalsConcurrent, [&] { construct_quadrangle(axes); });
  EXPECT_EQ(e.point(), make_point(kF2, {1, 1, 1}));
}

TEST(IsQQConfiguration, Examples) {
  const auto q = canonical_quadrangle(kQ);
  EXPECT_TRUE(is_qq_configuration(q, construct_quadrilateral(q)));
  const CompleteQuadrilateral axes({make_line(kQ, {1, 0, 0}), make_line(kQ, {0, 1, 0}), make_line(kQ, {0, 0, 1}),
                                    make_line(kQ, {1, 1, 1})});
  EXPECT_FALSE(is_qq_configuration(q, axes));
  const CompleteQuadrilateral tweaked({make_line(kQ, {3, -1, -1}), make_line(kQ, {1, -3, 1}),
                                       make_line(kQ, {1, 1, -3}), make_line(kQ, {1, 1, 2})});
  EXPECT_FALSE(is_qq_configuration(q, tweaked));
  EXPECT_FALSE(is_mated(q, tweaked));
  expect_error(Errc::FieldMismatch, [&] { is_qq_configuration(q, canonical_quadrilateral(kF5)); });
}

TEST(IsMated, Examples) {
  const auto q = canonical_quadrangle(kQ);
  const auto s = construct_quadrilateral(q);
  EXPECT_TRUE(is_mated(q, s));
  // p1.p2 = P0P3 . D1D2 = (2,1,1)
  const auto d = diagonal_points(q);
  EXPECT_EQ(meet(s[1], s[2]), make_point(kQ, {2, 1, 1}));
  EXPECT_EQ(meet(join(q[0], q[3]), join(d[0], d[1])), make_point(kQ, {2, 1, 1}));

  gen::Source src(7);
  const auto q7 = canonical_quadrangle(kF7);
  const auto companion = construct_quadrilateral(q7);
  for (int i = 0; i < 50; ++i) {
    const auto other = src.quadrilateral(kF7);
    if (other == companion) continue;
    EXPECT_FALSE(is_mated(q7, other));
  }
}

TEST(IsMated, AgreesWithConfigurationOnRandomPairsOverGF5) {
  gen::Source src(55);
  for (int i = 0; i < 100; ++i) {
    const auto q = src.quadrangle(kF5);
    const auto s = src.quadrilateral(kF5);
    EXPECT_EQ(is_mated(q, s), is_qq_configuration(q, s));
  }
}

// Sharing a labeled diagonal triangle does not pin down the quadrilateral:
// the configuration relations accept every quadrilateral with diagonal lines
// D2D3, D3D1, D1D2, whereas the mated relations fix all six vertices of the
// quadrilateral. Exhaustively over PG(2,5), the ordered quadrangles with the
// canonical diagonal triangle are those with vertices (+-a,+-b,c) in the
// triangle's own frame: (p-1)^2 = 16 of them.
TEST(IsMated, StrictlyStrongerThanSharedTriangle) {
  const auto q = canonical_quadrangle(kF5);
  const auto target = diagonal_points(q);
  const auto cat = enumerate_plane(5);

  std::vector<CompleteQuadrangle> same_triangle;
  for (const auto& unordered : enumerate_quadrangles(cat)) {
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      const CompleteQuadrangle r({unordered[perm[0]], unordered[perm[1]], unordered[perm[2]], unordered[perm[3]]});
      if (diagonal_points(r) == target) same_triangle.push_back(r);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  ASSERT_EQ(same_triangle.size(), 16u);

  int mated = 0;
  for (const auto& r : same_triangle) {
    const auto s = construct_quadrilateral(r);
    EXPECT_TRUE(is_qq_configuration(q, s));
    mated += is_mated(q, s) ? 1 : 0;
    EXPECT_EQ(is_mated(q, s), r == q);
    EXPECT_EQ(mated_point_relations(q, s), mated_line_relations(q, s));
  }
  EXPECT_EQ(mated, 1);
}

class HarmonicityProperties : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(HarmonicityProperties, ConstructionSoundnessAndInverse) {
  const Field f(GetParam());
  gen::Source src(500 + GetParam().p);
  for (int i = 0; i < 150; ++i) {
    const auto q = src.quadrangle(f);
    const auto d = diagonal_points(q);
    ASSERT_FALSE(d[0] == d[1] || d[1] == d[2] || d[0] == d[2]);
    const auto s = construct_quadrilateral(q);
    ASSERT_TRUE(general_position4(s.sides()));
    ASSERT_EQ(diagonal_lines(s), (std::array<Line, 3>{join(d[1], d[2]), join(d[2], d[0]), join(d[0], d[1])}));
    ASSERT_TRUE(is_qq_configuration(q, s));
    ASSERT_TRUE(is_mated(q, s));
    ASSERT_EQ(construct_quadrangle(s), q);
    ASSERT_EQ(construct_quadrangle(s), dualize(construct_quadrilateral(dualize(s))));

    const auto other = src.quadrilateral(f);
    ASSERT_EQ(construct_quadrilateral(construct_quadrangle(other)), other);
    ASSERT_EQ(mated_point_relations(q, other), mated_line_relations(q, other));
    if (is_mated(q, other)) {
      ASSERT_TRUE(is_qq_configuration(q, other));
    }
    if (is_qq_configuration(q, other)) {
      const auto dd = diagonal_lines(other);
      ASSERT_FALSE(collinear(d[0], d[1], d[2]));
      ASSERT_FALSE(concurrent(dd[0], dd[1], dd[2]));
    }
  }
}

TEST_P(HarmonicityProperties, CollineationEquivariance) {
  const Field f(GetParam());
  gen::Source src(600 + GetParam().p);
  for (int i = 0; i < 60; ++i) {
    const Collineation t = src.collineation(f);
    const auto q = src.quadrangle(f);
    const auto s = construct_quadrilateral(q);
    const auto tq = apply_collineation(t, q);
    ASSERT_EQ(construct_quadrilateral(tq), apply_collineation(t, s));
    ASSERT_EQ(diagonal_triangle(tq).lines, apply_collineation(t, diagonal_triangle(q).lines));
    const auto other = src.quadrilateral(f);
    ASSERT_EQ(is_qq_configuration(q, other), is_qq_configuration(tq, apply_collineation(t, other)));
    ASSERT_EQ(is_mated(q, other), is_mated(tq, apply_collineation(t, other)));
  }
}

TEST_P(HarmonicityProperties, RelabelingPermutesDiagonalPoints) {
  const Field f(GetParam());
  gen::Source src(700 + GetParam().p);
  for (int i = 0; i < 30; ++i) {
    const auto q = src.quadrangle(f);
    auto sorted = [](std::array<Point, 3> d) {
      std::sort(d.begin(), d.end(), [](const Point& a, const Point& b) { return a.to_string() < b.to_string(); });
      return d;
    };
    const auto base = sorted(diagonal_points(q));
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      const CompleteQuadrangle r({q[perm[0]], q[perm[1]], q[perm[2]], q[perm[3]]});
      ASSERT_EQ(sorted(diagonal_points(r)), base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, HarmonicityProperties,
                         ::testing::Values(FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5),
                                           FieldSpec::prime(7), FieldSpec::prime(11)),
                         [](const auto& info) {
                           return info.param.is_prime_field() ? "GF" + std::to_string(info.param.p)
                                                              : std::string("Q");
                         });

TEST(Characteristic2, EveryQuadrangleCollapses) {
  gen::Source src(2);
  for (int i = 0; i < 50; ++i) {
    const auto q = src.quadrangle(kF2);
    expect_error(Errc::DiagonalsCollinear, [&] { construct_quadrilateral(q); });
    expect_error(Errc::DiagonalsConcurrent, [&] { construct_quadrangle(dualize(q)); });
  }
}
