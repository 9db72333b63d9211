#include "x3top/toric.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace x3top;

namespace {
Shape S(Rational mu, Rational c1, Rational c2) { return Shape::make(mu, c1, c2); }
Vec2 P(Rational x, Rational y) { return Vec2(x, y); }
std::vector<std::pair<Rational, Rational>> vset(const LatticePolygon& p) {
  std::vector<std::pair<Rational, Rational>> v;
  for (const auto& w : p.vertices()) v.emplace_back(w(0), w(1));
  std::sort(v.begin(), v.end());
  return v;
}
LatticePolygon hull(std::vector<Vec2> v) { return LatticePolygon(std::move(v)); }
GeneratorExpr G(std::array<long, 6> c) {
  GeneratorExpr e;
  e.c = c;
  return e;
}
const Shape kMu1 = S(1, Rational(3, 10), Rational(1, 5));
}  // namespace

TEST_CASE("Hirzebruch polygons") {
  CHECK(vset(hirzebruch_polygon(0, kMu1)) == vset(hull({P(0, 0), P(1, 0), P(1, 1), P(0, 1)})));
  Shape s = S(Rational(5, 2), Rational(3, 10), Rational(1, 5));
  CHECK(vset(hirzebruch_polygon(2, s)) ==
        vset(hull({P(0, 0), P(1, 0), P(1, Rational(7, 2)), P(0, Rational(3, 2))})));
  CHECK(vset(hirzebruch_polygon(1, s)) ==
        vset(hull({P(0, 0), P(1, 0), P(1, Rational(7, 2)), P(0, Rational(5, 2))})));
  CHECK_THROWS_AS(hirzebruch_polygon(6, s), GeometryError);
}

TEST_CASE("corner chops") {
  Shape s = S(Rational(5, 2), Rational(3, 10), Rational(1, 5));
  auto sq = hirzebruch_polygon(0, kMu1);
  CHECK_THROWS_AS(corner_chop(sq, 0, 0), GeometryError);
  CHECK_THROWS_AS(corner_chop(sq, 0, 1), GeometryError);
  auto c = corner_chop(sq, 0, Rational(3, 10));
  CHECK(c.size() == 5);
  CHECK(c.is_delzant());
  // odd pentagon: Delta(2k-1) with mu - c1, chopped by 1 - c1
  Rational m = s.mu() - s.c1();
  long k = 1;
  auto odd = tilde_polygon(1, s);
  CHECK(vset(odd) == vset(hull({P(1, m + k), P(0, m - k + 1), P(0, 1 - s.c1()), P(1 - s.c1(), 0), P(1, 0)})));
}

TEST_CASE("GL(2,Z) images") {
  auto sq = hirzebruch_polygon(0, kMu1);
  CHECK(gl2z_equivalent(apply_gl2z(sq, c_matrix(0)), sq));
  CHECK(vset(apply_gl2z(sq, Mat2i::Identity())) == vset(sq));
  Shape s = S(Rational(5, 2), Rational(3, 10), Rational(1, 5));
  auto sheared = apply_gl2z(hirzebruch_polygon(2, s), c_matrix(2));
  CHECK(sheared.is_delzant());
  Mat2i bad;
  bad << 2, 0, 0, 1;
  CHECK_THROWS_AS(apply_gl2z(sq, bad), GeometryError);
}

TEST_CASE("T_i(0) hexagons are pairwise inequivalent for mu > 1") {
  Shape s = S(Rational(3, 2), Rational(3, 10), Rational(1, 5));
  for (int i = 1; i <= 5; ++i) {
    auto p = t_polygon(i, 0, s);
    CHECK(p.size() == 6);
    CHECK(p.is_delzant());
    for (int j = i + 1; j <= 5; ++j) CHECK(!gl2z_equivalent(p, t_polygon(j, 0, s)));
  }
  // at mu = 1 the swap B <-> F identifies T_2 with T_5 and T_3 with T_4
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      bool swapped = (i == 2 && j == 5) || (i == 3 && j == 4);
      CHECK(gl2z_equivalent(t_polygon(i, 0, kMu1), t_polygon(j, 0, kMu1)) == swapped);
    }
  // n = 2 needs l >= 1
  CHECK_THROWS_AS(t_polygon(1, 2, kMu1), GeometryError);
}

TEST_CASE("property: Delzant and edge lengths = boundary class areas") {
  std::mt19937_64 g(8);
  std::uniform_int_distribution<long> u(1, 119);
  int n = 0;
  for (int it = 0; n < 60; ++it) {
    Rational c1(u(g), 120), c2(u(g), 120), lam(u(g), 120);
    if (!(c2 < c1) || !(c1 + c2 < 1)) continue;
    Shape s = S(3 + lam, c1, c2);
    ++n;
    for (long k = 0; k <= 5; ++k)
      for (int i = 1; i <= 5; ++i) {
        LatticePolygon p;
        try {
          p = t_polygon(i, k, s);
        } catch (const GeometryError&) {
          continue;
        }
        CHECK(p.is_delzant());
        auto len = p.edge_lengths();
        std::vector<Rational> areas;
        for (const auto& h : boundary_cycle(i, k)) areas.push_back(area(s, h));
        std::sort(len.begin(), len.end());
        std::sort(areas.begin(), areas.end());
        CHECK(len == areas);
      }
  }
}

TEST_CASE("Karshon graphs") {
  auto sq = hirzebruch_polygon(0, kMu1);
  auto g = karshon_graph(sq, CircleWeight(0, 1));
  REQUIRE(g.fat.size() == 2);
  CHECK(g.isolated.empty());
  CHECK(g.fat[0].value == 0);
  CHECK(g.fat[1].value == 1);
  CHECK(g.fat[0].area == 1);
  CHECK(g.fat[1].area == 1);
  auto pent = tilde_polygon(0, kMu1);
  auto k = karshon_graph(pent, CircleWeight(1, 0));
  REQUIRE(k.fat.size() == 2);
  CHECK(k.fat[0].value == 0);
  CHECK(k.fat[0].area == Rational(7, 10));
  CHECK(k.fat[1].value == 1);
  CHECK(k.fat[1].area == 1);
  REQUIRE(k.isolated.size() == 1);
  CHECK(k.isolated[0].value == Rational(3, 10));
  CHECK_THROWS(CircleWeight(2, 0));
}

TEST_CASE("property: reversing the circle negates the graph") {
  Shape s = S(Rational(37, 10), Rational(2, 5), Rational(1, 5));
  for (int i = 1; i <= 5; ++i)
    for (long n = 0; n <= 4; ++n)
      for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {2, -1}, {1, 3}}) {
        auto p = t_polygon(i, n, s);
        auto g = karshon_graph(p, CircleWeight(a, b)), h = karshon_graph(p, CircleWeight(-a, -b));
        CHECK(g.negate() == h);
      }
}

TEST_CASE("identification table entries") {
  // order x0, y0, x1, y1, z, t
  CHECK(ident_lookup(1, 2, 'y') == G({1, -1, 0, 0, 0, 1}));
  CHECK(ident_lookup(4, 5, 'y') == G({2, 0, 0, 0, 1, 0}));
  CHECK(ident_lookup(2, 0, 'a') == G({0, 0, -2, 1, 0, 2}));
  CHECK_THROWS(realize(G({0, 0, 0, 0, 0, 1})));
}

TEST_CASE("property: realize inverts circle_expr on the n = 0 tori") {
  for (int i = 1; i <= 5; ++i)
    for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {-1, 3}}) {
      Circle c = Circle::torus(i, 0, a, b);
      CHECK(circle_expr(realize(circle_expr(c))) == circle_expr(c));
    }
}

TEST_CASE("circle relations hold at sampled shapes") {
  for (const auto& s : {S(Rational(37, 10), Rational(2, 5), Rational(1, 5)),
                        S(Rational(33, 10), Rational(1, 5), Rational(1, 10)),
                        S(Rational(13, 4), Rational(2, 5), Rational(1, 3)),
                        S(Rational(27, 10), Rational(1, 2), Rational(1, 4))}) {
    int ok = 0;
    for (const auto& r : circle_relations(3)) {
      CHECK(circle_expr(r.lhs) == circle_expr(r.rhs));
      auto c = verify_relation(r.lhs, r.rhs, s);
      if (!c.admissible) continue;
      INFO(r.name << " at " << s.to_string() << ": " << c.detail);
      CHECK(c.ok);
      ok += c.ok;
    }
    CHECK(ok > 20);
  }
}

TEST_CASE("a wrong identification is caught") {
  Shape s = S(Rational(37, 10), Rational(2, 5), Rational(1, 5));
  auto r = verify_relation(Circle::torus(4, 1, 1, 0), Circle::torus(1, 0, 1, 0), s);
  CHECK(!r.ok);
}
