#include "oracles.hpp"
#include "x3top/commpoly.hpp"
#include "x3top/ncalg.hpp"
#include "x3top/rational.hpp"
#include "x3top/series.hpp"
#include "x3top/verify.hpp"

#include <doctest.h>

#include <random>

using namespace x3top;

TEST_CASE("parse_rational accepts only exact literals") {
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  for (const char* bad : {"0.5", "1e3", " 1/2", "1/2 ", "1/0", "", "/2", "1/", "--1", "1/-2", "a"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(5, 2)) == 3);
}

TEST_CASE("series_from_product examples") {
  auto s = series_from_ranks({0, 3, 5, 5, 10, 24}, 5);
  CHECK(s.to_longs() == std::vector<long>{1, 3, 8, 21, 55, 144});
  CHECK(series_from_product({}, {}, 4).to_longs() == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(series_from_product({{1, 2}}, {}, 3).to_longs() == std::vector<long>{1, 2, 1, 0});
  CHECK_THROWS_AS(series_from_product({{2, 1}}, {}, 3), std::invalid_argument);
}

TEST_CASE("pbw_extract on the loop series") {
  auto h = loop_series_x2(6);
  CHECK(h.to_longs() == std::vector<long>{1, 3, 8, 21, 55, 144, 377});
  auto r = pbw_extract(h.truncated(5)).ranks;
  CHECK(r == std::vector<long>{0, 3, 5, 5, 10, 24});
  // independent logarithmic oracle, degree 6 and beyond
  CHECK(log_oracle_ranks(6)[6] == 55);
  CHECK(loop_ranks_x2(12) == log_oracle_ranks(12));
  auto sq = pbw_extract(series_from_product({{1, 2}}, {}, 6));
  CHECK(sq.ranks == std::vector<long>{0, 2, 0, 0, 0, 0, 0});
}

TEST_CASE("pbw_extract rejects inconsistent series") {
  PowerSeries half({Rational(1), Rational(1, 2), Rational(0)});
  CHECK_THROWS_AS(pbw_extract(half), PbwError);
  PowerSeries neg({Rational(1), Rational(-1), Rational(0)});
  CHECK_THROWS_AS(pbw_extract(neg), PbwError);
  auto rat = pbw_extract_rational(half);
  CHECK(rat[1] == Rational(1, 2));
}

TEST_CASE("property: ranks -> series -> ranks round trip") {
  std::mt19937 g(11);
  for (int it = 0; it < 50; ++it) {
    std::vector<long> r(9, 0);
    for (int n = 1; n <= 8; ++n) r[n] = std::uniform_int_distribution<long>(0, 6)(g);
    auto back = pbw_extract(series_from_ranks(r, 8)).ranks;
    CHECK(back == r);
  }
}

TEST_CASE("reciprocal and binomial factors") {
  PowerSeries a({Rational(1), Rational(-3), Rational(1), Rational(0), Rational(0)});
  auto inv = reciprocal(a);
  CHECK((a * inv) == PowerSeries::one(4));
  auto b = binomial_factor(1, 1, Rational(1, 2), 4);
  CHECK((b * b).truncated(4) == PowerSeries({Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)}));
  CHECK_THROWS(reciprocal(PowerSeries({Rational(0), Rational(1)})));
}

namespace {
Alphabet letters(int n, int deg = 1) {
  Alphabet a;
  for (int i = 0; i < n; ++i) a.push_back({"g" + std::to_string(i), deg});
  return a;
}
NcElement L(int i) { return NcElement::letter(i); }
}  // namespace

TEST_CASE("noncommutative quotient examples") {
  auto a1 = letters(1);
  CHECK(graded_dim_quotient_nc(a1, {L(0) * L(0)}, 4) == std::vector<long>{1, 1, 0, 0, 0});
  auto a2 = letters(2);
  CHECK(graded_dim_quotient_nc(a2, {}, 3) == std::vector<long>{1, 2, 4, 8});
  // odd generators, graded commutator = anticommutator: exterior algebra
  auto ext = graded_dim_quotient_nc(a2, {L(0) * L(0), L(1) * L(1), graded_bracket(a2, L(0), L(1))}, 4);
  CHECK(ext == std::vector<long>{1, 2, 1, 0, 0});
  // even generators commuting: polynomial ring
  auto e2 = letters(2, 2);
  auto poly = graded_dim_quotient_nc(e2, {graded_bracket(e2, L(0), L(1))}, 8);
  CHECK(poly == std::vector<long>{1, 0, 2, 0, 3, 0, 4, 0, 5});
}

TEST_CASE("property: quotient dims agree with the span{u r v} oracle") {
  std::mt19937 g(5);
  for (int it = 0; it < 12; ++it) {
    Alphabet a = letters(3);
    if (it % 3 == 0) a[2].degree = 2;
    std::vector<NcElement> rels;
    int nrel = std::uniform_int_distribution<int>(1, 3)(g);
    for (int k = 0; k < nrel; ++k) {
      NcElement r;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (a[i].degree + a[j].degree == 2) {
            long c = std::uniform_int_distribution<long>(-2, 2)(g);
            if (c) r += Rational(c) * (L(i) * L(j));
          }
      if (!r.is_zero()) rels.push_back(r);
    }
    CHECK(graded_dim_quotient_nc(a, rels, 4) == oracle::nc_quotient_dims(a, rels, 4));
  }
}

TEST_CASE("property: graded bracket is graded antisymmetric and satisfies Jacobi") {
  Alphabet a = {{"x", 1}, {"y", 1}, {"w", 2}};
  std::vector<NcElement> els = {L(0), L(1), L(2), L(0) * L(1) - L(1) * L(0)};
  auto sgn = [&](const NcElement& u, const NcElement& v) {
    return (u.homogeneous_degree(a) * v.homogeneous_degree(a)) % 2 ? Rational(1) : Rational(-1);
  };
  for (const auto& u : els)
    for (const auto& v : els) {
      CHECK(graded_bracket(a, u, v) == sgn(u, v) * graded_bracket(a, v, u));
      for (const auto& w : els) {
        int du = u.homogeneous_degree(a), dv = v.homogeneous_degree(a), dw = w.homogeneous_degree(a);
        auto s = [](int p) { return p % 2 ? Rational(-1) : Rational(1); };
        NcElement j = s(du * dw) * graded_bracket(a, u, graded_bracket(a, v, w)) +
                      s(dv * du) * graded_bracket(a, v, graded_bracket(a, w, u)) +
                      s(dw * dv) * graded_bracket(a, w, graded_bracket(a, u, v));
        CHECK(j.is_zero());
      }
    }
}

TEST_CASE("commutative quotients") {
  auto r5 = PolyRing::even({"X0", "Y0", "X1", "Y1", "Z"});
  auto m = [&](std::vector<int> e) { return CommPoly::monomial(e); };
  std::vector<Exponents> I = {{1, 0, 1, 0, 0}, {0, 1, 0, 1, 0}, {1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}};
  std::vector<CommPoly> gens;
  for (const auto& e : I) gens.push_back(m(e));
  auto dims = graded_dim_quotient_comm(r5, gens, 6);
  CHECK(dims == std::vector<long>{1, 0, 5, 0, 10, 0, 15});
  CHECK(dims == oracle::monomial_quotient_dims(r5, I, 6));
  auto r2 = PolyRing::even({"a", "b"});
  CHECK(graded_dim_quotient_comm(r2, {}, 6) == std::vector<long>{1, 0, 2, 0, 3, 0, 4});
  CHECK(graded_dim_quotient_comm(r2, {m({1, 0}), m({0, 1})}, 4) == std::vector<long>{1, 0, 0, 0, 0});
}

TEST_CASE("property: monomial ideals match standard monomial counts") {
  std::mt19937 g(3);
  auto ring = PolyRing::even({"a", "b", "c", "d"});
  for (int it = 0; it < 25; ++it) {
    std::vector<Exponents> mons;
    std::vector<CommPoly> gens;
    int k = std::uniform_int_distribution<int>(1, 4)(g);
    for (int i = 0; i < k; ++i) {
      Exponents e(4);
      for (auto& x : e) x = std::uniform_int_distribution<int>(0, 2)(g);
      if (e == Exponents(4, 0)) e[0] = 1;
      mons.push_back(e);
      gens.push_back(CommPoly::monomial(e));
    }
    CHECK(graded_dim_quotient_comm(ring, gens, 10) == oracle::monomial_quotient_dims(ring, mons, 10));
  }
}
