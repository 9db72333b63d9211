#include "x3top/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace x3top {

std::string HClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](long c, const char* sym) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    long a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << sym;
    first = false;
  };
  term(p, "B");
  term(q, "F");
  term(-r1, "E1");
  term(-r2, "E2");
  return first ? "0" : os.str();
}

long intersect(const HClass& a, const HClass& b) { return a.p * b.q + a.q * b.p - a.r1 * b.r1 - a.r2 * b.r2; }

long chern(const HClass& a) { return 2 * (a.p + a.q) - a.r1 - a.r2; }

Rational adjunction_genus(const HClass& a) { return 1 + Rational(intersect(a, a) - chern(a), 2); }

Rational k_index(const HClass& a) { return Rational(intersect(a, a) + chern(a), 2); }

HClass d_class(long i) {
  long r = ((i % 4) + 4) % 4;
  switch (r) {
    case 1: return {1, (i - 1) / 4, 0, 0};
    case 0: return {1, i / 4, 0, 1};
    case 3: return {1, (i + 1) / 4, 1, 0};
    default: return {1, (i + 2) / 4, 1, 1};
  }
}

const char* to_string(LambdaRange r) {
  switch (r) {
    case LambdaRange::A: return "a";
    case LambdaRange::B: return "b";
    case LambdaRange::C: return "c";
    default: return "d";
  }
}

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::Generic: return "generic";
    case Boundary::R1: return "R1";
    case Boundary::R2: return "R2";
    default: return "R3";
  }
}

Shape Shape::make(const Rational& mu, const Rational& c1, const Rational& c2) {
  if (mu < 1) throw std::invalid_argument("inadmissible shape: mu >= 1 violated (mu=" + x3top::to_string(mu) + ")");
  if (c2 <= 0) throw std::invalid_argument("inadmissible shape: 0 < c2 violated");
  if (c2 > c1) throw std::invalid_argument("inadmissible shape: c2 <= c1 violated");
  if (c1 + c2 > 1) throw std::invalid_argument("inadmissible shape: c1 + c2 <= 1 violated");
  Shape s;
  s.mu_ = mu;
  s.c1_ = c1;
  s.c2_ = c2;
  s.ell_ = to_long(x3top::ceil(mu)) - 1;
  s.lambda_ = mu - s.ell_;
  return s;
}

Boundary Shape::boundary() const {
  bool eq = c1_ == c2_, full = c1_ + c2_ == 1;
  if (eq && full) return Boundary::R3;
  if (eq) return Boundary::R1;
  if (full) return Boundary::R2;
  return Boundary::Generic;
}

LambdaRange Shape::range() const {
  if (lambda_ <= c2_) return LambdaRange::A;
  if (lambda_ <= c1_) return LambdaRange::B;
  if (lambda_ <= c1_ + c2_) return LambdaRange::C;
  return LambdaRange::D;
}

std::string Shape::to_string() const {
  return "(" + x3top::to_string(mu_) + "," + x3top::to_string(c1_) + "," + x3top::to_string(c2_) + ")";
}

Rational area(const Shape& s, const HClass& a) { return s.mu() * a.p + a.q - s.c1() * a.r1 - s.c2() * a.r2; }

bool is_reduced(const CP2Class& c) {
  return c.a1 >= c.a2 && c.a2 >= c.a3 && c.a3 >= 0 && c.a0 >= c.a1 + c.a2 + c.a3;
}

Shape cp2_to_shape(const Rational& nu, const Rational& d1, const Rational& d2, const Rational& d3) {
  if (nu <= d1) throw std::invalid_argument("conversion needs nu > delta1");
  Rational base = nu - d1;
  return Shape::make((nu - d2) / base, (nu - d1 - d2) / base, d3 / base);
}

std::array<Rational, 4> cp2_to_basis(const CP2Class& c) {
  // a0(B+F-E1) - a1(B-E1) - a2(F-E1) - a3 E2
  return {c.a0 - c.a1, c.a0 - c.a2, c.a0 - c.a1 - c.a2, c.a3};
}

HClass cp2_to_hclass(const CP2Class& c) {
  auto v = cp2_to_basis(c);
  for (const auto& x : v)
    if (!is_integer(x)) throw std::invalid_argument("class is not integral");
  return {to_long(num(v[0])), to_long(num(v[1])), to_long(num(v[2])), to_long(num(v[3]))};
}

namespace {

constexpr long kBox = 4;

// Area positive on the open region mu >= 1 > c1+c2, c1 > c2 > 0: check the
// closure vertices (c1,c2) in {(0,0),(1,0),(1/2,1/2)} at mu=1 and the centroid.
bool positive_on_shapes(const HClass& a) {
  if (a.p < 0) return false;
  auto val = [&](const Rational& c1, const Rational& c2) {
    return Rational(a.p) + a.q - c1 * a.r1 - c2 * a.r2;
  };
  Rational h(1, 2);
  if (val(0, 0) < 0 || val(1, 0) < 0 || val(h, h) < 0) return false;
  return val(h, Rational(1, 6)) > 0;
}

}  // namespace

std::vector<HClass> p0_classes() {
  std::vector<HClass> out;
  for (long q = -kBox; q <= kBox; ++q)
    for (long r1 = -kBox; r1 <= kBox; ++r1)
      for (long r2 = -kBox; r2 <= kBox; ++r2) {
        if (2 * (q - 1) + r1 * (r1 - 1) + r2 * (r2 - 1) > 0) continue;
        HClass a{0, q, r1, r2};
        if (!positive_on_shapes(a)) continue;
        if (std::max({std::labs(q), std::labs(r1), std::labs(r2)}) == kBox)
          throw std::logic_error("p0 search hit the box boundary");
        out.push_back(a);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HClass> exceptional_classes() {
  std::vector<HClass> out;
  for (long p = 0; p <= 1; ++p)
    for (long q = -kBox; q <= kBox; ++q)
      for (long r1 = -kBox; r1 <= kBox; ++r1)
        for (long r2 = -kBox; r2 <= kBox; ++r2) {
          HClass a{p, q, r1, r2};
          if (intersect(a, a) != -1 || chern(a) != 1 || !positive_on_shapes(a)) continue;
          if (std::max({std::labs(q), std::labs(r1), std::labs(r2)}) == kBox)
            throw std::logic_error("exceptional search hit the box boundary");
          out.push_back(a);
        }
  std::sort(out.begin(), out.end());
  return out;
}

long strata_count(const Shape& s) {
  if (!s.generic()) throw std::invalid_argument("strata_count needs a generic shape (c2<c1, c1+c2<1)");
  long l = s.ell();
  switch (s.range()) {
    case LambdaRange::A: return 4 * l - 1;
    case LambdaRange::B: return 4 * l;
    case LambdaRange::C: return 4 * l + 1;
    default: return 4 * l + 2;
  }
}

std::vector<DStratum> enumerate_d_strata(const Shape& s) {
  std::vector<DStratum> out;
  for (long m = 1;; ++m) {
    HClass d = d_class(-m);
    if (area(s, d) <= 0) break;
    out.push_back({m, d});
  }
  return out;
}

ConfigType config_type(int t, long m) {
  const HClass B = HClass::B(), F = HClass::F(), E1 = HClass::E1(), E2 = HClass::E2();
  if (t < 1 || t > 18) throw std::invalid_argument("configuration type must be 1..18");
  if (t <= 6 && m != 0) throw std::invalid_argument("types 1..6 have m = 0");
  if (t >= 7 && m < 1) throw std::invalid_argument("types 7..18 need m >= 1");
  const HClass Bm = B - m * F;
  std::vector<HClass> c;
  switch (t) {
    case 1: c = {B - E2, E2, F - E2, B - E1, E1, F - E1}; break;
    case 2: c = {B - E2, E2, F - E1 - E2, E1, B - E1}; break;
    case 3: c = {F - E1, E1, B - E1 - E2, E2, F - E2}; break;
    case 4: c = {B - E1, F - E1 - E2, E2, E1 - E2}; break;
    case 5: c = {B - E1 - E2, E2, E1 - E2, F - E1}; break;
    case 6: c = {F - E1, E2, E1 - E2, B - E1}; break;
    case 7: c = {Bm, F - E1, E1 - E2, E2}; break;
    case 8: c = {Bm, F - E1 - E2, E1, E2}; break;
    case 9: c = {Bm, F - E1 - E2, E2, E1 - E2}; break;
    case 10: c = {Bm, F - E1, E1, F - E2, E2}; break;
    case 11: c = {E1, Bm - E2, E2, F - E1 - E2}; break;
    case 12: c = {E1, F - E1, Bm - E2, E2, F - E2}; break;
    case 13: c = {Bm - E1, E1, F - E1 - E2, E2}; break;
    case 14: c = {Bm - E1, E1 - E2, E2, F - E1}; break;
    case 15: c = {Bm - E1, E1 - E2, E2, F - E1 - E2}; break;
    case 16: c = {Bm - E1, F - E2, E1, F - E1, E2}; break;
    case 17: c = {Bm - E1 - E2, E2, E1 - E2, F - E1}; break;
    default: c = {F - E1, E1, Bm - E1 - E2, E2, F - E2}; break;
  }
  return {t, m, c};
}

long defining_d_index(int t, long m) {
  if (t == 1 || t == 2 || t == 4 || t == 6) return -1;
  if (t == 3 || t == 5) return -2;
  if (t <= 10) return -4 * m + 1;
  if (t <= 12) return -4 * m;
  if (t <= 16) return -4 * m - 1;
  return -4 * m - 2;
}

std::vector<ConfigType> enumerate_configurations(const Shape& s) {
  std::vector<ConfigType> out;
  auto keep = [&](const ConfigType& c) {
    for (const auto& a : c.member_classes)
      if (area(s, a) <= 0) return false;
    return true;
  };
  for (int t = 1; t <= 6; ++t) {
    auto c = config_type(t, 0);
    if (keep(c)) out.push_back(c);
  }
  for (long m = 1; Rational(m) < s.mu(); ++m)
    for (int t = 7; t <= 18; ++t) {
      auto c = config_type(t, m);
      if (keep(c)) out.push_back(c);
    }
  return out;
}

Isometry isometry_type(const ConfigType& t) {
  return (t.type_id == 6 || t.type_id == 8 || t.type_id == 14) ? Isometry::S1 : Isometry::T2;
}

const char* to_string(Isometry i) { return i == Isometry::S1 ? "S1" : "T2"; }

namespace {

// T_i(0), T_i(2k-1), T_i(2k) for i = 1..5
constexpr int kPairing[3][5] = {{1, 3, 5, 4, 2}, {10, 12, 11, 9, 7}, {16, 18, 17, 15, 13}};

}  // namespace

std::optional<TorusId> torus_of(int t, long m) {
  for (int row = 0; row < 3; ++row)
    for (int i = 0; i < 5; ++i)
      if (kPairing[row][i] == t) {
        if (row == 0) return TorusId{i + 1, 0};
        return TorusId{i + 1, row == 1 ? 2 * m - 1 : 2 * m};
      }
  return std::nullopt;
}

int config_of_torus(int i, long n) {
  if (i < 1 || i > 5 || n < 0) throw std::invalid_argument("torus index out of range");
  int row = n == 0 ? 0 : (n % 2 ? 1 : 2);
  return kPairing[row][i - 1];
}

std::array<HClass, 5> pentagon_edge_classes(long n) {
  const HClass B = HClass::B(), F = HClass::F(), E1 = HClass::E1();
  if (n < 0) throw std::invalid_argument("n >= 0 required");
  if (n % 2 == 0) {
    long k = n / 2;
    return {F, B - k * F - E1, E1, F - E1, B + k * F};
  }
  long k = (n + 1) / 2;
  return {F, B - k * F, F - E1, E1, B + k * F - E1};
}

std::vector<HClass> boundary_cycle(int i, long n) {
  if (i < 1 || i > 5) throw std::invalid_argument("vertex index must be 1..5");
  auto e = pentagon_edge_classes(n);
  const HClass E2 = HClass::E2();
  // vertex v_i sits between edge (i-1) [v_{i-1}v_i] and edge i [v_i v_{i+1}], 0-based mod 5
  int before = (i + 3) % 5, after = i - 1;
  std::vector<HClass> cyc;
  for (int j = 0; j < 5; ++j) {
    if (j == after) {
      cyc.push_back(E2);
      cyc.push_back(e[j] - E2);
    } else if (j == before) {
      cyc.push_back(e[j] - E2);
    } else {
      cyc.push_back(e[j]);
    }
  }
  return cyc;
}

long codim(long ell, int r1, int r2) {
  if (ell < 1) throw std::invalid_argument("codim needs ell >= 1");
  if ((r1 != 0 && r1 != 1) || (r2 != 0 && r2 != 1)) throw std::invalid_argument("r1, r2 must be 0 or 1");
  return 4 * ell - 2 + 2 * r1 + 2 * r2;
}

std::string validate_config(const ConfigType& t) {
  std::ostringstream err;
  const auto& c = t.member_classes;
  HClass def = d_class(defining_d_index(t.type_id, t.m));
  if (std::find(c.begin(), c.end(), def) == c.end())
    err << "type " << t.type_id << ": defining class " << def.to_string() << " missing; ";
  for (size_t i = 0; i < c.size(); ++i) {
    if (adjunction_genus(c[i]) != 0) err << c[i].to_string() << " has g_v != 0; ";
    if (intersect(c[i], c[i]) >= 0) err << c[i].to_string() << " is not negative; ";
    for (size_t j = i + 1; j < c.size(); ++j)
      if (intersect(c[i], c[j]) < 0)
        err << c[i].to_string() << "." << c[j].to_string() << " < 0; ";
  }
  return err.str();
}

std::string validate_cycle(const std::vector<HClass>& cyc) {
  std::ostringstream err;
  HClass sum;
  for (const auto& a : cyc) sum = sum + a;
  if (!(sum == HClass{2, 2, 1, 1})) err << "cycle sum " << sum.to_string() << " != 2B+2F-E1-E2; ";
  size_t n = cyc.size();
  for (size_t i = 0; i < n; ++i) {
    if (adjunction_genus(cyc[i]) != 0) err << cyc[i].to_string() << " has g_v != 0; ";
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      long want = adjacent ? 1 : 0;
      if (intersect(cyc[i], cyc[j]) != want)
        err << cyc[i].to_string() << "." << cyc[j].to_string() << " != " << want << "; ";
    }
  }
  return err.str();
}

}  // namespace x3top
