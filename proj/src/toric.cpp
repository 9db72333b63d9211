#include "x3top/toric.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace x3top {

namespace {

Rational cross(const Vec2& a, const Vec2& b) { return a(0) * b(1) - a(1) * b(0); }

Rational dot(const Vec2i& xi, const Vec2& v) { return Rational(xi(0)) * v(0) + Rational(xi(1)) * v(1); }

long dot(const Vec2i& a, const Vec2i& b) { return a(0) * b(0) + a(1) * b(1); }

Vec2 pt(const Rational& x, const Rational& y) {
  Vec2 v;
  v << x, y;
  return v;
}

std::string vec_str(const Vec2& v) { return "(" + to_string(v(0)) + "," + to_string(v(1)) + ")"; }

void require_n(long n) {
  if (n < 0) throw GeometryError("n must be nonnegative");
}

}  // namespace

Vec2i primitive(const Vec2& d) {
  if (d(0) == 0 && d(1) == 0) throw GeometryError("zero direction");
  Integer l = boost::multiprecision::lcm(den(d(0)), den(d(1)));
  Integer a = num(d(0) * Rational(l)), b = num(d(1) * Rational(l));
  Integer g = boost::multiprecision::gcd(a, b);
  return Vec2i(to_long(a / g), to_long(b / g));
}

long det(const Vec2i& a, const Vec2i& b) { return a(0) * b(1) - a(1) * b(0); }

LatticePolygon::LatticePolygon(std::vector<Vec2> vertices) : v_(std::move(vertices)) {
  if (v_.size() < 3) throw GeometryError("polygon needs at least 3 vertices");
  int n = size();
  for (int i = 0; i < n; ++i) {
    Vec2 e1 = vertex(i + 1) - vertex(i), e2 = vertex(i + 2) - vertex(i + 1);
    if (e1(0) == 0 && e1(1) == 0) throw GeometryError("repeated vertex " + vec_str(vertex(i)));
    if (cross(e1, e2) <= 0)
      throw GeometryError("not strictly convex counterclockwise at " + vec_str(vertex(i + 1)));
  }
}

Vec2i LatticePolygon::edge_direction(int i) const { return primitive(vertex(i + 1) - vertex(i)); }

Rational LatticePolygon::edge_length(int i) const {
  Vec2 d = vertex(i + 1) - vertex(i);
  Vec2i u = edge_direction(i);
  return u(0) != 0 ? d(0) / Rational(u(0)) : d(1) / Rational(u(1));
}

bool LatticePolygon::is_delzant_vertex(int i) const {
  long d = det(edge_direction(i - 1), edge_direction(i));
  return d == 1 || d == -1;
}

bool LatticePolygon::is_delzant() const {
  for (int i = 0; i < size(); ++i)
    if (!is_delzant_vertex(i)) return false;
  return true;
}

std::vector<Rational> LatticePolygon::edge_lengths() const {
  std::vector<Rational> out;
  for (int i = 0; i < size(); ++i) out.push_back(edge_length(i));
  return out;
}

LatticePolygon hirzebruch_polygon(long n, const Shape& s) {
  require_n(n);
  const Rational& mu = s.mu();
  if (n % 2 == 0) {
    long k = n / 2;
    if (k > s.ell()) throw GeometryError("Delta(" + std::to_string(n) + ") needs k <= ell");
    if (mu - k <= 0) throw GeometryError("Delta(" + std::to_string(n) + ") needs mu > k");
    return LatticePolygon({pt(0, 0), pt(1, 0), pt(1, mu + k), pt(0, mu - k)});
  }
  long k = (n + 1) / 2;
  if (k > s.ell()) throw GeometryError("Delta(" + std::to_string(n) + ") needs k <= ell");
  return LatticePolygon({pt(0, 0), pt(1, 0), pt(1, mu + k), pt(0, mu - k + 1)});
}

LatticePolygon corner_chop(const LatticePolygon& p, int idx, const Rational& c) {
  int n = p.size();
  if (idx < 0 || idx >= n) throw GeometryError("vertex index out of range");
  if (c <= 0) throw GeometryError("capacity must be positive");
  if (!p.is_delzant_vertex(idx)) throw GeometryError("vertex " + vec_str(p.vertex(idx)) + " is not Delzant");
  const Vec2& v = p.vertex(idx);
  Vec2i up = primitive(p.vertex(idx - 1) - v), un = primitive(p.vertex(idx + 1) - v);
  Rational lp = p.edge_length(idx - 1), ln = p.edge_length(idx);
  if (c >= lp || c >= ln)
    throw GeometryError("capacity " + to_string(c) + " must be < incident edge lengths " + to_string(lp) +
                        " and " + to_string(ln));
  std::vector<Vec2> out;
  for (int j = 0; j < n; ++j) {
    if (j != idx) {
      out.push_back(p.vertex(j));
      continue;
    }
    out.push_back(v + pt(c * up(0), c * up(1)));
    out.push_back(v + pt(c * un(0), c * un(1)));
  }
  return LatticePolygon(std::move(out));
}

LatticePolygon tilde_polygon(long n, const Shape& s) {
  require_n(n);
  if (n % 2 == 0) {
    LatticePolygon c = corner_chop(hirzebruch_polygon(n, s), 0, s.c1());
    return LatticePolygon({c.vertex(3), c.vertex(4), c.vertex(0), c.vertex(1), c.vertex(2)});
  }
  long k = (n + 1) / 2;
  if (k > s.ell()) throw GeometryError("Delta~(" + std::to_string(n) + ") needs k <= ell");
  // Delta(2k-1) with mu replaced by mu-c1, chopped at (0,0) by 1-c1
  Rational m = s.mu() - s.c1();
  LatticePolygon h({pt(0, 0), pt(1, 0), pt(1, m + k), pt(0, m - k + 1)});
  LatticePolygon c = corner_chop(h, 0, 1 - s.c1());
  return LatticePolygon({c.vertex(3), c.vertex(4), c.vertex(0), c.vertex(1), c.vertex(2)});
}

Mat2i c_matrix(long n) {
  require_n(n);
  Mat2i m;
  if (n == 0) {
    m << -1, 0, 0, 1;
  } else if (n % 2 == 0) {
    long k = n / 2;
    m << 1, 0, -k, 1;
  } else {
    long k = (n + 1) / 2;
    m << 1 - k, 1, k, -1;
  }
  return m;
}

LatticePolygon apply_gl2z(const LatticePolygon& p, const Mat2i& m) {
  long d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (d != 1 && d != -1) throw GeometryError("matrix is not in GL(2,Z)");
  std::vector<Vec2> img;
  for (const auto& v : p.vertices())
    img.push_back(pt(Rational(m(0, 0)) * v(0) + Rational(m(0, 1)) * v(1),
                     Rational(m(1, 0)) * v(0) + Rational(m(1, 1)) * v(1)));
  if (d < 0) std::reverse(img.begin() + 1, img.end());
  Rational mx = img[0](0), my = img[0](1);
  for (const auto& v : img) {
    mx = std::min(mx, v(0));
    my = std::min(my, v(1));
  }
  for (auto& v : img) v -= pt(mx, my);
  return LatticePolygon(std::move(img));
}

LatticePolygon t_polygon(int i, long n, const Shape& s) {
  if (i < 1 || i > 5) throw GeometryError("torus index must be 1..5");
  LatticePolygon chopped = corner_chop(tilde_polygon(n, s), i - 1, s.c2());
  return apply_gl2z(chopped, c_matrix(n));
}

LatticePolygon delta0_polygon(const Shape& s) {
  const Rational &mu = s.mu(), &c1 = s.c1(), &c2 = s.c2();
  return LatticePolygon({pt(c1, 0), pt(mu, 0), pt(mu, 1 - c2), pt(mu - c2, 1), pt(0, 1), pt(0, c1)});
}

bool gl2z_equivalent(const LatticePolygon& p, const LatticePolygon& q, long bound) {
  if (p.size() != q.size()) return false;
  auto key = [](const LatticePolygon& x) {
    std::vector<std::pair<Rational, Rational>> v;
    for (const auto& w : x.vertices()) v.emplace_back(w(0), w(1));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto target = key(apply_gl2z(q, Mat2i::Identity()));
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          long dt = a * d - b * c;
          if (dt != 1 && dt != -1) continue;
          Mat2i m;
          m << a, b, c, d;
          if (key(apply_gl2z(p, m)) == target) return true;
        }
  return false;
}

CircleWeight::CircleWeight(Vec2i v) : xi(v) {
  if (std::gcd(v(0), v(1)) != 1)
    throw GeometryError("circle weight (" + std::to_string(v(0)) + "," + std::to_string(v(1)) +
                        ") is not primitive");
}

void KarshonGraph::normalize() {
  bool any = false;
  Rational m;
  auto see = [&](const Rational& v) {
    if (!any || v < m) m = v;
    any = true;
  };
  for (const auto& f : fat) see(f.value);
  for (const auto& p : isolated) see(p.value);
  if (any) {
    for (auto& f : fat) f.value -= m;
    for (auto& p : isolated) p.value -= m;
    for (auto& e : zk) {
      e.lo -= m;
      e.hi -= m;
    }
  }
  std::sort(fat.begin(), fat.end());
  std::sort(isolated.begin(), isolated.end());
  std::sort(zk.begin(), zk.end());
}

KarshonGraph KarshonGraph::negate() const {
  KarshonGraph g;
  for (const auto& f : fat) g.fat.push_back({-f.value, f.area, f.genus});
  for (const auto& p : isolated) {
    long a = -p.weights.first, b = -p.weights.second;
    g.isolated.push_back({-p.value, {std::min(a, b), std::max(a, b)}});
  }
  for (const auto& e : zk) g.zk.push_back({-e.hi, -e.lo, e.k});
  g.normalize();
  return g;
}

std::string KarshonGraph::to_string() const {
  std::ostringstream os;
  os << "fat{";
  for (size_t i = 0; i < fat.size(); ++i)
    os << (i ? " " : "") << "(" << x3top::to_string(fat[i].value) << ", area " << x3top::to_string(fat[i].area)
       << ")";
  os << "} iso{";
  for (size_t i = 0; i < isolated.size(); ++i)
    os << (i ? " " : "") << "(" << x3top::to_string(isolated[i].value) << ", " << isolated[i].weights.first << ","
       << isolated[i].weights.second << ")";
  os << "} zk{";
  for (size_t i = 0; i < zk.size(); ++i)
    os << (i ? " " : "") << "(" << x3top::to_string(zk[i].lo) << ".." << x3top::to_string(zk[i].hi)
       << ", Z" << zk[i].k << ")";
  os << "}";
  return os.str();
}

KarshonGraph karshon_graph(const LatticePolygon& p, const CircleWeight& w) {
  if (!p.is_delzant()) throw GeometryError("karshon_graph needs a Delzant polygon");
  const Vec2i& xi = w.xi;
  int n = p.size();
  std::vector<bool> fixed(n);
  KarshonGraph g;
  for (int j = 0; j < n; ++j) {
    Vec2i u = p.edge_direction(j);
    fixed[j] = dot(xi, u) == 0;
    if (fixed[j]) {
      g.fat.push_back({dot(xi, p.vertex(j)), p.edge_length(j), 0});
    } else {
      long k = std::abs(dot(xi, u));
      if (k >= 2) {
        Rational a = dot(xi, p.vertex(j)), b = dot(xi, p.vertex(j + 1));
        g.zk.push_back({std::min(a, b), std::max(a, b), k});
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (fixed[j] || fixed[(j + n - 1) % n]) continue;
    const Vec2& v = p.vertex(j);
    long a = dot(xi, primitive(p.vertex(j - 1) - v)), b = dot(xi, primitive(p.vertex(j + 1) - v));
    g.isolated.push_back({dot(xi, v), {std::min(a, b), std::max(a, b)}});
  }
  g.normalize();
  return g;
}

KarshonGraph a_graph(long n, const Shape& s) {
  LatticePolygon p = tilde_polygon(n, s);
  // the edge v3v4 carries E1; its inward normal makes it the minimum
  Vec2i u = p.edge_direction(2);
  Vec2i xi(-u(1), u(0));
  KarshonGraph g = karshon_graph(p, CircleWeight(xi));
  Rational lo = dot(xi, p.vertex(0));
  for (const auto& v : p.vertices()) lo = std::min(lo, dot(xi, v));
  Rational m0 = dot(xi, p.vertex(2)) - lo;
  auto it = std::find_if(g.fat.begin(), g.fat.end(), [&](const FatVertex& f) { return f.value == m0; });
  if (it == g.fat.end()) throw GeometryError("internal: E1 fixed sphere not found");
  if (s.c2() >= it->area)
    throw GeometryError("interior blow-up needs c2 < " + to_string(it->area) + " (area of the E1 sphere)");
  it->area -= s.c2();
  g.isolated.push_back({m0 + s.c2(), {-1, 1}});
  g.normalize();
  return g;
}

const std::array<const char*, 6> GeneratorExpr::names = {"x0", "y0", "x1", "y1", "z", "t"};

GeneratorExpr GeneratorExpr::unit(int i) {
  GeneratorExpr e;
  e.c.at(i) = 1;
  return e;
}

GeneratorExpr operator+(GeneratorExpr a, const GeneratorExpr& b) {
  for (int i = 0; i < 6; ++i) a.c[i] += b.c[i];
  return a;
}

GeneratorExpr operator-(GeneratorExpr a, const GeneratorExpr& b) {
  for (int i = 0; i < 6; ++i) a.c[i] -= b.c[i];
  return a;
}

GeneratorExpr operator*(long k, GeneratorExpr a) {
  for (auto& x : a.c) x *= k;
  return a;
}

std::string GeneratorExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 6; ++i) {
    long v = c[i];
    if (!v) continue;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (std::abs(v) != 1) os << std::abs(v) << "*";
    os << names[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string IdentEntry::symbol() const {
  if (kind == 'a') return "a_" + std::to_string(n);
  return std::string(1, kind) + "_{" + std::to_string(n) + "," + std::to_string(i) + "}";
}

GeneratorExpr ident_lookup(long n, int i, char kind) {
  require_n(n);
  const GeneratorExpr x0 = GeneratorExpr::unit(0), y0 = GeneratorExpr::unit(1), x1 = GeneratorExpr::unit(2),
                      y1 = GeneratorExpr::unit(3), z = GeneratorExpr::unit(4), t = GeneratorExpr::unit(5);
  if (kind == 'a') {
    if (n == 0) return y1;
    if (n % 2) {
      long k = (n + 1) / 2;
      return k * k * (t - x1) + z;
    }
    long k = n / 2;
    return k * (k + 1) * (t - x1) + y1;
  }
  if (kind != 'x' && kind != 'y') throw std::invalid_argument("kind must be x, y or a");
  if (i < 1 || i > 5) throw std::invalid_argument("torus index must be 1..5");
  bool x = kind == 'x';
  if (n == 0) {
    // definitions plus the k=0 identifications
    switch (i) {
      case 1: return x ? x0 : y0;
      case 2: return x ? x1 : y0;
      case 3: return x ? x1 : x1 + y1;
      case 4: return x ? z - y1 : z;
      default: return x ? x0 : z;
    }
  }
  if (n % 2) {
    long k = (n + 1) / 2;
    switch (i) {
      case 1: return x ? y0 - k * x0 : k * (t - x1) + x1 + k * x0 - y0;
      case 2: return x ? y0 - k * x1 : k * t + x0 - y0;
      case 3: return x ? z - k * x0 : k * (t - x1) + (k + 1) * x0 - z;
      case 4: return x ? k * y1 + (1 - k) * z : k * (t - x1 + z) - (k + 1) * y1;
      default: return x ? y1 + (1 - k) * x1 : k * t - y1;
    }
  }
  long k = n / 2;
  switch (i) {
    case 1: return x ? k * (t - x1) - x0 : k * x1 + y0;
    case 2: return x ? k * (t - x1) - x1 : k * x0 + y0;
    case 3: return x ? k * (t - x1) - x1 : (k + 1) * x1 + y1;
    case 4: return x ? k * (t - x1) + y1 - z : (k + 1) * z - k * y1;
    default: return x ? k * (t - x1) - x0 : k * x0 + z;
  }
}

std::vector<IdentEntry> identification_table(long K) {
  std::vector<IdentEntry> out;
  for (long n = 0; n <= 2 * K; ++n) {
    for (int i = 1; i <= 5; ++i)
      for (char kind : {'x', 'y'}) out.push_back({n, i, kind, ident_lookup(n, i, kind)});
    out.push_back({n, 0, 'a', ident_lookup(n, 0, 'a')});
  }
  return out;
}

Circle Circle::torus(int i, long n, long a, long b) {
  if (i < 1 || i > 5) throw std::invalid_argument("torus index must be 1..5");
  require_n(n);
  CircleWeight w(a, b);
  Circle c;
  c.kind = Torus;
  c.i = i;
  c.n = n;
  c.xi = w.xi;
  return c;
}

Circle Circle::a_action(long n) {
  require_n(n);
  Circle c;
  c.kind = A;
  c.i = 0;
  c.n = n;
  return c;
}

std::string Circle::to_string() const {
  if (kind == A) return "a_" + std::to_string(n);
  return "T" + std::to_string(i) + "(" + std::to_string(n) + ")[" + std::to_string(xi(0)) + "," +
         std::to_string(xi(1)) + "]";
}

GeneratorExpr circle_expr(const Circle& c) {
  if (c.kind == Circle::A) return ident_lookup(c.n, 0, 'a');
  return c.xi(0) * ident_lookup(c.n, c.i, 'x') + c.xi(1) * ident_lookup(c.n, c.i, 'y');
}

Circle realize(const GeneratorExpr& e) {
  // tori carrying the defining generators first
  for (int i : {1, 2, 4, 3, 5}) {
    GeneratorExpr X = ident_lookup(0, i, 'x'), Y = ident_lookup(0, i, 'y');
    for (int r = 0; r < 6; ++r)
      for (int s = r + 1; s < 6; ++s) {
        long d = X.c[r] * Y.c[s] - X.c[s] * Y.c[r];
        if (!d) continue;
        long an = e.c[r] * Y.c[s] - e.c[s] * Y.c[r], bn = X.c[r] * e.c[s] - X.c[s] * e.c[r];
        if (an % d || bn % d) goto next_torus;
        {
          long a = an / d, b = bn / d;
          if (a * X + b * Y == e && std::gcd(a, b) == 1) return Circle::torus(i, 0, a, b);
        }
        goto next_torus;
      }
  next_torus:;
  }
  throw std::invalid_argument("circle " + e.to_string() +
                              " is not a primitive combination inside a single torus T_i(0)");
}

KarshonGraph circle_graph(const Circle& c, const Shape& s) {
  if (c.kind == Circle::A) return a_graph(c.n, s);
  return karshon_graph(t_polygon(c.i, c.n, s), CircleWeight(c.xi));
}

RelationCheck verify_relation(const Circle& lhs, const Circle& rhs, const Shape& s) {
  RelationCheck r;
  KarshonGraph gl, gr;
  try {
    gl = circle_graph(lhs, s);
    gr = circle_graph(rhs, s);
  } catch (const GeometryError& e) {
    r.admissible = false;
    r.detail = std::string("not admissible at ") + s.to_string() + ": " + e.what();
    return r;
  }
  r.ok = gl == gr;
  r.detail = r.ok ? gl.to_string() : lhs.to_string() + ": " + gl.to_string() + " vs " + rhs.to_string() + ": " +
                                         gr.to_string();
  return r;
}

std::vector<NamedRelation> circle_relations(long K) {
  using C = Circle;
  std::vector<NamedRelation> out;
  auto add = [&](std::string name, C a, C b) { out.push_back({std::move(name), a, b}); };
  auto s = [](long v) { return std::to_string(v); };
  C y1 = C::torus(4, 0, -1, 1);
  add("x_{0,5}=x0", C::torus(5, 0, 1, 0), C::torus(1, 0, 1, 0));
  add("y_{0,5}=z", C::torus(5, 0, 0, 1), C::torus(4, 0, 0, 1));
  add("x_{0,3}=x1", C::torus(3, 0, 1, 0), C::torus(2, 0, 1, 0));
  add("y_{0,2}=y0", C::torus(2, 0, 0, 1), C::torus(1, 0, 0, 1));
  add("x_{1,4}=y1", C::torus(4, 1, 1, 0), y1);
  add("x_{1,5}=y1", C::torus(5, 1, 1, 0), y1);
  add("x_{1,1}=y0-x0", C::torus(1, 1, 1, 0), C::torus(1, 0, -1, 1));
  add("x_{1,2}=y0-x1", C::torus(2, 1, 1, 0), C::torus(2, 0, -1, 1));
  add("a_0=y1", C::a_action(0), y1);
  for (long k = 1; k <= K; ++k) {
    std::string sk = s(k);
    for (long j = 1; j <= K; ++j) {
      std::string sj = s(j);
      if (j != k)
        for (int i : {3, 4, 5})
          add("odd j=" + sj + " k=" + sk + " i=" + s(i), C::torus(i, 2 * j - 1, k - 1, k),
              C::torus(i, 2 * k - 1, j - 1, j));
      add("odd j=" + sj + " k=" + sk + " i=1|2", C::torus(1, 2 * j - 1, k - 1, k),
          C::torus(2, 2 * k - 1, j - 1, j));
      if (j != k)
        for (int i : {3, 4, 5})
          add("even j=" + sj + " k=" + sk + " i=" + s(i), C::torus(i, 2 * k, j, -1), C::torus(i, 2 * j, k, -1));
      add("even j=" + sj + " k=" + sk + " i=1|2", C::torus(1, 2 * k, j, -1), C::torus(2, 2 * j, k, -1));
    }
    for (int i : {1, 2, 4})
      add("k=" + sk + " i=" + s(i) + " even/odd", C::torus(i, 2 * k, k, 1), C::torus(i, 2 * k - 1, k + 1, k));
    add("k=" + sk + " 3|5 even/odd", C::torus(3, 2 * k, k, 1), C::torus(5, 2 * k - 1, k + 1, k));
    add("k=" + sk + " 5|3 even/odd", C::torus(5, 2 * k, k, 1), C::torus(3, 2 * k - 1, k + 1, k));
    add("x_{2k,1}=x_{2k,5} k=" + sk, C::torus(1, 2 * k, 1, 0), C::torus(5, 2 * k, 1, 0));
    add("x_{2k,2}=x_{2k,3} k=" + sk, C::torus(2, 2 * k, 1, 0), C::torus(3, 2 * k, 1, 0));
    add("y_{2k,1}=kx1+y0 k=" + sk, C::torus(1, 2 * k, 0, 1), C::torus(2, 0, k, 1));
    add("y_{2k,2}=kx0+y0 k=" + sk, C::torus(2, 2 * k, 0, 1), C::torus(1, 0, k, 1));
    add("y_{2k,3}=(k+1)x1+y1 k=" + sk, C::torus(3, 2 * k, 0, 1), C::torus(3, 0, k, 1));
    add("y_{2k,5}=kx0+z k=" + sk, C::torus(5, 2 * k, 0, 1), C::torus(5, 0, k, 1));
    add("odd 1|5 diagonal k=" + sk, C::torus(1, 2 * k - 1, 1, 1), C::torus(5, 2 * k - 1, 1, 1));
    add("odd 2|3 diagonal k=" + sk, C::torus(2, 2 * k - 1, 1, 1), C::torus(3, 2 * k - 1, 1, 1));
    add("even 4|5 k=" + sk, C::torus(4, 2 * k, k, 1), C::torus(5, 2 * k, k, 1));
    add("a_{2k} via T3 k=" + sk, C::a_action(2 * k), C::torus(3, 2 * k, k + 1, 1));
    add("a_{2k} via T4 k=" + sk, C::a_action(2 * k), C::torus(4, 2 * k, k + 1, 1));
    add("a_{2k-1} via T3 k=" + sk, C::a_action(2 * k - 1), C::torus(3, 2 * k - 1, k + 1, k));
    add("a_{2k-1} via T4 k=" + sk, C::a_action(2 * k - 1), C::torus(4, 2 * k - 1, k + 1, k));
  }
  return out;
}

}  // namespace x3top
