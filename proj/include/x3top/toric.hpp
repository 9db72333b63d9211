#pragma once

#include "x3top/homology.hpp"
#include "x3top/rational.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace x3top {

struct GeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Counterclockwise polygon with rational vertices.
class LatticePolygon {
 public:
  LatticePolygon() = default;
  explicit LatticePolygon(std::vector<Vec2> vertices);  // validates convexity and orientation

  int size() const { return static_cast<int>(v_.size()); }
  const Vec2& vertex(int i) const { return v_.at(((i % size()) + size()) % size()); }
  const std::vector<Vec2>& vertices() const { return v_; }

  Vec2i edge_direction(int i) const;  // primitive direction of edge v_i -> v_{i+1}
  Rational edge_length(int i) const;  // lattice length of that edge
  bool is_delzant_vertex(int i) const;
  bool is_delzant() const;
  std::vector<Rational> edge_lengths() const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<Vec2> v_;
};

Vec2i primitive(const Vec2& d);  // throws on zero or non-rational-line input
long det(const Vec2i& a, const Vec2i& b);

LatticePolygon hirzebruch_polygon(long n, const Shape& s);
// Once-blown-up pentagon, vertices in the listing order v1..v5.
LatticePolygon tilde_polygon(long n, const Shape& s);
LatticePolygon corner_chop(const LatticePolygon& p, int vertex_index, const Rational& capacity);
LatticePolygon apply_gl2z(const LatticePolygon& p, const Mat2i& m);
Mat2i c_matrix(long n);
LatticePolygon t_polygon(int i, long n, const Shape& s);
// [0,mu]x[0,1] with (0,0) chopped by c1 and (mu,1) chopped by c2.
LatticePolygon delta0_polygon(const Shape& s);
// True when some matrix with entries in [-bound, bound] maps p onto q up to translation.
bool gl2z_equivalent(const LatticePolygon& p, const LatticePolygon& q, long bound = 3);

struct CircleWeight {
  Vec2i xi;
  explicit CircleWeight(Vec2i v);  // rejects non-primitive vectors
  CircleWeight(long a, long b) : CircleWeight(Vec2i(a, b)) {}
};

struct FatVertex {
  Rational value, area;
  int genus = 0;
  friend std::weak_ordering operator<=>(const FatVertex&, const FatVertex&) = default;
  friend bool operator==(const FatVertex&, const FatVertex&) = default;
};
struct IsolatedPoint {
  Rational value;
  std::pair<long, long> weights;
  friend std::weak_ordering operator<=>(const IsolatedPoint&, const IsolatedPoint&) = default;
  friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};
struct ZkEdge {
  Rational lo, hi;
  long k;
  friend std::weak_ordering operator<=>(const ZkEdge&, const ZkEdge&) = default;
  friend bool operator==(const ZkEdge&, const ZkEdge&) = default;
};

struct KarshonGraph {
  std::vector<FatVertex> fat;
  std::vector<IsolatedPoint> isolated;
  std::vector<ZkEdge> zk;

  void normalize();  // translate the minimum to 0 and sort
  KarshonGraph negate() const;
  std::string to_string() const;
  friend bool operator==(const KarshonGraph&, const KarshonGraph&) = default;
};

KarshonGraph karshon_graph(const LatticePolygon& p, const CircleWeight& xi);
// Graph of the circle action a_n: interior blow-up of capacity c2 on the E1 sphere.
KarshonGraph a_graph(long n, const Shape& s);

// Integer combination over {x0, y0, x1, y1, z, t}.
struct GeneratorExpr {
  std::array<long, 6> c{};
  static const std::array<const char*, 6> names;
  static GeneratorExpr unit(int i);
  friend GeneratorExpr operator+(GeneratorExpr a, const GeneratorExpr& b);
  friend GeneratorExpr operator-(GeneratorExpr a, const GeneratorExpr& b);
  friend GeneratorExpr operator*(long k, GeneratorExpr a);
  friend bool operator==(const GeneratorExpr&, const GeneratorExpr&) = default;
  std::string to_string() const;
};

struct IdentEntry {
  long n;
  int i;      // torus index 1..5, or 0 for a_n
  char kind;  // 'x', 'y' or 'a'
  GeneratorExpr expr;
  std::string symbol() const;
};

// Images of x_{n,i}, y_{n,i} (n = 0..2K) and a_n (n = 0..2K).
std::vector<IdentEntry> identification_table(long K);
GeneratorExpr ident_lookup(long n, int i, char kind);

// A circle inside a torus T_i(n) or one of the a_n actions.
struct Circle {
  enum Kind { Torus, A } kind = Torus;
  int i = 1;
  long n = 0;
  Vec2i xi = Vec2i(1, 0);
  static Circle torus(int i, long n, long a, long b);
  static Circle a_action(long n);
  std::string to_string() const;
};

// Expression image of a circle under the identification table.
GeneratorExpr circle_expr(const Circle& c);
// Finds a circle in some T_i(0) realizing expr; throws when none exists.
Circle realize(const GeneratorExpr& e);

KarshonGraph circle_graph(const Circle& c, const Shape& s);

struct RelationCheck {
  bool ok = false;
  bool admissible = true;  // false when a side's toric structure does not exist at this shape
  std::string detail;
};
RelationCheck verify_relation(const Circle& lhs, const Circle& rhs, const Shape& s);

struct NamedRelation {
  std::string name;
  Circle lhs, rhs;
};
// Generator identifications realizable as pairs of circles, for 1 <= k, j <= K.
std::vector<NamedRelation> circle_relations(long K);

}  // namespace x3top
