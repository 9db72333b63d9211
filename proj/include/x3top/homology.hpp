#pragma once

#include "x3top/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace x3top {

// pB + qF - r1 E1 - r2 E2
struct HClass {
  long p = 0, q = 0, r1 = 0, r2 = 0;

  static constexpr HClass B() { return {1, 0, 0, 0}; }
  static constexpr HClass F() { return {0, 1, 0, 0}; }
  static constexpr HClass E1() { return {0, 0, -1, 0}; }
  static constexpr HClass E2() { return {0, 0, 0, -1}; }

  friend constexpr HClass operator+(HClass a, HClass b) {
    return {a.p + b.p, a.q + b.q, a.r1 + b.r1, a.r2 + b.r2};
  }
  friend constexpr HClass operator-(HClass a, HClass b) {
    return {a.p - b.p, a.q - b.q, a.r1 - b.r1, a.r2 - b.r2};
  }
  friend constexpr HClass operator*(long k, HClass a) { return {k * a.p, k * a.q, k * a.r1, k * a.r2}; }
  friend constexpr bool operator==(const HClass&, const HClass&) = default;
  friend constexpr auto operator<=>(const HClass&, const HClass&) = default;

  std::string to_string() const;  // e.g. "B-2F-E1-E2"
};

long intersect(const HClass& a, const HClass& b);
long chern(const HClass& a);
Rational adjunction_genus(const HClass& a);
Rational k_index(const HClass& a);
HClass d_class(long i);

enum class LambdaRange { A, B, C, D };  // lambda<=c2, c2<lambda<=c1, c1<lambda<=c1+c2, c1+c2<lambda
enum class Boundary { Generic, R1, R2, R3 };

const char* to_string(LambdaRange r);
const char* to_string(Boundary b);

class Shape {
 public:
  // Throws std::invalid_argument naming the violated constraint.
  static Shape make(const Rational& mu, const Rational& c1, const Rational& c2);

  const Rational& mu() const { return mu_; }
  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  long ell() const { return ell_; }
  const Rational& lambda() const { return lambda_; }
  Boundary boundary() const;
  bool generic() const { return boundary() == Boundary::Generic; }
  LambdaRange range() const;
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  Rational mu_, c1_, c2_, lambda_;
  long ell_ = 0;
};

Rational area(const Shape& s, const HClass& a);

// a0 L - a1 V1 - a2 V2 - a3 V3
struct CP2Class {
  Rational a0, a1, a2, a3;
};

bool is_reduced(const CP2Class& c);
// mu=(nu-d2)/(nu-d1), c1=(nu-d1-d2)/(nu-d1), c2=d3/(nu-d1)
Shape cp2_to_shape(const Rational& nu, const Rational& d1, const Rational& d2, const Rational& d3);
// {L,V1,V2,V3} -> {B+F-E1, B-E1, F-E1, E2}; returns (p,q,r1,r2).
std::array<Rational, 4> cp2_to_basis(const CP2Class& c);
HClass cp2_to_hclass(const CP2Class& c);  // throws unless integral

std::vector<HClass> p0_classes();
std::vector<HClass> exceptional_classes();

long strata_count(const Shape& s);  // generic shapes only

struct DStratum {
  long m;  // stratum of D_{-m}
  HClass cls;
};
std::vector<DStratum> enumerate_d_strata(const Shape& s);

struct ConfigType {
  int type_id = 0;
  long m = 0;
  std::vector<HClass> member_classes;  // negative spheres of the configuration
  friend bool operator==(const ConfigType&, const ConfigType&) = default;
};

// Literal configuration data for one type and m (m=0 for types 1..6).
ConfigType config_type(int type_id, long m);
// Index of the defining class D_i, as i.
long defining_d_index(int type_id, long m);
std::vector<ConfigType> enumerate_configurations(const Shape& s);

enum class Isometry { T2, S1 };
Isometry isometry_type(const ConfigType& t);
const char* to_string(Isometry i);

// Toric structure T_i(n) attached to a configuration (none for types 6, 8, 14).
struct TorusId {
  int i;
  long n;
  friend bool operator==(const TorusId&, const TorusId&) = default;
};
std::optional<TorusId> torus_of(int type_id, long m);
int config_of_torus(int i, long n);  // inverse pairing, type id

// Classes of the pentagon edges v1v2, ..., v5v1 of the once-blown-up Hirzebruch polygon.
std::array<HClass, 5> pentagon_edge_classes(long n);
// Hexagon edge classes after blowing up vertex i (1..5) with E2, listed edge by edge
// along the chopped polygon's vertex order (vertex v_i becomes two vertices).
std::vector<HClass> boundary_cycle(int i, long n);

long codim(long ell, int r1, int r2);

// Consistency checks used by validators; return an empty string on success.
std::string validate_config(const ConfigType& t);
std::string validate_cycle(const std::vector<HClass>& cycle);

}  // namespace x3top
