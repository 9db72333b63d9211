#pragma once

#include "x3top/linalg.hpp"
#include "x3top/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace x3top {

using Exponents = std::vector<int>;

struct PolyRing {
  std::vector<std::string> names;
  std::vector<int> weights;  // even, default 2

  static PolyRing even(std::vector<std::string> names, int weight = 2);
  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // throws on unknown name
  int degree(const Exponents& e) const;
};

class CommPoly {
 public:
  CommPoly() = default;
  static CommPoly constant(int nvars, const Rational& c);
  static CommPoly var(int nvars, int i, const Rational& c = 1);
  static CommPoly monomial(Exponents e, const Rational& c = 1);

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Weighted degree if homogeneous, -1 for zero; throws when mixed.
  int homogeneous_degree(const PolyRing& r) const;
  std::string to_string(const PolyRing& r) const;

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(const CommPoly& a) { return CommPoly() - a; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const Rational& c, const CommPoly& a);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  void add_term(const Exponents& e, const Rational& c);

 private:
  std::map<Exponents, Rational> terms_;
};

CommPoly pow(const CommPoly& p, int n);

// Monomials of one weighted degree, in descending lexicographic order.
class DegreePiece {
 public:
  DegreePiece(const PolyRing& ring, int degree);
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const Exponents& monomial(int i) const { return monos_.at(i); }
  SparseVec to_vec(const CommPoly& p) const;  // p must be homogeneous of this degree
  CommPoly from_vec(const SparseVec& v) const;

 private:
  int degree_;
  std::vector<Exponents> monos_;
  std::map<Exponents, int> index_;
};

// Span of {monomial * g} in one weighted degree.
SparseEchelon ideal_piece(const PolyRing& ring, const std::vector<CommPoly>& gens,
                          const DegreePiece& piece);

// dims[d] for weighted degrees d = 0..maxdeg (odd entries are 0 for even weights).
std::vector<long> graded_dim_quotient_comm(const PolyRing& ring, const std::vector<CommPoly>& gens,
                                           int maxdeg);

}  // namespace x3top
