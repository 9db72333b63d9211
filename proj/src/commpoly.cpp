#include "x3top/commpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace x3top {

PolyRing PolyRing::even(std::vector<std::string> names, int weight) {
  if (weight <= 0 || weight % 2) throw std::invalid_argument("weights must be positive and even");
  PolyRing r;
  r.weights.assign(names.size(), weight);
  r.names = std::move(names);
  return r;
}

int PolyRing::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown variable " + name);
  return static_cast<int>(it - names.begin());
}

int PolyRing::degree(const Exponents& e) const {
  int d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += e[i] * weights.at(i);
  return d;
}

CommPoly CommPoly::constant(int nvars, const Rational& c) {
  CommPoly p;
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

CommPoly CommPoly::var(int nvars, int i, const Rational& c) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(std::move(e), c);
}

CommPoly CommPoly::monomial(Exponents e, const Rational& c) {
  CommPoly p;
  p.add_term(e, c);
  return p;
}

void CommPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CommPoly::homogeneous_degree(const PolyRing& r) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int ed = r.degree(e);
    if (d >= 0 && ed != d) throw std::invalid_argument("polynomial is not homogeneous");
    d = ed;
  }
  return d;
}

std::string CommPoly::to_string(const PolyRing& r) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomials first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = true;
    for (int v : e) unit = unit && v == 0;
    if (a != 1 || unit) os << x3top::to_string(a);
    bool need_star = a != 1 && !unit;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << r.names.at(i);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) throw std::invalid_argument("variable count mismatch");
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

CommPoly operator*(const Rational& c, const CommPoly& a) {
  CommPoly p;
  for (const auto& [e, x] : a.terms_) p.add_term(e, c * x);
  return p;
}

CommPoly pow(const CommPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  if (p.terms().empty()) return n == 0 ? CommPoly() : p;
  CommPoly r = CommPoly::constant(static_cast<int>(p.terms().begin()->first.size()), 1);
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

DegreePiece::DegreePiece(const PolyRing& ring, int degree) : degree_(degree) {
  int n = ring.size();
  Exponents e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left == 0) monos_.push_back(e);
      return;
    }
    for (int k = left / ring.weights[i]; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k * ring.weights[i]);
    }
    e[i] = 0;
  };
  if (degree >= 0) rec(0, degree);
  for (int i = 0; i < static_cast<int>(monos_.size()); ++i) index_[monos_[i]] = i;
}

SparseVec DegreePiece::to_vec(const CommPoly& p) const {
  std::map<int, Rational> m;
  for (const auto& [e, c] : p.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("term outside degree piece");
    m[it->second] += c;
  }
  return sparse_from_map(m);
}

CommPoly DegreePiece::from_vec(const SparseVec& v) const {
  CommPoly p;
  for (const auto& [i, c] : v) p.add_term(monos_.at(i), c);
  return p;
}

SparseEchelon ideal_piece(const PolyRing& ring, const std::vector<CommPoly>& gens,
                          const DegreePiece& piece) {
  SparseEchelon ech;
  for (const auto& g : gens) {
    int gd = g.homogeneous_degree(ring);
    if (gd < 0 || gd > piece.degree()) continue;
    DegreePiece mult(ring, piece.degree() - gd);
    for (int i = 0; i < mult.size(); ++i) {
      if (ech.rank() == piece.size()) return ech;
      ech.insert(piece.to_vec(CommPoly::monomial(mult.monomial(i)) * g));
    }
  }
  return ech;
}

std::vector<long> graded_dim_quotient_comm(const PolyRing& ring, const std::vector<CommPoly>& gens,
                                           int maxdeg) {
  std::vector<long> dims;
  for (int d = 0; d <= maxdeg; ++d) {
    DegreePiece piece(ring, d);
    dims.push_back(piece.size() - ideal_piece(ring, gens, piece).rank());
  }
  return dims;
}

}  // namespace x3top
