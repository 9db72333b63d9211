#pragma once
// Independent reference computations for the unit tests. Dense elimination only,
// nothing shared with the library's echelon code.

#include "x3top/commpoly.hpp"
#include "x3top/ncalg.hpp"
#include "x3top/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using x3top::Rational;

inline long dense_rank(std::vector<std::vector<Rational>> m) {
  long r = 0;
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && r < long(m.size()); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < m.size(); ++i) {
      if (long(i) == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<x3top::Word> words_of_degree(const x3top::Alphabet& a, int d) {
  std::vector<x3top::Word> out;
  if (d == 0) return {x3top::Word{}};
  for (int i = 0; i < int(a.size()); ++i) {
    int gd = a[i].degree;
    if (gd > d) continue;
    for (auto w : words_of_degree(a, d - gd)) {
      w.insert(w.begin(), i);
      out.push_back(w);
    }
  }
  return out;
}

// dim T(V)_d - dim span{u r v : |u|+|r|+|v| = d}.
inline std::vector<long> nc_quotient_dims(const x3top::Alphabet& a, const std::vector<x3top::NcElement>& rels,
                                          int maxdeg) {
  std::vector<long> out;
  for (int d = 0; d <= maxdeg; ++d) {
    auto basis = words_of_degree(a, d);
    std::map<x3top::Word, size_t> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : rels) {
      int rd = r.homogeneous_degree(a);
      if (rd < 0 || rd > d) continue;
      for (int du = 0; du <= d - rd; ++du)
        for (const auto& u : words_of_degree(a, du))
          for (const auto& v : words_of_degree(a, d - rd - du)) {
            std::vector<Rational> row(basis.size());
            for (const auto& [w, c] : r.terms()) {
              x3top::Word full = u;
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              row[idx.at(full)] += c;
            }
            rows.push_back(row);
          }
    }
    out.push_back(long(basis.size()) - dense_rank(rows));
  }
  return out;
}

// Standard monomials of a monomial ideal counted directly.
inline std::vector<long> monomial_quotient_dims(const x3top::PolyRing& ring,
                                                const std::vector<x3top::Exponents>& gens, int maxdeg) {
  std::vector<long> out(maxdeg + 1, 0);
  int n = ring.size();
  x3top::Exponents e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      for (const auto& g : gens) {
        bool div = true;
        for (int j = 0; j < n; ++j) div = div && e[j] >= g[j];
        if (div) return;
      }
      out[maxdeg - left] += 1;
      return;
    }
    for (int k = 0; k * ring.weights[i] <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k * ring.weights[i]);
    }
    e[i] = 0;
  };
  rec(0, maxdeg);
  return out;
}

}  // namespace oracle
