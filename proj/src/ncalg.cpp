#include "x3top/ncalg.hpp"

#include "x3top/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace x3top {

int word_degree(const Alphabet& a, const Word& w) {
  int d = 0;
  for (int x : w) d += a.at(x).degree;
  return d;
}

NcElement NcElement::letter(int index) { return word(Word{index}); }

NcElement NcElement::word(Word w, Rational c) {
  NcElement e;
  e.add(w, c);
  return e;
}

void NcElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcElement NcElement::component(const Alphabet& a, int degree) const {
  NcElement e;
  for (const auto& [w, c] : terms_)
    if (word_degree(a, w) == degree) e.terms_.emplace(w, c);
  return e;
}

int NcElement::homogeneous_degree(const Alphabet& a) const {
  int d = -1;
  for (const auto& [w, c] : terms_) {
    int wd = word_degree(a, w);
    if (d >= 0 && wd != d) throw std::invalid_argument("element is not homogeneous");
    d = wd;
  }
  return d;
}

NcElement& NcElement::operator+=(const NcElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

NcElement& NcElement::operator-=(const NcElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

NcElement operator*(const NcElement& a, const NcElement& b) {
  NcElement e;
  for (const auto& [u, cu] : a.terms_)
    for (const auto& [v, cv] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      e.add(w, cu * cv);
    }
  return e;
}

NcElement operator*(const Rational& c, const NcElement& a) {
  NcElement e;
  for (const auto& [w, x] : a.terms_) e.add(w, c * x);
  return e;
}

NcElement graded_bracket(const Alphabet& alphabet, const NcElement& a, const NcElement& b) {
  int da = a.homogeneous_degree(alphabet), db = b.homogeneous_degree(alphabet);
  if (da < 0 || db < 0) return {};
  Rational sign = (da % 2 && db % 2) ? -1 : 1;
  return a * b - sign * (b * a);
}

namespace {

struct Builder {
  const Alphabet& alpha;
  int maxdeg;
  std::vector<std::vector<Word>> basis;  // standard words per degree
  // rmul[d][b][x]: normal form of basis[d][b] * x over basis[d + deg x]
  std::vector<std::vector<std::vector<SparseVec>>> rmul;

  Builder(const Alphabet& a, int m) : alpha(a), maxdeg(m), basis(m + 1), rmul(m + 1) {
    basis[0].push_back(Word{});
  }

  // v (over basis[d]) times letter x
  SparseVec times(const SparseVec& v, int d, int x) const {
    std::map<int, Rational> acc;
    for (const auto& [b, c] : v)
      for (const auto& [t, ct] : rmul[d][b][x]) acc[t] += c * ct;
    return sparse_from_map(acc);
  }

  void build_degree(int d, const std::vector<std::pair<NcElement, int>>& rels) {
    int n = static_cast<int>(alpha.size());
    // candidate columns (b, x) sorted by resulting word
    struct Col {
      Word w;
      int b, x;
    };
    std::vector<Col> cols;
    for (int x = 0; x < n; ++x) {
      int dx = alpha[x].degree;
      if (dx > d) continue;
      for (int b = 0; b < static_cast<int>(basis[d - dx].size()); ++b) {
        Word w = basis[d - dx][b];
        w.push_back(x);
        cols.push_back({std::move(w), b, x});
      }
    }
    std::sort(cols.begin(), cols.end(), [](const Col& p, const Col& q) { return p.w < q.w; });
    std::map<std::pair<int, int>, int> col_of;  // (x, b) -> column
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) col_of[{cols[i].x, cols[i].b}] = i;

    SparseEchelon ech;
    for (const auto& [rel, e] : rels) {
      if (e > d) continue;
      int sd = d - e;
      for (int s = 0; s < static_cast<int>(basis[sd].size()); ++s) {
        std::map<int, Rational> row;
        for (const auto& [w, c] : rel.terms()) {
          SparseVec v{{s, Rational(1)}};
          int cur = sd;
          for (size_t i = 0; i + 1 < w.size(); ++i) {
            v = times(v, cur, w[i]);
            cur += alpha[w[i]].degree;
            if (v.empty()) break;
          }
          int last = w.back();
          for (const auto& [b, cb] : v) row[col_of.at({last, b})] += c * cb;
        }
        ech.insert(sparse_from_map(row));
      }
    }
    ech.make_reduced();

    std::vector<int> new_index(cols.size(), -1);
    for (int i = 0; i < static_cast<int>(cols.size()); ++i)
      if (!ech.is_pivot(i)) {
        new_index[i] = static_cast<int>(basis[d].size());
        basis[d].push_back(cols[i].w);
      }
    for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
      const Col& c = cols[i];
      int src = d - alpha[c.x].degree;
      auto& slot = rmul[src][c.b];
      if (slot.empty()) slot.resize(n);
      SparseVec out;
      if (new_index[i] >= 0) {
        out.emplace_back(new_index[i], Rational(1));
      } else {
        const SparseVec& row = ech.rows().at(i);
        for (size_t k = 1; k < row.size(); ++k) out.emplace_back(new_index[row[k].first], -row[k].second);
        std::sort(out.begin(), out.end(),
                  [](const auto& p, const auto& q) { return p.first < q.first; });
      }
      slot[c.x] = std::move(out);
    }
    // words of degree d whose right-multiplications go past maxdeg still need slots
    rmul[d].resize(basis[d].size());
    for (auto& slot : rmul[d])
      if (slot.empty()) slot.resize(n);
  }
};

}  // namespace

NcQuotient quotient_nc(const Alphabet& alphabet, const std::vector<NcElement>& relations,
                       int maxdeg, const CancelCheck& cancel) {
  for (const auto& g : alphabet)
    if (g.degree < 1) throw std::invalid_argument("generator degrees must be positive");
  std::vector<std::pair<NcElement, int>> rels;
  for (const auto& r : relations) {
    int e = r.homogeneous_degree(alphabet);
    if (e < 0) continue;
    if (e < 2) throw std::invalid_argument("relations must have degree >= 2");
    rels.emplace_back(r, e);
  }
  Builder b(alphabet, std::max(maxdeg, 0));
  b.rmul[0].assign(1, std::vector<SparseVec>(alphabet.size()));
  NcQuotient q;
  q.dims.push_back(1);
  for (int d = 1; d <= maxdeg; ++d) {
    if (cancel && cancel()) throw Cancelled();
    b.build_degree(d, rels);
    q.dims.push_back(static_cast<long>(b.basis[d].size()));
  }
  q.standard_words = std::move(b.basis);
  return q;
}

std::vector<long> graded_dim_quotient_nc(const Alphabet& alphabet,
                                         const std::vector<NcElement>& relations, int maxdeg,
                                         const CancelCheck& cancel) {
  return quotient_nc(alphabet, relations, maxdeg, cancel).dims;
}

}  // namespace x3top
