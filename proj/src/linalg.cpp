#include "x3top/linalg.hpp"

namespace x3top {

SparseVec sparse_from_map(const std::map<int, Rational>& m) {
  SparseVec v;
  v.reserve(m.size());
  for (const auto& [k, q] : m)
    if (q != 0) v.emplace_back(k, q);
  return v;
}

SparseVec axpy(const SparseVec& a, const Rational& f, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + f * b[j].second;
      if (s != 0) out.emplace_back(a[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rational f = -v[pos].second;
    // entries before pos are untouched since the pivot row starts at v[pos].first
    SparseVec tail(v.begin() + pos, v.end());
    tail = axpy(tail, f, it->second);
    v.resize(pos);
    v.insert(v.end(), tail.begin(), tail.end());
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational lead = v.front().second;
  if (lead != 1)
    for (auto& e : v) e.second /= lead;
  int col = v.front().first;
  rows_.emplace(col, std::move(v));
  reduced_ = false;
  return true;
}

void SparseEchelon::make_reduced() {
  if (reduced_) return;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec& row = it->second;
    size_t pos = 1;
    while (pos < row.size()) {
      auto p = rows_.find(row[pos].first);
      if (p == rows_.end()) {
        ++pos;
        continue;
      }
      Rational f = -row[pos].second;
      SparseVec tail(row.begin() + pos, row.end());
      tail = axpy(tail, f, p->second);
      row.resize(pos);
      row.insert(row.end(), tail.begin(), tail.end());
    }
  }
  reduced_ = true;
}

std::vector<int> rref(MatQ& m) {
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.row(p).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

MatQ nullspace(const MatQ& m) {
  MatQ a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < a.cols(); ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  MatQ ns = MatQ::Zero(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    ns(free_cols[k], k) = 1;
    for (size_t i = 0; i < piv.size(); ++i) ns(piv[i], k) = -a(i, free_cols[k]);
  }
  return ns;
}

int rank(const MatQ& m) {
  MatQ a = m;
  return static_cast<int>(rref(a).size());
}

}  // namespace x3top
