#pragma once

#include "x3top/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace x3top {

// Sparse vector: entries sorted by strictly increasing index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sparse_from_map(const std::map<int, Rational>& m);
// a + f*b
SparseVec axpy(const SparseVec& a, const Rational& f, const SparseVec& b);

// Incremental row echelon form over Q. Rows are kept monic at their
// leading (smallest) column.
class SparseEchelon {
 public:
  // Reduces v against the current pivots; returns the remainder (zero iff v in span).
  SparseVec reduce(SparseVec v) const;
  // Returns true when v was independent (and is now part of the basis).
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return rows_.count(col) > 0; }
  // Back-substitutes so no row has a nonzero entry at another row's pivot.
  void make_reduced();
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;  // pivot column -> row
  bool reduced_ = true;
};

// Dense reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(MatQ& m);
// Basis of {x : m x = 0}, one vector per column of the result.
MatQ nullspace(const MatQ& m);
int rank(const MatQ& m);

}  // namespace x3top
