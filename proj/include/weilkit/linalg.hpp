#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weilkit/rational.hpp"

namespace weilkit {

// Sparse exact-rational matrix. Stored zeros are never kept.
class SparseMatrix {
 public:
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);
  Rational get(int r, int c) const;
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

 private:
  int rows_, cols_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Basis of the null space, deterministic given the column order: one vector
// per free column, in increasing column order, with a 1 in the free slot.
std::vector<std::vector<Rational>> kernel(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// A particular solution of m x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           const std::vector<Rational>& rhs);

std::vector<Rational> matvec(const SparseMatrix& m, const std::vector<Rational>& x);

}  // namespace weilkit
