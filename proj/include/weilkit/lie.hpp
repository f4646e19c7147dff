#pragma once

#include <string>
#include <vector>

#include "weilkit/rational.hpp"

namespace weilkit {

// Finite-dimensional Lie algebra given by structure constants:
// [X_j, X_k] = sum_i f[i][j][k] X_i. Antisymmetry and the Jacobi identity
// are checked at construction.
class LieAlgebraData {
 public:
  LieAlgebraData(int dim, std::vector<std::vector<std::vector<Rational>>> f,
                 std::string name = "");

  static LieAlgebraData abelian(int dim, std::string name = "");
  static LieAlgebraData so3();
  static LieAlgebraData sl2();
  static LieAlgebraData heisenberg3();

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Rational& f(int i, int j, int k) const {
    return f_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  }
  bool is_abelian() const;

 private:
  int dim_;
  std::vector<std::vector<std::vector<Rational>>> f_;
  std::string name_;
};

}  // namespace weilkit
