#include "weilkit/lie.hpp"

#include <sstream>
#include <stdexcept>

#include "weilkit/algebra.hpp"

namespace weilkit {

LieAlgebraData::LieAlgebraData(int dim, std::vector<std::vector<std::vector<Rational>>> f,
                               std::string name)
    : dim_(dim), f_(std::move(f)), name_(std::move(name)) {
  if (dim_ < 0) throw PresentationError("Lie algebra dimension must be non-negative");
  auto at = [&](int i, int j, int k) -> const Rational& {
    return f_[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  };
  if (static_cast<int>(f_.size()) != dim_)
    throw PresentationError("structure constant array has wrong shape");
  for (const auto& plane : f_) {
    if (static_cast<int>(plane.size()) != dim_)
      throw PresentationError("structure constant array has wrong shape");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != dim_)
        throw PresentationError("structure constant array has wrong shape");
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (at(i, j, k) != -at(i, k, j)) {
          std::ostringstream os;
          os << "structure constants not antisymmetric at (i,j,k)=(" << i + 1 << ","
             << j + 1 << "," << k + 1 << ")";
          throw PresentationError(os.str());
        }
  // sum_m f^m_{jk} f^i_{ml} + f^m_{kl} f^i_{mj} + f^m_{lj} f^i_{mk} = 0
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          Rational s(0);
          for (int m = 0; m < dim_; ++m)
            s += at(m, j, k) * at(i, m, l) + at(m, k, l) * at(i, m, j) +
                 at(m, l, j) * at(i, m, k);
          if (!s.is_zero()) {
            std::ostringstream os;
            os << "Jacobi identity violated at (i,j,k,l)=(" << i + 1 << "," << j + 1
               << "," << k + 1 << "," << l + 1 << ")";
            throw PresentationError(os.str());
          }
        }
}

bool LieAlgebraData::is_abelian() const {
  for (const auto& plane : f_)
    for (const auto& row : plane)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
  return true;
}

namespace {
std::vector<std::vector<std::vector<Rational>>> zeros(int dim) {
  return std::vector(static_cast<size_t>(dim),
                     std::vector(static_cast<size_t>(dim),
                                 std::vector<Rational>(static_cast<size_t>(dim))));
}
}  // namespace

LieAlgebraData LieAlgebraData::abelian(int dim, std::string name) {
  if (name.empty()) name = dim == 1 ? "u1" : "abelian" + std::to_string(dim);
  return LieAlgebraData(dim, zeros(dim), std::move(name));
}

LieAlgebraData LieAlgebraData::so3() {
  auto f = zeros(3);
  // f^i_{jk} = epsilon_{ijk}
  auto set = [&](int i, int j, int k, long v) {
    f[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = Rational(v);
  };
  set(0, 1, 2, 1); set(0, 2, 1, -1);
  set(1, 2, 0, 1); set(1, 0, 2, -1);
  set(2, 0, 1, 1); set(2, 1, 0, -1);
  return LieAlgebraData(3, std::move(f), "so3");
}

LieAlgebraData LieAlgebraData::sl2() {
  // basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H
  auto f = zeros(3);
  auto set = [&](int i, int j, int k, long v) {
    f[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = Rational(v);
  };
  set(1, 0, 1, 2); set(1, 1, 0, -2);
  set(2, 0, 2, -2); set(2, 2, 0, 2);
  set(0, 1, 2, 1); set(0, 2, 1, -1);
  return LieAlgebraData(3, std::move(f), "sl2");
}

LieAlgebraData LieAlgebraData::heisenberg3() {
  // [X_1, X_2] = X_3
  auto f = zeros(3);
  f[2][0][1] = Rational(1);
  f[2][1][0] = Rational(-1);
  return LieAlgebraData(3, std::move(f), "heisenberg3");
}

}  // namespace weilkit
