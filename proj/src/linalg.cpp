#include "weilkit/linalg.hpp"

#include <stdexcept>

namespace weilkit {

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseMatrix::set: index out of range");
  if (v.is_zero()) entries_.erase({r, c});
  else entries_[{r, c}] = v;
}

void SparseMatrix::add(int r, int c, const Rational& v) { set(r, c, get(r, c) + v); }

Rational SparseMatrix::get(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

namespace {

// Row-major dense elimination working copy. The matrices that arise here are
// degree-window operators: small enough that dense Gauss over GMP rationals
// is the simplest exact choice.
struct Eliminated {
  std::vector<std::vector<Rational>> rows;   // reduced row echelon form
  std::vector<int> pivot_col;                // per reduced row
  std::vector<int> pivot_row_of_col;         // -1 when the column is free
};

Eliminated eliminate(const SparseMatrix& m, const std::vector<Rational>* rhs,
                     std::vector<Rational>* rhs_out) {
  int R = m.rows(), C = m.cols();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(R),
                                       std::vector<Rational>(static_cast<size_t>(C)));
  for (const auto& [rc, v] : m.entries()) a[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
  std::vector<Rational> b;
  if (rhs) b = *rhs;

  Eliminated out;
  out.pivot_row_of_col.assign(static_cast<size_t>(C), -1);
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int r = row; r < R; ++r)
      if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(row)]);
    if (rhs) std::swap(b[static_cast<size_t>(piv)], b[static_cast<size_t>(row)]);
    Rational inv = Rational(1) / a[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int c = col; c < C; ++c) a[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
    if (rhs) b[static_cast<size_t>(row)] *= inv;
    for (int r = 0; r < R; ++r) {
      if (r == row) continue;
      Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int c = col; c < C; ++c)
        a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * a[static_cast<size_t>(row)][static_cast<size_t>(c)];
      if (rhs) b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(row)];
    }
    out.pivot_col.push_back(col);
    out.pivot_row_of_col[static_cast<size_t>(col)] = row;
    ++row;
  }
  out.rows = std::move(a);
  if (rhs_out) *rhs_out = std::move(b);
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> kernel(const SparseMatrix& m) {
  Eliminated e = eliminate(m, nullptr, nullptr);
  int C = m.cols();
  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < C; ++free_col) {
    if (e.pivot_row_of_col[static_cast<size_t>(free_col)] >= 0) continue;
    std::vector<Rational> v(static_cast<size_t>(C));
    v[static_cast<size_t>(free_col)] = Rational(1);
    for (size_t pr = 0; pr < e.pivot_col.size(); ++pr) {
      int pc = e.pivot_col[pr];
      v[static_cast<size_t>(pc)] = -e.rows[pr][static_cast<size_t>(free_col)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMatrix& m) {
  Eliminated e = eliminate(m, nullptr, nullptr);
  return static_cast<int>(e.pivot_col.size());
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m,
                                           const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("solve: rhs length does not match row count");
  std::vector<Rational> b;
  Eliminated e = eliminate(m, &rhs, &b);
  int R = m.rows(), C = m.cols();
  int nrows = static_cast<int>(e.pivot_col.size());
  for (int r = nrows; r < R; ++r)
    if (!b[static_cast<size_t>(r)].is_zero()) return std::nullopt;
  std::vector<Rational> x(static_cast<size_t>(C));
  for (size_t pr = 0; pr < e.pivot_col.size(); ++pr)
    x[static_cast<size_t>(e.pivot_col[pr])] = b[pr];
  return x;
}

std::vector<Rational> matvec(const SparseMatrix& m, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != m.cols())
    throw std::invalid_argument("matvec: vector length does not match column count");
  std::vector<Rational> y(static_cast<size_t>(m.rows()));
  for (const auto& [rc, v] : m.entries())
    y[static_cast<size_t>(rc.first)] += v * x[static_cast<size_t>(rc.second)];
  return y;
}

}  // namespace weilkit
