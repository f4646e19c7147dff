#pragma once

#include "weilkit/simplicial.hpp"

namespace weilkit {

// Polynomial forms on the standard simplex in the affine chart: generators
// t_1..t_m (degree 0) and dt_1..dt_m (degree 1); t_0 = 1 - sum t_i and
// dt_0 = -sum dt_i are eliminated. d acts by t_i -> dt_i.
TablePtr simplex_form_table(int m);
std::string simplex_t_name(int i);                   // 1-based
std::string simplex_dt_name(int i);
GradedElement simplex_t(const TablePtr& t, int i);   // 1-based
GradedElement simplex_dt(const TablePtr& t, int i);  // 1-based
GradedElement simplex_d(const GradedElement& x);     // derivation t -> dt

// Integral over the m-simplex of the top-degree part: only monomials carrying
// the full volume form dt_1...dt_m contribute,
//   integral of t_1^{a_1}...t_m^{a_m} dt_1...dt_m = a_1!...a_m!/(m+|a|)!.
// Mixed simplex-algebra monomials keep their algebra part as a factor.
GradedElement integrate_simplex_top(const GradedElement& x, int m, const TablePtr& rest_table);

// The fat realization of a simplicial algebra: per-level algebras
// Omega(Delta_n) (x) A_n plus the pullback and face machinery relating
// adjacent levels.
class FatRealization {
 public:
  explicit FatRealization(const SimplicialGDA* host);

  const SimplicialGDA& host() const { return *host_; }

  // Omega(Delta_m) (x) A_n; the fat level algebra is algebra(n, n). Its
  // differential is the tensor differential and its contractions vanish on
  // the simplex factor.
  const GDAlgebra& algebra(int m, int n) const;
  const GDAlgebra& level(int n) const { return algebra(n, n); }

  AlgebraHom embed_level(int m, int n) const;        // A_n -> Omega(Delta_m) (x) A_n

  // (eps~_i^{n*} (x) id): level n -> algebra(n-1, n), barycentric coordinate
  // i set to zero.
  AlgebraHom face_pullback(int i, int n) const;
  // (eta~_i^{n-1*} (x) id): algebra(n-1, n-1) -> algebra(n, n-1), adjacent
  // coordinates summed.
  AlgebraHom degeneracy_pullback(int i, int n) const;
  // (id (x) eps_i^n): algebra(n-1, n-1) -> algebra(n-1, n)
  AlgebraHom algebra_face(int i, int n) const;
  // (id (x) eta_i^{n-1}): algebra(n, n) -> algebra(n, n-1)
  AlgebraHom algebra_degeneracy(int i, int n) const;

 private:
  const SimplicialGDA* host_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<GDAlgebra>> algebras_;
};

// Truncated sequence (k_n), k_n in Omega(Delta_n) (x) A_n, n <= max_level.
struct FatElement {
  const FatRealization* fat = nullptr;
  int max_level = 0;
  std::map<int, GradedElement> entries;  // zero entries omitted

  GradedElement at(int n) const;
  void set(int n, GradedElement x);

  FatElement& operator+=(const FatElement& o);
  FatElement& operator-=(const FatElement& o);
  friend FatElement operator+(FatElement a, const FatElement& b) { return a += b; }
  friend FatElement operator-(FatElement a, const FatElement& b) { return a -= b; }
  friend FatElement operator*(const FatElement& a, const FatElement& b);
  FatElement& operator*=(const Rational& c);
  friend bool operator==(const FatElement& a, const FatElement& b) {
    return a.entries == b.entries;
  }
};

FatElement fat_zero(const FatRealization& fat, int max_level);
FatElement fat_unit(const FatRealization& fat, int max_level);

// Constant family built from a level-0 element x: level n carries
// sum_i t_i (x) p_i^n(x); satisfies the compatibility conditions.
FatElement fat_lift(const FatRealization& fat, const GradedElement& x0, int max_level);

// Compatibility of the family under both barycentric pullbacks, reporting
// the first violated (level, index).
CheckReport check_compatibility(const FatElement& x);

// Levelwise total differential d_simplex + d_algebra.
FatElement fat_d(const FatElement& x);

// Levelwise contraction of the named action.
FatElement fat_contract(const FatElement& x, int action, int j);
FatElement fat_lie_derivative(const FatElement& x, int action, int j);

// The integration map: level-n entry integrates the simplex-top part.
BigradedElement integrate(const FatElement& x);

// g-valued fat elements: the lifted connection and its curvature.
struct FatGVector {
  std::vector<FatElement> comps;
};

FatGVector lift_connection(const FatRealization& fat, const GVector& theta0, int max_level);

// Omega~ = D theta~ + 1/2 [theta~, theta~], componentwise over the action's
// structure constants.
FatGVector fat_curvature(const FatRealization& fat, const FatGVector& theta,
                         const LieAlgebraData& lie);

// f(Omega~): substitute the symbols by the curvature components.
FatElement evaluate_invariant_fat(const class InvariantPolynomial& f, const FatGVector& omega,
                                  const FatRealization& fat, int max_level);

}  // namespace weilkit
