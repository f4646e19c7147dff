#pragma once

#include "weilkit/gda.hpp"

namespace weilkit {

// W(g) = S(g*) (x) Lambda(g*) as a finitely presented G-differential algebra:
// generators th<i> (1 (x) xi^i, degree 1) and om<i> (xi^i (x) 1, degree 2),
//   d th_i = om_i - 1/2 sum f^i_{jk} th_j th_k
//   d om_i = sum f^i_{jk} om_j th_k
//   i_{X_j} th_i = delta_ij,  i_{X_j} om_i = 0.
GDAlgebra weil_algebra(const LieAlgebraData& lie);

// eta = sum (1 (x) xi^i) (x) X_i, the canonical connection of W(g).
GVector canonical_connection(const GDAlgebra& weil);

// Degree-1 generator names of W(g) in basis order.
std::vector<std::string> weil_theta_names(const LieAlgebraData& lie);
std::vector<std::string> weil_omega_names(const LieAlgebraData& lie);

// Invariant polynomial f in the dual-basis symbols xi^1..xi^dim, homogeneous
// of polynomial degree k. Stored over an auxiliary table whose generators all
// have degree 2 so that substitution of curvature components is unambiguous.
// Coadjoint invariance L_{X_j} f = 0 is verified at construction.
class InvariantPolynomial {
 public:
  InvariantPolynomial(const LieAlgebraData& lie, GradedElement poly);

  // terms given as (exponent vector, coefficient)
  static InvariantPolynomial from_exponents(
      const LieAlgebraData& lie,
      const std::vector<std::pair<std::vector<int>, Rational>>& terms);

  const LieAlgebraData& lie() const { return lie_; }
  const GradedElement& poly() const { return poly_; }
  const TablePtr& table() const { return table_; }
  int polynomial_degree() const;  // degree in the xi symbols

 private:
  LieAlgebraData lie_;
  TablePtr table_;
  GradedElement poly_;
};

// Auxiliary symbol table for invariant polynomials of a given Lie algebra.
TablePtr invariant_symbol_table(const LieAlgebraData& lie);

// f(omega): substitutes xi^i -> omega_i and expands. Components must be of
// even degree.
GradedElement evaluate_invariant(const InvariantPolynomial& f, const GVector& omega);

// Product of invariant polynomials (for the multiplicativity checks).
InvariantPolynomial multiply(const InvariantPolynomial& a, const InvariantPolynomial& b);

}  // namespace weilkit
