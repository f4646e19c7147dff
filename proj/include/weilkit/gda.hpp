#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weilkit/algebra.hpp"
#include "weilkit/lie.hpp"

namespace weilkit {

// One infinitesimal action: a Lie algebra together with per-basis-index
// contraction images (degree -1 derivations). The Lie derivative is always
// the Cartan composite i d + d i.
struct LieAction {
  LieAlgebraData lie;
  std::vector<std::vector<GradedElement>> contraction;  // [basis j][generator]
};

// Finitely presented G-differential algebra: generator table, differential
// images, and one or more commuting actions (action 0 is the principal one;
// a second slot carries the H-structure in the equivariant layer).
class GDAlgebra {
 public:
  GDAlgebra(TablePtr table, std::vector<GradedElement> d_images,
            std::vector<LieAction> actions);

  const TablePtr& table() const { return table_; }
  const AlgebraTable& tbl() const { return *table_; }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  const LieAction& action(int a = 0) const { return actions_[static_cast<size_t>(a)]; }
  const LieAlgebraData& lie(int a = 0) const { return action(a).lie; }
  const std::vector<GradedElement>& d_images() const { return d_; }

  GradedElement zero() const { return GradedElement::zero(table_); }
  GradedElement unit() const { return GradedElement::unit(table_); }
  GradedElement gen(std::string_view name) const { return GradedElement::generator(table_, name); }
  GradedElement gen(int i) const { return GradedElement::generator(table_, i); }

  GradedElement d(const GradedElement& x) const;
  GradedElement contract(int action, int j, const GradedElement& x) const;
  GradedElement lie_derivative(int action, int j, const GradedElement& x) const;

 private:
  TablePtr table_;
  std::vector<GradedElement> d_;
  std::vector<LieAction> actions_;
};

// Element of A tensor g: one component per basis vector of g.
struct GVector {
  std::vector<GradedElement> comps;

  int dim() const { return static_cast<int>(comps.size()); }
  GVector& operator+=(const GVector& o);
  GVector& operator-=(const GVector& o);
  friend GVector operator+(GVector a, const GVector& b) { return a += b; }
  friend GVector operator-(GVector a, const GVector& b) { return a -= b; }
  friend bool operator==(const GVector&, const GVector&) = default;
};

// Algebra homomorphism between two presentations, given on generators.
struct AlgebraHom {
  TablePtr src;
  TablePtr dst;
  std::vector<GradedElement> images;  // indexed by src generator

  GradedElement operator()(const GradedElement& x) const;
  GVector operator()(const GVector& v) const;
};

AlgebraHom identity_hom(const TablePtr& t);
AlgebraHom compose(const AlgebraHom& outer, const AlgebraHom& inner);

struct CheckReport {
  bool ok = true;
  std::string detail;  // first counterexample when not ok
  explicit operator bool() const { return ok; }
};

// Returns i_{X_j} d x + d i_{X_j} x for the principal action.
GradedElement lie_derivative(const GDAlgebra& alg, int j, const GradedElement& x);

// Connection test per the algebraic definition: i_{X_j} theta_i = delta_ij
// and infinitesimal G-invariance L_{X_j} theta_i + sum_k f^i_{jk} theta_k = 0.
CheckReport is_connection(const GDAlgebra& alg, const GVector& theta, int action = 0);

// Componentwise curvature Omega_i = d theta_i + 1/2 sum_{jk} f^i_{jk} theta_j theta_k.
GVector curvature(const GDAlgebra& alg, const GVector& theta, int action = 0);

// Basis of the joint kernel of all contractions and Lie derivatives on the
// monomial window of the given degree.
std::vector<GradedElement> basic_subspace(const GDAlgebra& alg, int degree, int action = 0);

bool is_basic(const GDAlgebra& alg, const GradedElement& x, int action = 0);

// d^2 = 0, contraction anticommutation, and closure of the induced action,
// checked on every monomial up to degree_bound.
CheckReport validate_presentation(const GDAlgebra& alg, int degree_bound = 8);

// Graded tensor product a (x) b. Generator names are prefixed by slot
// ("0." / "1.") and the slot becomes the leading tag component, so the
// Quillen sign rule is carried by the ambient Koszul normal form. The
// resulting actions pair action k of a with action k of b; factors may
// declare fewer actions, the missing contraction is zero.
GDAlgebra tensor_gda(const GDAlgebra& a, const GDAlgebra& b);

// Embedding homomorphisms onto the two tensor slots of tensor_gda(a, b).
AlgebraHom tensor_embed_left(const GDAlgebra& a, const GDAlgebra& b, const GDAlgebra& ab);
AlgebraHom tensor_embed_right(const GDAlgebra& a, const GDAlgebra& b, const GDAlgebra& ab);

// Same presentation with the action list replaced (used to view an algebra
// as carrying a trivial action of a second Lie algebra).
GDAlgebra with_actions(const GDAlgebra& a, std::vector<LieAction> actions);

LieAction zero_action(const LieAlgebraData& lie, const TablePtr& table);

// Identification of two structurally equal presentations by generator name.
AlgebraHom name_matching_hom(const TablePtr& src, const TablePtr& dst);

}  // namespace weilkit
