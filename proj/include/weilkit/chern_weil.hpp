#pragma once

#include "weilkit/fat.hpp"
#include "weilkit/weil.hpp"

namespace weilkit {

// A connection one-form on the level-0 algebra of a simplicial host,
// ignoring the simplicial structure.
struct PseudoConnection {
  const SimplicialGDA* host = nullptr;
  GVector theta;   // degree-1 components at level 0
  int action = 0;  // which action the connection belongs to

  const LieAlgebraData& lie() const { return host->level(0).lie(action); }
};

// Validates the level-0 connection axioms.
CheckReport validate_pseudo_connection(const PseudoConnection& pc);

// Degree-2 pair (del theta at level 1, Omega at level 0).
struct TotalCurvature {
  GVector del_theta;
  GVector omega;
};

TotalCurvature total_curvature(const PseudoConnection& pc);

// g-valued bigraded elements and the degree -1 bracket
// [a (x) X, b (x) Y] = (a v b) (x) [X, Y].
using GBigraded = std::vector<BigradedElement>;

GBigraded g_bigraded_from_total(const PseudoConnection& pc, const TotalCurvature& tc);
GBigraded g_bracket(const SimplicialGDA& s, const LieAlgebraData& lie, const GBigraded& a,
                    const GBigraded& b);
GBigraded g_delta(const SimplicialGDA& s, const GBigraded& a);

// delta Omega_total = 1/2 ([Omega_total, theta] - [theta, Omega_total]),
// exact equality; the report carries the residual on failure.
CheckReport check_bianchi(const PseudoConnection& pc);

// First construction: lift the connection to the fat realization, evaluate
// f on its curvature, integrate.
BigradedElement z_theta_fat(const PseudoConnection& pc, const InvariantPolynomial& f);

// Second construction: push the universal cocycle of the simplicial Weil
// algebra through the homomorphism c built from the p_i^n images of theta.
BigradedElement z_theta_simplicial(const PseudoConnection& pc, const InvariantPolynomial& f);

// The levelwise homomorphism c : W(g)_bullet -> host of the second
// construction (exposed for the structural tests).
SimplicialHom chern_weil_hom(const TensorPowerSGDA& weil_tower, const PseudoConnection& pc,
                             int max_level);

// Every contraction and Lie derivative kills the cocycle, levelwise.
bool is_basic_levelwise(const SimplicialGDA& s, const BigradedElement& x, int action = 0);

// z_{phi(theta)} = phi . z_theta, exact; phi must cover the support levels.
CheckReport check_functoriality(const SimplicialHom& phi, const PseudoConnection& pc,
                                const InvariantPolynomial& f);

struct IndependenceWitness {
  BigradedElement primitive;  // delta primitive = z1 - z2
  BigradedElement difference;
};

// Exhibits a delta-primitive for z_{theta1}(f) - z_{theta2}(f) inside the
// stated window; raises WindowError("window-incomplete") when the window
// cannot represent one.
IndependenceWitness certify_connection_independence(const PseudoConnection& pc1,
                                                    const PseudoConnection& pc2,
                                                    const InvariantPolynomial& f,
                                                    int level_bound, int degree_bound);

// The curvature of the lifted connection at one level, assembled through the
// difference-variable expansion (ds_i, theta_{i+1}-theta_i, p_i^n images of
// Omega); an independent route to the same element as fat_curvature.
GVector curvature_via_differences(const FatRealization& fat, const PseudoConnection& pc,
                                  int level);

// H-basic connection on W(h) (x) a built from an H-invariant G-connection:
// Xi = sum (1 (x) xi^i) (x) L_i + 1 (x) theta with L_i = -i^H_{Y_i} theta.
struct BottTuData {
  GDAlgebra algebra;      // W(h) (x) a, actions: [0] = G, [1] = H
  GVector xi;             // the connection, G-valued
  AlgebraHom embed_weil;  // W(h) -> algebra
  AlgebraHom embed_a;     // a -> algebra
};

BottTuData bott_tu_connection(const LieAlgebraData& h, const GDAlgebra& a, const GVector& theta);

// The algebraic legs of the comparison map K: apply the fat Chern-Weil
// homomorphism of W(h) (canonical connection) tensored with the identity,
// then integrate. Domain: W(h) (x) a; codomain: the levelwise tensor tower
// W(h)_bullet (x) a.
class WeilToSimplicial {
 public:
  WeilToSimplicial(const LieAlgebraData& h, const GDAlgebra& a, int max_level);

  const SimplicialGDA& host() const { return *host_; }
  const GDAlgebra& domain() const { return domain_; }

  BigradedElement map(const GradedElement& x) const;        // K
  GradedElement domain_d(const GradedElement& x) const;     // tensor differential
  bool domain_h_basic(const GradedElement& x) const;
  bool image_h_basic(const BigradedElement& x) const;

 private:
  LieAlgebraData h_;
  GDAlgebra weil_h_;                                   // W(h) with [zero G, H] actions
  GDAlgebra domain_;                                   // W(h) (x) a
  std::shared_ptr<TensorPowerSGDA> weil_tower_;        // W(h)_bullet
  std::shared_ptr<TensorWithConstantSGDA> host_;       // W(h)_bullet (x) a
  std::unique_ptr<FatRealization> fat_;
  int max_level_;
  std::vector<FatElement> gen_images_;                 // per domain generator
};

}  // namespace weilkit
