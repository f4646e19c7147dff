#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "weilkit/gda.hpp"
#include "weilkit/rational.hpp"

namespace weilkit {

// Finite group given by a multiplication table. Axioms checked exhaustively
// at construction.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup trivial();

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& name(int e) const { return elements_[static_cast<size_t>(e)]; }
  int index_of(const std::string& name) const;
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

// Finite groupoid with explicit source/target/compose/identity/inverse
// tables. Arrows compose like functions: compose(g1, g2) is defined when
// src(g1) == tgt(g2).
class FiniteGroupoid {
 public:
  struct Arrow {
    std::string name;
    int src;
    int tgt;
  };

  FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                 std::map<std::pair<int, int>, int> compose, std::vector<int> identity,
                 std::vector<int> inverse);

  static FiniteGroupoid from_group(const FiniteGroup& g);
  static FiniteGroupoid pair_groupoid(int k);
  static FiniteGroupoid discrete(int k);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& object_name(int x) const { return objects_[static_cast<size_t>(x)]; }
  int object_index(const std::string& name) const;
  const Arrow& arrow(int g) const { return arrows_[static_cast<size_t>(g)]; }
  int arrow_index(const std::string& name) const;
  int src(int g) const { return arrows_[static_cast<size_t>(g)].src; }
  int tgt(int g) const { return arrows_[static_cast<size_t>(g)].tgt; }
  bool composable(int g1, int g2) const { return src(g1) == tgt(g2); }
  int compose(int g1, int g2) const;  // g1 after g2
  int identity(int x) const { return identity_[static_cast<size_t>(x)]; }
  int inverse(int g) const { return inverse_[static_cast<size_t>(g)]; }

  CheckReport validate() const;

  // Objects of the connected component of x.
  std::vector<int> component_of(int x) const;
  // Arrows with src == tgt == x.
  std::vector<int> vertex_group(int x) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::map<std::pair<int, int>, int> compose_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

// The nerve: level n is the set of composable n-tuples, level 0 the objects.
// Tuples are stored in a fixed enumeration order per level.
class Nerve {
 public:
  Nerve(const FiniteGroupoid& g, int max_level);

  const FiniteGroupoid& groupoid() const { return *g_; }
  int max_level() const { return max_level_; }
  int size(int n) const { return static_cast<int>(levels_[static_cast<size_t>(n)].size()); }
  const std::vector<int>& tuple(int n, int idx) const {
    return levels_[static_cast<size_t>(n)][static_cast<size_t>(idx)];
  }
  int index_of(int n, const std::vector<int>& tuple) const;

  // face maps Gamma_n -> Gamma_{n-1} and degeneracies Gamma_n -> Gamma_{n+1}
  std::vector<int> face(int i, int n, const std::vector<int>& tuple) const;
  std::vector<int> degeneracy(int i, int n, const std::vector<int>& tuple) const;

  CheckReport validate_simplicial_identities() const;

 private:
  const FiniteGroupoid* g_;
  int max_level_;
  std::vector<std::vector<std::vector<int>>> levels_;
  std::vector<std::map<std::vector<int>, int>> index_;
};

// Rational cochain on one nerve level, in the level's enumeration order.
using Cochain = std::vector<Rational>;

Cochain coboundary(const Nerve& nv, int n, const Cochain& c);

// Cup product of cochains via the leading/trailing tuple projections.
Cochain cochain_cup(const Nerve& nv, int m, const Cochain& c1, int n, const Cochain& c2);

// dim H^k of the groupoid cochain complex over the rationals.
int groupoid_cohomology_dim(const Nerve& nv, int k);

// Principal bundle over a finite groupoid in trivialized cocycle form: a
// functor psi from the groupoid to the structure group.
struct BundleCocycle {
  const FiniteGroupoid* base = nullptr;
  const FiniteGroup* group = nullptr;
  std::vector<int> psi;  // per arrow

  CheckReport validate() const;
};

BundleCocycle trivial_bundle(const FiniteGroupoid& base, const FiniteGroup& group);

// Transformation groupoid Q over the total space P = objects x G, with the
// action gamma . (x, g) = (tgt gamma, psi(gamma) g).
struct TransformationGroupoid {
  FiniteGroupoid q;
  // bookkeeping: q-object index -> (base object, group element)
  std::vector<std::pair<int, int>> point;
  // q-arrow index -> (base arrow, base point index)
  std::vector<std::pair<int, int>> arrow_data;

  int project_arrow(int qa) const { return arrow_data[static_cast<size_t>(qa)].first; }
};

TransformationGroupoid transformation_groupoid(const BundleCocycle& b);

// Verifies that the projection is a strict homomorphism and that the right
// G-action on Q commutes with the structure maps.
CheckReport validate_transformation_groupoid(const TransformationGroupoid& t,
                                             const BundleCocycle& b);

// Generalized homomorphism (bibundle) from gprime to g: finite Z with
// momentum maps and commuting actions, principal on the g side.
struct GeneralizedHom {
  const FiniteGroupoid* gprime = nullptr;
  const FiniteGroupoid* g = nullptr;
  int z_size = 0;
  std::vector<int> tau;    // Z -> objects of gprime
  std::vector<int> sigma;  // Z -> objects of g
  // left action of gprime: defined when src(arrow) == tau(z)
  std::map<std::pair<int, int>, int> left;  // (arrow of gprime, z) -> z
  // right action of g: defined when sigma(z) == tgt(arrow)
  std::map<std::pair<int, int>, int> right;  // (z, arrow of g) -> z

  CheckReport validate() const;
  int act_left(int arrow, int z) const;
  int act_right(int z, int arrow) const;
};

GeneralizedHom identity_generalized_hom(const FiniteGroupoid& g);

// Z_f for a strict homomorphism f (object map + arrow map).
GeneralizedHom from_strict_hom(const FiniteGroupoid& gprime, const FiniteGroupoid& g,
                               const std::vector<int>& object_map,
                               const std::vector<int>& arrow_map);

// Composite generalized homomorphism (phi2 . phi1 when phi1: G'' -> G' and
// phi2: G' -> G): the quotient of the fibered product by the middle action.
GeneralizedHom compose_generalized(const GeneralizedHom& phi1, const GeneralizedHom& phi2);

// Pull-back bundle in cocycle form after choosing per-object base points.
BundleCocycle pullback_bundle(const GeneralizedHom& phi, const BundleCocycle& b);

struct PullbackGroupoid {
  FiniteGroupoid groupoid;  // objects are the z's, arrows the triples
  std::vector<std::tuple<int, int, int>> arrow_data;  // (z1, gprime arrow, z2)
  // strict homomorphisms
  std::vector<int> tau_arrow;    // triple -> arrow of gprime
  std::vector<int> sigma_arrow;  // triple -> arrow of g
};

PullbackGroupoid pullback_groupoid(const GeneralizedHom& phi);

// Holonomy of a (flat) bundle: the cocycle evaluated on loops.
int holonomy(const BundleCocycle& b, int object, int loop_arrow);

struct HolonomyRep {
  std::vector<int> loops;   // arrow indices of the vertex group
  std::vector<int> images;  // psi values
};

HolonomyRep holonomy_rep(const BundleCocycle& b, int object);

// Bundle isomorphism over the identity: exists eta with
// psi2 = eta(tgt) psi1 eta(src)^{-1}.
bool bundles_isomorphic(const BundleCocycle& b1, const BundleCocycle& b2);

}  // namespace weilkit
