#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "weilkit/gda.hpp"

namespace weilkit {

// Raised when a degree/level window is too small to represent the answer.
// Callers get an explicit failure, never a silently truncated result.
struct WindowError : std::runtime_error {
  explicit WindowError(const std::string& s) : std::runtime_error(s) {}
};

// Level-indexed family of G-differential algebras with face maps
// A_{n-1} -> A_n and degeneracy maps A_{n+1} -> A_n satisfying the
// cosimplicial identities. Levels and structure maps are materialized
// lazily and memoized; after materialization reads are immutable, so
// concurrent callers observe identical level objects.
class SimplicialGDA {
 public:
  virtual ~SimplicialGDA() = default;

  const GDAlgebra& level(int n) const;
  const AlgebraHom& face(int i, int n) const;        // A_{n-1} -> A_n, 0 <= i <= n
  const AlgebraHom& degeneracy(int i, int n) const;  // A_{n+1} -> A_n, 0 <= i <= n

 protected:
  virtual GDAlgebra build_level(int n) const = 0;
  virtual AlgebraHom build_face(int i, int n) const = 0;
  virtual AlgebraHom build_degeneracy(int i, int n) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<GDAlgebra>> levels_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<AlgebraHom>> faces_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<AlgebraHom>> degeneracies_;
};

// A_n = a^{(x)(n+1)} with the Quillen sign rule; faces insert a unit factor,
// degeneracies multiply adjacent factors, the differential and contractions
// extend slot-diagonally. Level-n generators are the base generators tagged
// by tensor slot.
class TensorPowerSGDA : public SimplicialGDA {
 public:
  explicit TensorPowerSGDA(GDAlgebra base);

  const GDAlgebra& base() const { return base_; }
  // Embedding of the base algebra onto the given slot of level n.
  AlgebraHom slot_embedding(int slot, int n) const;

 protected:
  GDAlgebra build_level(int n) const override;
  AlgebraHom build_face(int i, int n) const override;
  AlgebraHom build_degeneracy(int i, int n) const override;

 private:
  GDAlgebra base_;
};

// The constant simplicial algebra: every level is the same algebra and all
// structure maps are the identity (the product-type host where every face
// agrees on every element).
class ConstantSGDA : public SimplicialGDA {
 public:
  explicit ConstantSGDA(GDAlgebra a) : a_(std::move(a)) {}

 protected:
  GDAlgebra build_level(int) const override;
  AlgebraHom build_face(int, int) const override { return identity_hom(a_.table()); }
  AlgebraHom build_degeneracy(int, int) const override { return identity_hom(a_.table()); }

 private:
  GDAlgebra a_;
};

// Levelwise tensor product inner_n (x) right with structure maps acting as
// the identity on the right factor.
class TensorWithConstantSGDA : public SimplicialGDA {
 public:
  TensorWithConstantSGDA(std::shared_ptr<const SimplicialGDA> inner, GDAlgebra right);

  const SimplicialGDA& inner() const { return *inner_; }
  const GDAlgebra& right() const { return right_; }
  AlgebraHom embed_inner(int n) const;  // inner level n -> level n
  AlgebraHom embed_right(int n) const;  // right -> level n

 protected:
  GDAlgebra build_level(int n) const override;
  AlgebraHom build_face(int i, int n) const override;
  AlgebraHom build_degeneracy(int i, int n) const override;

 private:
  std::shared_ptr<const SimplicialGDA> inner_;
  GDAlgebra right_;
};

// Element of the total complex: per-level entries of complementary form
// degree. Zero entries are not stored.
class BigradedElement {
 public:
  BigradedElement() = default;
  explicit BigradedElement(const SimplicialGDA* host) : host_(host) {}

  const SimplicialGDA* host() const { return host_; }
  const std::map<int, GradedElement>& levels() const { return levels_; }
  bool is_zero() const { return levels_.empty(); }
  GradedElement at(int n) const;
  void add(int n, const GradedElement& x);
  int max_level() const { return levels_.empty() ? -1 : levels_.rbegin()->first; }

  // Total degree n + deg(x_n); nullopt when mixed or zero.
  std::optional<int> total_degree() const;

  BigradedElement& operator+=(const BigradedElement& o);
  BigradedElement& operator-=(const BigradedElement& o);
  friend BigradedElement operator+(BigradedElement a, const BigradedElement& b) { return a += b; }
  friend BigradedElement operator-(BigradedElement a, const BigradedElement& b) { return a -= b; }
  friend bool operator==(const BigradedElement& a, const BigradedElement& b) {
    return a.levels_ == b.levels_;
  }

 private:
  const SimplicialGDA* host_ = nullptr;
  std::map<int, GradedElement> levels_;
};

BigradedElement single_level(const SimplicialGDA& s, int n, GradedElement x);

// Total differential delta = (-1)^level d + alternating face sum.
BigradedElement delta(const SimplicialGDA& s, const BigradedElement& x);

// Cup product via extreme face composites, bilinear over levels and
// homogeneous pieces: for a at level m of form degree k and b at level n,
// a v b = (-1)^{kn} [last faces](a) * [zeroth faces](b) at level m+n.
BigradedElement cup(const SimplicialGDA& s, const BigradedElement& a, const BigradedElement& b);

// The n+1 canonical G-differential homomorphisms A_0 -> A_n.
std::vector<AlgebraHom> p_maps(const SimplicialGDA& s, int n);

struct CohomologyWindow {
  int dimension = 0;
  std::vector<BigradedElement> representatives;
};

// ker delta / im delta at the given total degree. level_bound and
// degree_bound must cover total_degree + 1; smaller windows raise
// WindowError rather than returning a wrong answer.
CohomologyWindow cohomology_window(const SimplicialGDA& s, int total_degree, int level_bound,
                                   int degree_bound);

// Solves delta x = z inside the window; nullopt when z is not exact in it.
std::optional<BigradedElement> solve_delta(const SimplicialGDA& s, const BigradedElement& z,
                                           int level_bound, int degree_bound);

// Levelwise homomorphism between two simplicial algebras (materialized up to
// a chosen level bound).
struct SimplicialHom {
  const SimplicialGDA* src = nullptr;
  const SimplicialGDA* dst = nullptr;
  std::vector<AlgebraHom> at_level;

  BigradedElement operator()(const BigradedElement& x) const;
};

// Lift of a base G-differential homomorphism to tensor towers, acting on
// every tensor slot.
SimplicialHom slotwise_hom(const TensorPowerSGDA& src, const TensorPowerSGDA& dst,
                           const AlgebraHom& base_hom, int max_level);

// Checks that phi commutes with d, contractions, faces and degeneracies on
// generators for all levels covered by phi.
CheckReport validate_simplicial_hom(const SimplicialHom& phi);

// Cosimplicial identities on generators for all levels <= max_level, plus
// commutation of the structure maps with d and the contractions.
CheckReport validate_cosimplicial(const SimplicialGDA& s, int max_level);

}  // namespace weilkit
