#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weilkit/rational.hpp"

namespace weilkit {

// Raised when inputs violate a presentation contract (mismatched generator
// tables, inhomogeneous derivation images, degree mismatches, ...).
struct PresentationError : std::logic_error {
  explicit PresentationError(const std::string& s) : std::logic_error(s) {}
};

struct Generator {
  std::string name;  // unique within a table
  int degree = 0;    // >= 0, fixed for the generator's lifetime
  std::string tag;   // ordering key (tensor slot, simplicial level, ...)
};

// Immutable generator table of one free graded-commutative presentation.
// Generators are kept sorted by (tag, name); that order is the global
// monomial order every normal form uses.
class AlgebraTable {
 public:
  explicit AlgebraTable(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
  int degree(int i) const { return gens_[static_cast<size_t>(i)].degree; }
  bool is_odd(int i) const { return gens_[static_cast<size_t>(i)].degree % 2 != 0; }

  int index_of(std::string_view name) const;  // -1 if absent
  int require(std::string_view name) const;   // throws if absent

  bool has_degree_zero_generator() const { return has_degree_zero_; }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int, std::less<>> by_name_;
  bool has_degree_zero_ = false;
};

using TablePtr = std::shared_ptr<const AlgebraTable>;

TablePtr make_table(std::vector<Generator> gens);

// Normal-form monomial: factors sorted by generator index, exponents >= 1,
// odd generators never above exponent 1. Empty factor list is the unit.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  bool is_unit() const { return factors.empty(); }
  int degree(const AlgebraTable& t) const;
  int exponent_of(int gen) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.factors < b.factors;
  }
};

// Exact rational linear combination of normal-form monomials: the universal
// value type. Immutable from the caller's point of view; all operations are
// pure functions returning fresh values.
class GradedElement {
 public:
  GradedElement() = default;
  explicit GradedElement(TablePtr table) : table_(std::move(table)) {}

  static GradedElement zero(TablePtr table) { return GradedElement(std::move(table)); }
  static GradedElement scalar(TablePtr table, Rational c);
  static GradedElement unit(TablePtr table) { return scalar(std::move(table), Rational(1)); }
  static GradedElement generator(TablePtr table, int index);
  static GradedElement generator(TablePtr table, std::string_view name);
  static GradedElement monomial(TablePtr table, Monomial m, Rational c);

  const TablePtr& table() const { return table_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Degree of a homogeneous element; nullopt for 0 or inhomogeneous ones.
  std::optional<int> degree() const;
  bool is_homogeneous_of(int d) const;
  GradedElement homogeneous_part(int d) const;
  std::vector<int> degrees_present() const;

  Rational coefficient(const Monomial& m) const;

  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement& operator*=(const Rational& c);
  GradedElement operator-() const;

  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const Rational& c) { return a *= c; }
  friend GradedElement operator*(const Rational& c, GradedElement a) { return a *= c; }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b);

  friend bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // deterministic human-readable rendering

  void add_term(const Monomial& m, const Rational& c);  // normalizing accumulate

 private:
  TablePtr table_;
  std::map<Monomial, Rational> terms_;
};

void require_same_table(const GradedElement& a, const GradedElement& b);

// Multiplies two normal-form monomials; accumulates the Koszul sign from
// sorting odd factors past each other. Returns nullopt when an odd generator
// would reach exponent two.
std::optional<std::pair<Monomial, int>> multiply_monomials(const AlgebraTable& t,
                                                           const Monomial& a,
                                                           const Monomial& b);

// The unique degree-d derivation with the given generator images, applied to
// target: D(xy) = D(x) y + (-1)^{d deg x} x D(y). Images must be homogeneous
// of degree (generator degree + d) or zero.
GradedElement apply_derivation(int d, std::span<const GradedElement> images,
                               const GradedElement& target);

// The unital algebra homomorphism into dst with the given (degree-preserving)
// generator images, applied to target.
GradedElement apply_homomorphism(const TablePtr& dst, std::span<const GradedElement> images,
                                 const GradedElement& target);

// All normal-form monomials of exactly the given degree, in monomial order.
// Requires a table without degree-zero generators.
std::vector<Monomial> degree_window_basis(const AlgebraTable& t, int degree);

}  // namespace weilkit
