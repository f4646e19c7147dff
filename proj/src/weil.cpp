#include "weilkit/weil.hpp"

namespace weilkit {

namespace {
std::string num(int i) { return std::to_string(i + 1); }
}  // namespace

std::vector<std::string> weil_theta_names(const LieAlgebraData& lie) {
  std::vector<std::string> v;
  for (int i = 0; i < lie.dim(); ++i) v.push_back("th" + num(i));
  return v;
}

std::vector<std::string> weil_omega_names(const LieAlgebraData& lie) {
  std::vector<std::string> v;
  for (int i = 0; i < lie.dim(); ++i) v.push_back("om" + num(i));
  return v;
}

GDAlgebra weil_algebra(const LieAlgebraData& lie) {
  int n = lie.dim();
  std::vector<Generator> gens;
  for (int i = 0; i < n; ++i) gens.push_back({"th" + num(i), 1, "w"});
  for (int i = 0; i < n; ++i) gens.push_back({"om" + num(i), 2, "w"});
  TablePtr t = make_table(std::move(gens));

  auto th = [&](int i) { return GradedElement::generator(t, "th" + num(i)); };
  auto om = [&](int i) { return GradedElement::generator(t, "om" + num(i)); };

  std::vector<GradedElement> d_images(static_cast<size_t>(t->size()), GradedElement::zero(t));
  for (int i = 0; i < n; ++i) {
    GradedElement dth = om(i);
    GradedElement dom = GradedElement::zero(t);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational& f = lie.f(i, j, k);
        if (f.is_zero()) continue;
        dth -= kHalf * f * (th(j) * th(k));
        dom += f * (om(j) * th(k));
      }
    d_images[static_cast<size_t>(t->require("th" + num(i)))] = dth;
    d_images[static_cast<size_t>(t->require("om" + num(i)))] = dom;
  }

  LieAction act{lie, {}};
  for (int j = 0; j < n; ++j) {
    std::vector<GradedElement> row(static_cast<size_t>(t->size()), GradedElement::zero(t));
    row[static_cast<size_t>(t->require("th" + num(j)))] = GradedElement::unit(t);
    act.contraction.push_back(std::move(row));
  }
  return GDAlgebra(t, std::move(d_images), {std::move(act)});
}

GVector canonical_connection(const GDAlgebra& weil) {
  GVector eta;
  for (int i = 0; i < weil.lie().dim(); ++i) eta.comps.push_back(weil.gen("th" + num(i)));
  return eta;
}

TablePtr invariant_symbol_table(const LieAlgebraData& lie) {
  std::vector<Generator> gens;
  for (int i = 0; i < lie.dim(); ++i) gens.push_back({"xi" + num(i), 2, "p"});
  return make_table(std::move(gens));
}

InvariantPolynomial::InvariantPolynomial(const LieAlgebraData& lie, GradedElement poly)
    : lie_(lie), table_(poly.table()), poly_(std::move(poly)) {
  // coadjoint derivation: xi^i -> -sum_k f^i_{jk} xi^k, degree 0
  for (int j = 0; j < lie_.dim(); ++j) {
    std::vector<GradedElement> images;
    for (int i = 0; i < lie_.dim(); ++i) {
      GradedElement im = GradedElement::zero(table_);
      for (int k = 0; k < lie_.dim(); ++k)
        im -= lie_.f(i, j, k) * GradedElement::generator(table_, "xi" + num(k));
      images.push_back(std::move(im));
    }
    GradedElement lx = apply_derivation(0, images, poly_);
    if (!lx.is_zero())
      throw PresentationError("polynomial is not coadjoint-invariant: L_{X_" + num(j) +
                              "} f = " + lx.str());
  }
}

InvariantPolynomial InvariantPolynomial::from_exponents(
    const LieAlgebraData& lie,
    const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  TablePtr t = invariant_symbol_table(lie);
  GradedElement p(t);
  for (const auto& [exps, c] : terms) {
    if (static_cast<int>(exps.size()) != lie.dim())
      throw PresentationError("exponent vector length does not match Lie algebra dimension");
    Monomial m;
    for (int i = 0; i < lie.dim(); ++i) {
      if (exps[static_cast<size_t>(i)] < 0) throw PresentationError("negative exponent");
      if (exps[static_cast<size_t>(i)] > 0)
        m.factors.emplace_back(t->require("xi" + num(i)), exps[static_cast<size_t>(i)]);
    }
    std::sort(m.factors.begin(), m.factors.end());
    p += GradedElement::monomial(t, std::move(m), c);
  }
  return InvariantPolynomial(lie, std::move(p));
}

int InvariantPolynomial::polynomial_degree() const {
  auto d = poly_.degree();
  if (!d) {
    if (poly_.is_zero()) return 0;
    throw PresentationError("invariant polynomial must be homogeneous");
  }
  return *d / 2;
}

GradedElement evaluate_invariant(const InvariantPolynomial& f, const GVector& omega) {
  if (omega.dim() != f.lie().dim())
    throw PresentationError("curvature vector has wrong number of components");
  TablePtr dst;
  for (const auto& c : omega.comps) {
    if (c.table()) dst = c.table();
    for (int d : c.degrees_present())
      if (d % 2 != 0)
        throw PresentationError("invariant evaluation requires even-degree components");
  }
  if (!dst) throw PresentationError("cannot evaluate on empty component list");
  // substitution xi^i -> omega_i is a well-defined algebra map since every
  // omega_i is even; apply_homomorphism tolerates the degree-2-vs-even
  // mismatch by construction below.
  GradedElement out(dst);
  for (const auto& [m, c] : f.poly().terms()) {
    GradedElement prod = GradedElement::scalar(dst, c);
    for (auto [g, e] : m.factors) {
      const std::string& name = f.table()->gen(g).name;  // "xi<i>"
      int i = std::stoi(name.substr(2)) - 1;
      for (int k = 0; k < e; ++k) prod = prod * omega.comps[static_cast<size_t>(i)];
    }
    out += prod;
  }
  return out;
}

InvariantPolynomial multiply(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  if (a.table() != b.table()) {
    // rebuild b over a's table (same lie, same names)
    GradedElement bb(a.table());
    for (const auto& [m, c] : b.poly().terms()) bb.add_term(m, c);
    return InvariantPolynomial(a.lie(), a.poly() * bb);
  }
  return InvariantPolynomial(a.lie(), a.poly() * b.poly());
}

}  // namespace weilkit
