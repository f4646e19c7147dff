#include "weilkit/gda.hpp"

#include <sstream>

#include "weilkit/linalg.hpp"

namespace weilkit {

GDAlgebra::GDAlgebra(TablePtr table, std::vector<GradedElement> d_images,
                     std::vector<LieAction> actions)
    : table_(std::move(table)), d_(std::move(d_images)), actions_(std::move(actions)) {
  if (static_cast<int>(d_.size()) != table_->size())
    throw PresentationError("differential image list does not match generator table");
  for (int g = 0; g < table_->size(); ++g) {
    const GradedElement& im = d_[static_cast<size_t>(g)];
    if (!im.is_zero() && !im.is_homogeneous_of(table_->degree(g) + 1))
      throw PresentationError("d image of '" + table_->gen(g).name +
                              "' is not homogeneous of degree +1");
  }
  for (const auto& act : actions_) {
    if (static_cast<int>(act.contraction.size()) != act.lie.dim())
      throw PresentationError("contraction list does not match Lie algebra dimension");
    for (const auto& row : act.contraction) {
      if (static_cast<int>(row.size()) != table_->size())
        throw PresentationError("contraction image list does not match generator table");
      for (int g = 0; g < table_->size(); ++g) {
        const GradedElement& im = row[static_cast<size_t>(g)];
        if (!im.is_zero() && !im.is_homogeneous_of(table_->degree(g) - 1))
          throw PresentationError("contraction image of '" + table_->gen(g).name +
                                  "' is not homogeneous of degree -1");
      }
    }
  }
}

GradedElement GDAlgebra::d(const GradedElement& x) const {
  return apply_derivation(1, d_, x);
}

GradedElement GDAlgebra::contract(int action, int j, const GradedElement& x) const {
  return apply_derivation(-1, actions_[static_cast<size_t>(action)].contraction[static_cast<size_t>(j)], x);
}

GradedElement GDAlgebra::lie_derivative(int action, int j, const GradedElement& x) const {
  return contract(action, j, d(x)) + d(contract(action, j, x));
}

GVector& GVector::operator+=(const GVector& o) {
  if (comps.size() != o.comps.size()) throw PresentationError("GVector dimension mismatch");
  for (size_t i = 0; i < comps.size(); ++i) comps[i] += o.comps[i];
  return *this;
}

GVector& GVector::operator-=(const GVector& o) {
  if (comps.size() != o.comps.size()) throw PresentationError("GVector dimension mismatch");
  for (size_t i = 0; i < comps.size(); ++i) comps[i] -= o.comps[i];
  return *this;
}

GradedElement AlgebraHom::operator()(const GradedElement& x) const {
  if (x.table() != src) throw PresentationError("homomorphism applied outside its source");
  return apply_homomorphism(dst, images, x);
}

GVector AlgebraHom::operator()(const GVector& v) const {
  GVector out;
  out.comps.reserve(v.comps.size());
  for (const auto& c : v.comps) out.comps.push_back((*this)(c));
  return out;
}

AlgebraHom identity_hom(const TablePtr& t) {
  AlgebraHom h{t, t, {}};
  h.images.reserve(static_cast<size_t>(t->size()));
  for (int g = 0; g < t->size(); ++g) h.images.push_back(GradedElement::generator(t, g));
  return h;
}

AlgebraHom compose(const AlgebraHom& outer, const AlgebraHom& inner) {
  if (inner.dst != outer.src) throw PresentationError("homomorphism composition mismatch");
  AlgebraHom h{inner.src, outer.dst, {}};
  h.images.reserve(inner.images.size());
  for (const auto& im : inner.images) h.images.push_back(outer(im));
  return h;
}

GradedElement lie_derivative(const GDAlgebra& alg, int j, const GradedElement& x) {
  return alg.lie_derivative(0, j, x);
}

CheckReport is_connection(const GDAlgebra& alg, const GVector& theta, int action) {
  const LieAlgebraData& lie = alg.lie(action);
  if (theta.dim() != lie.dim())
    throw PresentationError("connection candidate has wrong number of components");
  for (const auto& c : theta.comps)
    if (!c.is_homogeneous_of(1))
      throw PresentationError("connection components must be homogeneous of degree 1");
  CheckReport rep;
  for (int j = 0; j < lie.dim(); ++j) {
    for (int i = 0; i < lie.dim(); ++i) {
      GradedElement want =
          i == j ? alg.unit() : alg.zero();
      GradedElement got = alg.contract(action, j, theta.comps[static_cast<size_t>(i)]);
      if (!(got == want)) {
        std::ostringstream os;
        os << "contraction axiom fails: i_{X_" << j + 1 << "} theta_" << i + 1 << " = "
           << got.str();
        return {false, os.str()};
      }
      GradedElement inv = alg.lie_derivative(action, j, theta.comps[static_cast<size_t>(i)]);
      for (int k = 0; k < lie.dim(); ++k)
        inv += lie.f(i, j, k) * theta.comps[static_cast<size_t>(k)];
      if (!inv.is_zero()) {
        std::ostringstream os;
        os << "invariance fails at (j,i)=(" << j + 1 << "," << i + 1
           << "): residual " << inv.str();
        return {false, os.str()};
      }
    }
  }
  return rep;
}

GVector curvature(const GDAlgebra& alg, const GVector& theta, int action) {
  const LieAlgebraData& lie = alg.lie(action);
  if (theta.dim() != lie.dim())
    throw PresentationError("curvature input has wrong number of components");
  GVector omega;
  omega.comps.reserve(static_cast<size_t>(lie.dim()));
  for (int i = 0; i < lie.dim(); ++i) {
    GradedElement o = alg.d(theta.comps[static_cast<size_t>(i)]);
    for (int j = 0; j < lie.dim(); ++j)
      for (int k = 0; k < lie.dim(); ++k) {
        const Rational& f = lie.f(i, j, k);
        if (f.is_zero()) continue;
        o += kHalf * f *
             (theta.comps[static_cast<size_t>(j)] * theta.comps[static_cast<size_t>(k)]);
      }
    omega.comps.push_back(std::move(o));
  }
  return omega;
}

std::vector<GradedElement> basic_subspace(const GDAlgebra& alg, int degree, int action) {
  const auto basis = degree_window_basis(alg.tbl(), degree);
  const auto lower = degree_window_basis(alg.tbl(), degree - 1);
  std::map<Monomial, int> lower_index, same_index;
  for (size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = static_cast<int>(i);
  for (size_t i = 0; i < basis.size(); ++i) same_index[basis[i]] = static_cast<int>(i);

  int dim_g = alg.lie(action).dim();
  int rows = dim_g * static_cast<int>(lower.size() + basis.size());
  SparseMatrix m(rows == 0 ? 1 : rows, static_cast<int>(basis.size()));
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    GradedElement x = GradedElement::monomial(alg.table(), basis[static_cast<size_t>(col)], Rational(1));
    for (int j = 0; j < dim_g; ++j) {
      GradedElement ix = alg.contract(action, j, x);
      for (const auto& [mo, c] : ix.terms())
        m.add(j * static_cast<int>(lower.size()) + lower_index.at(mo), col, c);
      GradedElement lx = alg.lie_derivative(action, j, x);
      for (const auto& [mo, c] : lx.terms())
        m.add(dim_g * static_cast<int>(lower.size()) + j * static_cast<int>(basis.size()) +
                  same_index.at(mo),
              col, c);
    }
  }
  std::vector<GradedElement> out;
  for (const auto& v : kernel(m)) {
    GradedElement e(alg.table());
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) e.add_term(basis[i], v[i]);
    out.push_back(std::move(e));
  }
  return out;
}

bool is_basic(const GDAlgebra& alg, const GradedElement& x, int action) {
  for (int j = 0; j < alg.lie(action).dim(); ++j) {
    if (!alg.contract(action, j, x).is_zero()) return false;
    if (!alg.lie_derivative(action, j, x).is_zero()) return false;
  }
  return true;
}

CheckReport validate_presentation(const GDAlgebra& alg, int degree_bound) {
  std::vector<Monomial> window;
  for (int d = 0; d <= degree_bound; ++d) {
    auto w = degree_window_basis(alg.tbl(), d);
    window.insert(window.end(), w.begin(), w.end());
  }
  for (const Monomial& mo : window) {
    GradedElement x = GradedElement::monomial(alg.table(), mo, Rational(1));
    GradedElement dd = alg.d(alg.d(x));
    if (!dd.is_zero())
      return {false, "d^2 != 0 on " + x.str() + ": " + dd.str()};
    for (int a = 0; a < alg.num_actions(); ++a) {
      int n = alg.lie(a).dim();
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= j; ++k) {
          GradedElement anti = alg.contract(a, j, alg.contract(a, k, x)) +
                               alg.contract(a, k, alg.contract(a, j, x));
          if (!anti.is_zero())
            return {false, "contraction anticommutation fails on " + x.str()};
        }
        for (int k = 0; k < n; ++k) {
          GradedElement closure =
              alg.lie_derivative(a, j, alg.lie_derivative(a, k, x)) -
              alg.lie_derivative(a, k, alg.lie_derivative(a, j, x));
          for (int i = 0; i < n; ++i)
            closure -= alg.lie(a).f(i, j, k) * alg.lie_derivative(a, i, x);
          if (!closure.is_zero()) {
            std::ostringstream os;
            os << "action closure fails on " << x.str() << " at (j,k)=(" << j + 1 << ","
               << k + 1 << "): residual " << closure.str();
            return {false, os.str()};
          }
          // equivariance of the contraction, the infinitesimal form of
          // g i_X g^{-1} = i_{Ad_g X}
          GradedElement equiv = alg.lie_derivative(a, j, alg.contract(a, k, x)) -
                                alg.contract(a, k, alg.lie_derivative(a, j, x));
          for (int i = 0; i < n; ++i)
            equiv -= alg.lie(a).f(i, j, k) * alg.contract(a, i, x);
          if (!equiv.is_zero()) {
            std::ostringstream os;
            os << "contraction equivariance fails on " << x.str() << " at (j,k)=(" << j + 1
               << "," << k + 1 << "): residual " << equiv.str();
            return {false, os.str()};
          }
        }
      }
    }
  }
  return {};
}

namespace {

Generator slot_prefixed(const Generator& g, int slot) {
  std::string p = std::to_string(slot) + ".";
  return Generator{p + g.name, g.degree, "x" + std::string(slot >= 100 ? 0 : slot >= 10 ? 1 : 2, '0') +
                                             std::to_string(slot) + "." + g.tag};
}

}  // namespace

GDAlgebra tensor_gda(const GDAlgebra& a, const GDAlgebra& b) {
  std::vector<Generator> gens;
  for (int g = 0; g < a.tbl().size(); ++g) gens.push_back(slot_prefixed(a.tbl().gen(g), 0));
  for (int g = 0; g < b.tbl().size(); ++g) gens.push_back(slot_prefixed(b.tbl().gen(g), 1));
  TablePtr t = make_table(std::move(gens));

  auto push_through = [&](const GDAlgebra& part, int slot, const GradedElement& x) {
    AlgebraHom emb{part.table(), t, {}};
    emb.images.reserve(static_cast<size_t>(part.tbl().size()));
    for (int g = 0; g < part.tbl().size(); ++g)
      emb.images.push_back(
          GradedElement::generator(t, slot_prefixed(part.tbl().gen(g), slot).name));
    return emb(x);
  };

  std::vector<GradedElement> d_images;
  for (int g = 0; g < a.tbl().size(); ++g)
    d_images.push_back(push_through(a, 0, a.d_images()[static_cast<size_t>(g)]));
  for (int g = 0; g < b.tbl().size(); ++g)
    d_images.push_back(push_through(b, 1, b.d_images()[static_cast<size_t>(g)]));

  int num_actions = std::max(a.num_actions(), b.num_actions());
  std::vector<LieAction> actions;
  for (int k = 0; k < num_actions; ++k) {
    const LieAlgebraData& lie = k < a.num_actions() ? a.lie(k) : b.lie(k);
    if (k < a.num_actions() && k < b.num_actions() && a.lie(k).dim() != b.lie(k).dim())
      throw PresentationError("tensor factors disagree on action dimension");
    LieAction act{lie, {}};
    for (int j = 0; j < lie.dim(); ++j) {
      std::vector<GradedElement> row;
      for (int g = 0; g < a.tbl().size(); ++g)
        row.push_back(k < a.num_actions()
                          ? push_through(a, 0, a.action(k).contraction[static_cast<size_t>(j)][static_cast<size_t>(g)])
                          : GradedElement::zero(t));
      for (int g = 0; g < b.tbl().size(); ++g)
        row.push_back(k < b.num_actions()
                          ? push_through(b, 1, b.action(k).contraction[static_cast<size_t>(j)][static_cast<size_t>(g)])
                          : GradedElement::zero(t));
      act.contraction.push_back(std::move(row));
    }
    actions.push_back(std::move(act));
  }
  return GDAlgebra(t, std::move(d_images), std::move(actions));
}

AlgebraHom tensor_embed_left(const GDAlgebra& a, const GDAlgebra&, const GDAlgebra& ab) {
  AlgebraHom h{a.table(), ab.table(), {}};
  for (int g = 0; g < a.tbl().size(); ++g)
    h.images.push_back(ab.gen("0." + a.tbl().gen(g).name));
  return h;
}

AlgebraHom tensor_embed_right(const GDAlgebra&, const GDAlgebra& b, const GDAlgebra& ab) {
  AlgebraHom h{b.table(), ab.table(), {}};
  for (int g = 0; g < b.tbl().size(); ++g)
    h.images.push_back(ab.gen("1." + b.tbl().gen(g).name));
  return h;
}

GDAlgebra with_actions(const GDAlgebra& a, std::vector<LieAction> actions) {
  return GDAlgebra(a.table(), a.d_images(), std::move(actions));
}

LieAction zero_action(const LieAlgebraData& lie, const TablePtr& table) {
  LieAction act{lie, {}};
  for (int j = 0; j < lie.dim(); ++j)
    act.contraction.emplace_back(static_cast<size_t>(table->size()),
                                 GradedElement::zero(table));
  return act;
}

AlgebraHom name_matching_hom(const TablePtr& src, const TablePtr& dst) {
  AlgebraHom h{src, dst, {}};
  for (int g = 0; g < src->size(); ++g)
    h.images.push_back(GradedElement::generator(dst, src->gen(g).name));
  return h;
}

}  // namespace weilkit
