#include "weilkit/fat.hpp"

#include <sstream>

#include "weilkit/weil.hpp"

namespace weilkit {

std::string simplex_t_name(int i) {
  std::string d = std::to_string(i);
  return "@t" + std::string(d.size() >= 2 ? 0 : 1, '0') + d;
}

std::string simplex_dt_name(int i) {
  std::string d = std::to_string(i);
  return "@dt" + std::string(d.size() >= 2 ? 0 : 1, '0') + d;
}

namespace {
std::string tname(int i) { return simplex_t_name(i); }
std::string dtname(int i) { return simplex_dt_name(i); }
}  // namespace

TablePtr simplex_form_table(int m) {
  std::vector<Generator> gens;
  for (int i = 1; i <= m; ++i) {
    gens.push_back({tname(i), 0, "@t"});
    gens.push_back({dtname(i), 1, "@t"});
  }
  return make_table(std::move(gens));
}

GradedElement simplex_t(const TablePtr& t, int i) {
  return GradedElement::generator(t, tname(i));
}

GradedElement simplex_dt(const TablePtr& t, int i) {
  return GradedElement::generator(t, dtname(i));
}

GradedElement simplex_d(const GradedElement& x) {
  const TablePtr& t = x.table();
  std::vector<GradedElement> images(static_cast<size_t>(t->size()), GradedElement::zero(t));
  for (int g = 0; g < t->size(); ++g) {
    const std::string& nm = t->gen(g).name;
    if (nm.rfind("@t", 0) == 0)
      images[static_cast<size_t>(g)] = GradedElement::generator(t, "@d" + nm.substr(1));
  }
  return apply_derivation(1, images, x);
}

GradedElement integrate_simplex_top(const GradedElement& x, int m, const TablePtr& rest_table) {
  GradedElement out(rest_table);
  const AlgebraTable& t = *x.table();
  for (const auto& [mono, c] : x.terms()) {
    std::vector<int> texp(static_cast<size_t>(m), 0);
    int dt_count = 0;
    Monomial rest;
    bool ok = true;
    for (auto [g, e] : mono.factors) {
      const std::string& nm = t.gen(g).name;
      if (nm.rfind("@dt", 0) == 0) {
        ++dt_count;
      } else if (nm.rfind("@t", 0) == 0) {
        int i = std::stoi(nm.substr(2));
        texp[static_cast<size_t>(i - 1)] = e;
      } else {
        int gi = rest_table->index_of(nm);
        if (gi < 0) { ok = false; break; }
        rest.factors.emplace_back(gi, e);
      }
    }
    if (!ok) throw PresentationError("integrate: algebra factor missing from target table");
    if (dt_count != m) continue;  // only the full volume form survives
    int total = m;
    Rational value(1);
    for (int a : texp) {
      value *= Rational::factorial(static_cast<unsigned>(a));
      total += a;
    }
    value /= Rational::factorial(static_cast<unsigned>(total));
    std::sort(rest.factors.begin(), rest.factors.end());
    out.add_term(rest, c * value);
  }
  return out;
}

FatRealization::FatRealization(const SimplicialGDA* host) : host_(host) {}

const GDAlgebra& FatRealization::algebra(int m, int n) const {
  auto key = std::make_pair(m, n);
  {
    std::scoped_lock lk(mu_);
    auto it = algebras_.find(key);
    if (it != algebras_.end()) return *it->second;
  }
  const GDAlgebra& lvl = host_->level(n);
  std::vector<Generator> gens;
  for (int i = 1; i <= m; ++i) {
    gens.push_back({tname(i), 0, "@t"});
    gens.push_back({dtname(i), 1, "@t"});
  }
  for (int g = 0; g < lvl.tbl().size(); ++g) gens.push_back(lvl.tbl().gen(g));
  TablePtr t = make_table(std::move(gens));

  AlgebraHom emb{lvl.table(), t, {}};
  for (int g = 0; g < lvl.tbl().size(); ++g)
    emb.images.push_back(GradedElement::generator(t, lvl.tbl().gen(g).name));

  std::vector<GradedElement> d_images(static_cast<size_t>(t->size()), GradedElement::zero(t));
  for (int i = 1; i <= m; ++i)
    d_images[static_cast<size_t>(t->require(tname(i)))] = GradedElement::generator(t, dtname(i));
  for (int g = 0; g < lvl.tbl().size(); ++g)
    d_images[static_cast<size_t>(t->require(lvl.tbl().gen(g).name))] =
        emb(lvl.d_images()[static_cast<size_t>(g)]);

  std::vector<LieAction> actions;
  for (int a = 0; a < lvl.num_actions(); ++a) {
    LieAction act{lvl.lie(a), {}};
    for (int j = 0; j < lvl.lie(a).dim(); ++j) {
      std::vector<GradedElement> row(static_cast<size_t>(t->size()), GradedElement::zero(t));
      for (int g = 0; g < lvl.tbl().size(); ++g)
        row[static_cast<size_t>(t->require(lvl.tbl().gen(g).name))] =
            emb(lvl.action(a).contraction[static_cast<size_t>(j)][static_cast<size_t>(g)]);
      act.contraction.push_back(std::move(row));
    }
    actions.push_back(std::move(act));
  }
  auto built = std::make_unique<GDAlgebra>(t, std::move(d_images), std::move(actions));
  std::scoped_lock lk(mu_);
  auto it = algebras_.emplace(key, std::move(built)).first;
  return *it->second;
}

AlgebraHom FatRealization::embed_level(int m, int n) const {
  const GDAlgebra& lvl = host_->level(n);
  const GDAlgebra& dst = algebra(m, n);
  AlgebraHom h{lvl.table(), dst.table(), {}};
  for (int g = 0; g < lvl.tbl().size(); ++g) h.images.push_back(dst.gen(lvl.tbl().gen(g).name));
  return h;
}

AlgebraHom FatRealization::face_pullback(int i, int n) const {
  if (n < 1 || i < 0 || i > n) throw PresentationError("face pullback index out of range");
  const GDAlgebra& src = algebra(n, n);
  const GDAlgebra& dst = algebra(n - 1, n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));

  // images of t_1..t_n under insertion of a zero at barycentric slot i
  std::vector<GradedElement> timg(static_cast<size_t>(n + 1), GradedElement::zero(dst.table()));
  GradedElement s0 = GradedElement::unit(dst.table());
  for (int j = 1; j <= n - 1; ++j) s0 -= dst.gen(tname(j));
  auto s = [&](int j) {  // barycentric coordinate j of the (n-1)-simplex
    return j == 0 ? s0 : dst.gen(tname(j));
  };
  for (int j = 1; j <= n; ++j) {
    if (j < i) timg[static_cast<size_t>(j)] = s(j);
    else if (j == i) timg[static_cast<size_t>(j)] = GradedElement::zero(dst.table());
    else timg[static_cast<size_t>(j)] = s(j - 1);
  }
  for (int j = 1; j <= n; ++j) {
    h.images[static_cast<size_t>(src.tbl().require(tname(j)))] = timg[static_cast<size_t>(j)];
    h.images[static_cast<size_t>(src.tbl().require(dtname(j)))] =
        dst.d(timg[static_cast<size_t>(j)]);
  }
  const GDAlgebra& lvl = host_->level(n);
  for (int g = 0; g < lvl.tbl().size(); ++g)
    h.images[static_cast<size_t>(src.tbl().require(lvl.tbl().gen(g).name))] =
        dst.gen(lvl.tbl().gen(g).name);
  return h;
}

AlgebraHom FatRealization::degeneracy_pullback(int i, int n) const {
  if (n < 1 || i < 0 || i > n - 1) throw PresentationError("degeneracy pullback index out of range");
  const GDAlgebra& src = algebra(n - 1, n - 1);
  const GDAlgebra& dst = algebra(n, n - 1);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));

  for (int j = 1; j <= n - 1; ++j) {
    GradedElement img(dst.table());
    if (j < i) img = dst.gen(tname(j));
    else if (j == i) img = dst.gen(tname(i)) + dst.gen(tname(i + 1));
    else img = dst.gen(tname(j + 1));
    h.images[static_cast<size_t>(src.tbl().require(tname(j)))] = img;
    h.images[static_cast<size_t>(src.tbl().require(dtname(j)))] = dst.d(img);
  }
  const GDAlgebra& lvl = host_->level(n - 1);
  for (int g = 0; g < lvl.tbl().size(); ++g)
    h.images[static_cast<size_t>(src.tbl().require(lvl.tbl().gen(g).name))] =
        dst.gen(lvl.tbl().gen(g).name);
  return h;
}

AlgebraHom FatRealization::algebra_face(int i, int n) const {
  const GDAlgebra& src = algebra(n - 1, n - 1);
  const GDAlgebra& dst = algebra(n - 1, n);
  const AlgebraHom& f = host_->face(i, n);
  AlgebraHom emb = embed_level(n - 1, n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int j = 1; j <= n - 1; ++j) {
    h.images[static_cast<size_t>(src.tbl().require(tname(j)))] = dst.gen(tname(j));
    h.images[static_cast<size_t>(src.tbl().require(dtname(j)))] = dst.gen(dtname(j));
  }
  const GDAlgebra& lvl = host_->level(n - 1);
  for (int g = 0; g < lvl.tbl().size(); ++g)
    h.images[static_cast<size_t>(src.tbl().require(lvl.tbl().gen(g).name))] =
        emb(f.images[static_cast<size_t>(g)]);
  return h;
}

AlgebraHom FatRealization::algebra_degeneracy(int i, int n) const {
  const GDAlgebra& src = algebra(n, n);
  const GDAlgebra& dst = algebra(n, n - 1);
  const AlgebraHom& e = host_->degeneracy(i, n - 1);
  AlgebraHom emb = embed_level(n, n - 1);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int j = 1; j <= n; ++j) {
    h.images[static_cast<size_t>(src.tbl().require(tname(j)))] = dst.gen(tname(j));
    h.images[static_cast<size_t>(src.tbl().require(dtname(j)))] = dst.gen(dtname(j));
  }
  const GDAlgebra& lvl = host_->level(n);
  for (int g = 0; g < lvl.tbl().size(); ++g)
    h.images[static_cast<size_t>(src.tbl().require(lvl.tbl().gen(g).name))] =
        emb(e.images[static_cast<size_t>(g)]);
  return h;
}

GradedElement FatElement::at(int n) const {
  auto it = entries.find(n);
  if (it != entries.end()) return it->second;
  return GradedElement::zero(fat->level(n).table());
}

void FatElement::set(int n, GradedElement x) {
  if (n < 0 || n > max_level) throw PresentationError("fat entry level out of range");
  if (x.is_zero()) entries.erase(n);
  else {
    if (x.table() != fat->level(n).table())
      throw PresentationError("fat entry does not live in its level algebra");
    entries.insert_or_assign(n, std::move(x));
  }
}

FatElement& FatElement::operator+=(const FatElement& o) {
  if (!fat) { fat = o.fat; max_level = o.max_level; }
  max_level = std::min(max_level, o.max_level);
  for (const auto& [n, x] : o.entries) {
    if (n > max_level) continue;
    auto it = entries.find(n);
    if (it == entries.end()) entries.emplace(n, x);
    else {
      it->second += x;
      if (it->second.is_zero()) entries.erase(it);
    }
  }
  for (auto it = entries.begin(); it != entries.end();)
    it = it->first > max_level ? entries.erase(it) : std::next(it);
  return *this;
}

FatElement& FatElement::operator-=(const FatElement& o) {
  FatElement neg = o;
  for (auto& [n, x] : neg.entries) x = -x;
  return *this += neg;
}

FatElement operator*(const FatElement& a, const FatElement& b) {
  FatElement r;
  r.fat = a.fat;
  r.max_level = std::min(a.max_level, b.max_level);
  for (int n = 0; n <= r.max_level; ++n) {
    auto ia = a.entries.find(n);
    auto ib = b.entries.find(n);
    if (ia == a.entries.end() || ib == b.entries.end()) continue;
    GradedElement p = ia->second * ib->second;
    if (!p.is_zero()) r.entries.emplace(n, std::move(p));
  }
  return r;
}

FatElement& FatElement::operator*=(const Rational& c) {
  if (c.is_zero()) entries.clear();
  else
    for (auto& [n, x] : entries) x *= c;
  return *this;
}

FatElement fat_zero(const FatRealization& fat, int max_level) {
  return FatElement{&fat, max_level, {}};
}

FatElement fat_unit(const FatRealization& fat, int max_level) {
  FatElement r{&fat, max_level, {}};
  for (int n = 0; n <= max_level; ++n)
    r.entries.emplace(n, GradedElement::unit(fat.level(n).table()));
  return r;
}

FatElement fat_lift(const FatRealization& fat, const GradedElement& x0, int max_level) {
  FatElement r{&fat, max_level, {}};
  const SimplicialGDA& host = fat.host();
  if (x0.table() != host.level(0).table())
    throw PresentationError("fat_lift input must live at level 0");
  for (int n = 0; n <= max_level; ++n) {
    const TablePtr& lt = fat.level(n).table();
    AlgebraHom emb = fat.embed_level(n, n);
    auto pm = p_maps(host, n);
    GradedElement t0 = GradedElement::unit(lt);
    for (int j = 1; j <= n; ++j) t0 -= GradedElement::generator(lt, tname(j));
    GradedElement acc(lt);
    for (int i = 0; i <= n; ++i) {
      GradedElement ti = i == 0 ? t0 : GradedElement::generator(lt, tname(i));
      acc += ti * emb(pm[static_cast<size_t>(i)](x0));
    }
    r.set(n, std::move(acc));
  }
  return r;
}

CheckReport check_compatibility(const FatElement& x) {
  const FatRealization& fat = *x.fat;
  for (int n = 1; n <= x.max_level; ++n) {
    for (int i = 0; i <= n; ++i) {
      GradedElement lhs = fat.face_pullback(i, n)(x.at(n));
      GradedElement rhs = fat.algebra_face(i, n)(x.at(n - 1));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "face compatibility fails at (n,i)=(" << n << "," << i << ")";
        return {false, os.str()};
      }
    }
    for (int i = 0; i <= n - 1; ++i) {
      GradedElement lhs = fat.degeneracy_pullback(i, n)(x.at(n - 1));
      GradedElement rhs = fat.algebra_degeneracy(i, n)(x.at(n));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "degeneracy compatibility fails at (n,i)=(" << n << "," << i << ")";
        return {false, os.str()};
      }
    }
  }
  return {};
}

FatElement fat_d(const FatElement& x) {
  FatElement r{x.fat, x.max_level, {}};
  for (const auto& [n, e] : x.entries) r.set(n, x.fat->level(n).d(e));
  return r;
}

FatElement fat_contract(const FatElement& x, int action, int j) {
  FatElement r{x.fat, x.max_level, {}};
  for (const auto& [n, e] : x.entries) r.set(n, x.fat->level(n).contract(action, j, e));
  return r;
}

FatElement fat_lie_derivative(const FatElement& x, int action, int j) {
  FatElement r{x.fat, x.max_level, {}};
  for (const auto& [n, e] : x.entries) r.set(n, x.fat->level(n).lie_derivative(action, j, e));
  return r;
}

BigradedElement integrate(const FatElement& x) {
  const SimplicialGDA& host = x.fat->host();
  BigradedElement out(&host);
  for (const auto& [n, e] : x.entries)
    out.add(n, integrate_simplex_top(e, n, host.level(n).table()));
  return out;
}

FatGVector lift_connection(const FatRealization& fat, const GVector& theta0, int max_level) {
  FatGVector out;
  out.comps.reserve(theta0.comps.size());
  for (const auto& c : theta0.comps) out.comps.push_back(fat_lift(fat, c, max_level));
  return out;
}

FatGVector fat_curvature(const FatRealization& fat, const FatGVector& theta,
                         const LieAlgebraData& lie) {
  if (static_cast<int>(theta.comps.size()) != lie.dim())
    throw PresentationError("fat curvature input has wrong number of components");
  FatGVector omega;
  omega.comps.reserve(theta.comps.size());
  for (int i = 0; i < lie.dim(); ++i) {
    FatElement o = fat_d(theta.comps[static_cast<size_t>(i)]);
    for (int j = 0; j < lie.dim(); ++j)
      for (int k = 0; k < lie.dim(); ++k) {
        const Rational& f = lie.f(i, j, k);
        if (f.is_zero()) continue;
        FatElement prod = theta.comps[static_cast<size_t>(j)] * theta.comps[static_cast<size_t>(k)];
        prod *= kHalf * f;
        o += prod;
      }
    omega.comps.push_back(std::move(o));
  }
  (void)fat;
  return omega;
}

FatElement evaluate_invariant_fat(const InvariantPolynomial& f, const FatGVector& omega,
                                  const FatRealization& fat, int max_level) {
  FatElement out = fat_zero(fat, max_level);
  for (const auto& [m, c] : f.poly().terms()) {
    FatElement prod = fat_unit(fat, max_level);
    prod *= c;
    for (auto [g, e] : m.factors) {
      const std::string& name = f.table()->gen(g).name;  // "xi<i>"
      int i = std::stoi(name.substr(2)) - 1;
      for (int k = 0; k < e; ++k) prod = prod * omega.comps[static_cast<size_t>(i)];
    }
    out += prod;
  }
  return out;
}

}  // namespace weilkit
