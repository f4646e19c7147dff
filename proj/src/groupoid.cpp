#include "weilkit/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "weilkit/linalg.hpp"

namespace weilkit {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  int n = static_cast<int>(elements_.size());
  if (static_cast<int>(table_.size()) != n)
    throw PresentationError("group table has wrong shape");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw PresentationError("group table has wrong shape");
    for (int v : row)
      if (v < 0 || v >= n) throw PresentationError("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PresentationError("group multiplication is not associative");
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) ok = ok && mul(e, a) == a && mul(a, e) == a;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw PresentationError("group has no identity element");
  inverse_.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) { inverse_[static_cast<size_t>(a)] = b; break; }
    if (inverse_[static_cast<size_t>(a)] < 0)
      throw PresentationError("group element '" + elements_[static_cast<size_t>(a)] + "' has no inverse");
  }
}

int FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[static_cast<size_t>(i)] == name) return i;
  throw PresentationError("unknown group element '" + name + "'");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                               std::map<std::pair<int, int>, int> compose,
                               std::vector<int> identity, std::vector<int> inverse)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      compose_(std::move(compose)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)) {
  auto rep = validate();
  if (!rep.ok) throw PresentationError("groupoid axioms fail: " + rep.detail);
}

int FiniteGroupoid::object_index(const std::string& name) const {
  for (int i = 0; i < num_objects(); ++i)
    if (objects_[static_cast<size_t>(i)] == name) return i;
  return -1;
}

int FiniteGroupoid::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[static_cast<size_t>(i)].name == name) return i;
  return -1;
}

int FiniteGroupoid::compose(int g1, int g2) const {
  auto it = compose_.find({g1, g2});
  if (it == compose_.end()) throw PresentationError("arrows are not composable");
  return it->second;
}

CheckReport FiniteGroupoid::validate() const {
  int no = num_objects(), na = num_arrows();
  if (static_cast<int>(identity_.size()) != no) return {false, "identity table has wrong size"};
  if (static_cast<int>(inverse_.size()) != na) return {false, "inverse table has wrong size"};
  for (const auto& a : arrows_)
    if (a.src < 0 || a.src >= no || a.tgt < 0 || a.tgt >= no)
      return {false, "arrow '" + a.name + "' has endpoints out of range"};
  for (int x = 0; x < no; ++x) {
    int e = identity_[static_cast<size_t>(x)];
    if (e < 0 || e >= na) return {false, "identity arrow out of range"};
    if (src(e) != x || tgt(e) != x)
      return {false, "identity of '" + objects_[static_cast<size_t>(x)] + "' is not a loop"};
  }
  // composition total exactly on composable pairs
  for (int g1 = 0; g1 < na; ++g1)
    for (int g2 = 0; g2 < na; ++g2) {
      auto it = compose_.find({g1, g2});
      if (composable(g1, g2)) {
        if (it == compose_.end())
          return {false, "missing composition " + arrows_[static_cast<size_t>(g1)].name + " . " +
                             arrows_[static_cast<size_t>(g2)].name};
        int g = it->second;
        if (g < 0 || g >= na) return {false, "composition out of range"};
        if (src(g) != src(g2) || tgt(g) != tgt(g1))
          return {false, "composition endpoints wrong for " +
                             arrows_[static_cast<size_t>(g1)].name + " . " +
                             arrows_[static_cast<size_t>(g2)].name};
      } else if (it != compose_.end()) {
        return {false, "composition defined on a non-composable pair"};
      }
    }
  // unit laws
  for (int g = 0; g < na; ++g) {
    if (compose(g, identity_[static_cast<size_t>(src(g))]) != g)
      return {false, "right unit law fails for " + arrows_[static_cast<size_t>(g)].name};
    if (compose(identity_[static_cast<size_t>(tgt(g))], g) != g)
      return {false, "left unit law fails for " + arrows_[static_cast<size_t>(g)].name};
  }
  // associativity
  for (int g1 = 0; g1 < na; ++g1)
    for (int g2 = 0; g2 < na; ++g2) {
      if (!composable(g1, g2)) continue;
      for (int g3 = 0; g3 < na; ++g3) {
        if (!composable(g2, g3)) continue;
        if (compose(compose(g1, g2), g3) != compose(g1, compose(g2, g3)))
          return {false, "associativity fails"};
      }
    }
  // inverses
  for (int g = 0; g < na; ++g) {
    int gi = inverse_[static_cast<size_t>(g)];
    if (gi < 0 || gi >= na) return {false, "inverse out of range"};
    if (src(gi) != tgt(g) || tgt(gi) != src(g))
      return {false, "inverse endpoints wrong for " + arrows_[static_cast<size_t>(g)].name};
    if (compose(g, gi) != identity_[static_cast<size_t>(tgt(g))] ||
        compose(gi, g) != identity_[static_cast<size_t>(src(g))])
      return {false, "inverse law fails for " + arrows_[static_cast<size_t>(g)].name};
  }
  return {};
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
  std::vector<Arrow> arrows;
  for (int i = 0; i < g.size(); ++i) arrows.push_back({g.name(i), 0, 0});
  std::map<std::pair<int, int>, int> compose;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) compose[{a, b}] = g.mul(a, b);
  return FiniteGroupoid({"*"}, std::move(arrows), std::move(compose), {g.identity()},
                        [&] {
                          std::vector<int> inv;
                          for (int a = 0; a < g.size(); ++a) inv.push_back(g.inverse(a));
                          return inv;
                        }());
}

FiniteGroupoid FiniteGroupoid::pair_groupoid(int k) {
  std::vector<std::string> objects;
  for (int i = 0; i < k; ++i) objects.push_back("x" + std::to_string(i));
  std::vector<Arrow> arrows;
  auto idx = [&](int to, int from) { return to * k + from; };
  for (int to = 0; to < k; ++to)
    for (int from = 0; from < k; ++from)
      arrows.push_back({"(" + std::to_string(to) + "<-" + std::to_string(from) + ")", from, to});
  std::map<std::pair<int, int>, int> compose;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) compose[{idx(a, b), idx(b, c)}] = idx(a, c);
  std::vector<int> identity, inverse;
  for (int i = 0; i < k; ++i) identity.push_back(idx(i, i));
  for (int to = 0; to < k; ++to)
    for (int from = 0; from < k; ++from) inverse.push_back(idx(from, to));
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                        std::move(identity), std::move(inverse));
}

FiniteGroupoid FiniteGroupoid::discrete(int k) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::pair<int, int>, int> compose;
  std::vector<int> identity, inverse;
  for (int i = 0; i < k; ++i) {
    objects.push_back("x" + std::to_string(i));
    arrows.push_back({"id" + std::to_string(i), i, i});
    compose[{i, i}] = i;
    identity.push_back(i);
    inverse.push_back(i);
  }
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                        std::move(identity), std::move(inverse));
}

std::vector<int> FiniteGroupoid::component_of(int x) const {
  std::vector<bool> seen(static_cast<size_t>(num_objects()), false);
  std::vector<int> stack{x}, out;
  seen[static_cast<size_t>(x)] = true;
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    out.push_back(y);
    for (int g = 0; g < num_arrows(); ++g) {
      if (src(g) == y && !seen[static_cast<size_t>(tgt(g))]) {
        seen[static_cast<size_t>(tgt(g))] = true;
        stack.push_back(tgt(g));
      }
      if (tgt(g) == y && !seen[static_cast<size_t>(src(g))]) {
        seen[static_cast<size_t>(src(g))] = true;
        stack.push_back(src(g));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroupoid::vertex_group(int x) const {
  std::vector<int> out;
  for (int g = 0; g < num_arrows(); ++g)
    if (src(g) == x && tgt(g) == x) out.push_back(g);
  return out;
}

Nerve::Nerve(const FiniteGroupoid& g, int max_level) : g_(&g), max_level_(max_level) {
  levels_.resize(static_cast<size_t>(max_level + 1));
  index_.resize(static_cast<size_t>(max_level + 1));
  for (int x = 0; x < g.num_objects(); ++x) levels_[0].push_back({x});
  if (max_level >= 1)
    for (int a = 0; a < g.num_arrows(); ++a) levels_[1].push_back({a});
  for (int n = 2; n <= max_level; ++n)
    for (const auto& t : levels_[static_cast<size_t>(n - 1)])
      for (int a = 0; a < g.num_arrows(); ++a)
        if (g.src(t.back()) == g.tgt(a)) {
          auto ext = t;
          ext.push_back(a);
          levels_[static_cast<size_t>(n)].push_back(std::move(ext));
        }
  for (int n = 0; n <= max_level; ++n)
    for (int i = 0; i < size(n); ++i) index_[static_cast<size_t>(n)][tuple(n, i)] = i;
}

int Nerve::index_of(int n, const std::vector<int>& tuple) const {
  auto it = index_[static_cast<size_t>(n)].find(tuple);
  if (it == index_[static_cast<size_t>(n)].end())
    throw PresentationError("tuple not found in nerve level");
  return it->second;
}

std::vector<int> Nerve::face(int i, int n, const std::vector<int>& t) const {
  if (n < 1 || i < 0 || i > n) throw PresentationError("nerve face index out of range");
  if (n == 1) return {i == 0 ? g_->src(t[0]) : g_->tgt(t[0])};
  std::vector<int> out;
  if (i == 0) out.assign(t.begin() + 1, t.end());
  else if (i == n) out.assign(t.begin(), t.end() - 1);
  else {
    out.assign(t.begin(), t.end());
    out[static_cast<size_t>(i - 1)] = g_->compose(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)]);
    out.erase(out.begin() + i);
  }
  return out;
}

std::vector<int> Nerve::degeneracy(int i, int n, const std::vector<int>& t) const {
  if (i < 0 || i > n) throw PresentationError("nerve degeneracy index out of range");
  if (n == 0) return {g_->identity(t[0])};
  std::vector<int> out = t;
  if (i == 0) out.insert(out.begin(), g_->identity(g_->tgt(t[0])));
  else out.insert(out.begin() + i, g_->identity(g_->src(t[static_cast<size_t>(i - 1)])));
  return out;
}

CheckReport Nerve::validate_simplicial_identities() const {
  auto fail = [](const std::string& what, int i, int j, int n) {
    std::ostringstream os;
    os << what << " fails at (i,j)=(" << i << "," << j << "), level " << n;
    return CheckReport{false, os.str()};
  };
  for (int n = 0; n <= max_level_; ++n) {
    for (int idx = 0; idx < size(n); ++idx) {
      const auto& t = tuple(n, idx);
      // eps_i eps_j = eps_{j-1} eps_i for i < j (maps down two levels)
      if (n >= 2)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (face(i, n - 1, face(j, n, t)) != face(j - 1, n - 1, face(i, n, t)))
              return fail("simplicial face identity", i, j, n);
      // eta_i eta_j = eta_{j+1} eta_i for i <= j (maps up two levels)
      if (n + 2 <= max_level_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (degeneracy(i, n + 1, degeneracy(j, n, t)) !=
                degeneracy(j + 1, n + 1, degeneracy(i, n, t)))
              return fail("simplicial degeneracy identity", i, j, n);
      // mixed
      if (n + 1 <= max_level_)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            auto lhs = face(i, n + 1, degeneracy(j, n, t));
            if (i < j) {
              if (n >= 1 && lhs != degeneracy(j - 1, n - 1, face(i, n, t)))
                return fail("mixed identity (i<j)", i, j, n);
            } else if (i == j || i == j + 1) {
              if (lhs != t) return fail("mixed identity (unit)", i, j, n);
            } else {
              if (n >= 1 && i > j + 1 && lhs != degeneracy(j, n - 1, face(i - 1, n, t)))
                return fail("mixed identity (i>j+1)", i, j, n);
            }
          }
    }
  }
  return {};
}

Cochain coboundary(const Nerve& nv, int n, const Cochain& c) {
  if (static_cast<int>(c.size()) != nv.size(n))
    throw PresentationError("cochain has wrong length");
  if (n + 1 > nv.max_level()) throw PresentationError("nerve not materialized deep enough");
  Cochain out(static_cast<size_t>(nv.size(n + 1)));
  for (int idx = 0; idx < nv.size(n + 1); ++idx) {
    const auto& t = nv.tuple(n + 1, idx);
    Rational v(0);
    for (int i = 0; i <= n + 1; ++i) {
      Rational term = c[static_cast<size_t>(nv.index_of(n, nv.face(i, n + 1, t)))];
      if (i % 2 != 0) term = -term;
      v += term;
    }
    out[static_cast<size_t>(idx)] = v;
  }
  return out;
}

Cochain cochain_cup(const Nerve& nv, int m, const Cochain& c1, int n, const Cochain& c2) {
  const FiniteGroupoid& g = nv.groupoid();
  Cochain out(static_cast<size_t>(nv.size(m + n)));
  for (int idx = 0; idx < nv.size(m + n); ++idx) {
    const auto& t = nv.tuple(m + n, idx);
    std::vector<int> front, back;
    if (m + n == 0) {
      front = t;
      back = t;
    } else if (m == 0) {
      front = {g.tgt(t[0])};
      back = t;
    } else if (n == 0) {
      front = t;
      back = {g.src(t[static_cast<size_t>(m - 1)])};
    } else {
      front.assign(t.begin(), t.begin() + m);
      back.assign(t.begin() + m, t.end());
    }
    out[static_cast<size_t>(idx)] = c1[static_cast<size_t>(nv.index_of(m, front))] *
                                    c2[static_cast<size_t>(nv.index_of(n, back))];
  }
  return out;
}

int groupoid_cohomology_dim(const Nerve& nv, int k) {
  if (k + 1 > nv.max_level()) throw PresentationError("nerve not materialized deep enough");
  auto matrix_of = [&](int n) {
    SparseMatrix m(std::max(1, nv.size(n + 1)), std::max(1, nv.size(n)));
    for (int col = 0; col < nv.size(n); ++col) {
      Cochain c(static_cast<size_t>(nv.size(n)));
      c[static_cast<size_t>(col)] = Rational(1);
      Cochain dc = coboundary(nv, n, c);
      for (int row = 0; row < nv.size(n + 1); ++row)
        if (!dc[static_cast<size_t>(row)].is_zero()) m.set(row, col, dc[static_cast<size_t>(row)]);
    }
    return m;
  };
  int dim_kernel = nv.size(k) - rank(matrix_of(k));
  int dim_image = k == 0 ? 0 : rank(matrix_of(k - 1));
  return dim_kernel - dim_image;
}

CheckReport BundleCocycle::validate() const {
  if (static_cast<int>(psi.size()) != base->num_arrows())
    return {false, "cocycle does not cover all arrows"};
  for (int v : psi)
    if (v < 0 || v >= group->size()) return {false, "cocycle value out of range"};
  for (int x = 0; x < base->num_objects(); ++x)
    if (psi[static_cast<size_t>(base->identity(x))] != group->identity())
      return {false, "cocycle of an identity arrow is not the group identity"};
  for (int g1 = 0; g1 < base->num_arrows(); ++g1)
    for (int g2 = 0; g2 < base->num_arrows(); ++g2)
      if (base->composable(g1, g2) &&
          psi[static_cast<size_t>(base->compose(g1, g2))] !=
              group->mul(psi[static_cast<size_t>(g1)], psi[static_cast<size_t>(g2)]))
        return {false, "cocycle is not functorial on (" + base->arrow(g1).name + ", " +
                           base->arrow(g2).name + ")"};
  return {};
}

BundleCocycle trivial_bundle(const FiniteGroupoid& base, const FiniteGroup& group) {
  BundleCocycle b{&base, &group, std::vector<int>(static_cast<size_t>(base.num_arrows()),
                                                  group.identity())};
  return b;
}

TransformationGroupoid transformation_groupoid(const BundleCocycle& b) {
  const FiniteGroupoid& base = *b.base;
  const FiniteGroup& G = *b.group;
  std::vector<std::pair<int, int>> point;
  std::vector<std::pair<int, int>> arrow_data;
  std::vector<std::string> objects;
  for (int x = 0; x < base.num_objects(); ++x)
    for (int g = 0; g < G.size(); ++g) {
      objects.push_back(base.object_name(x) + "|" + G.name(g));
      point.emplace_back(x, g);
    }
  auto pt = [&](int x, int g) { return x * G.size() + g; };
  std::vector<FiniteGroupoid::Arrow> arrows;
  for (int a = 0; a < base.num_arrows(); ++a)
    for (int g = 0; g < G.size(); ++g) {
      int from = pt(base.src(a), g);
      int to = pt(base.tgt(a), G.mul(b.psi[static_cast<size_t>(a)], g));
      arrows.push_back({base.arrow(a).name + "|" + G.name(g), from, to});
      arrow_data.emplace_back(a, from);
    }
  auto ar = [&](int a, int g) { return a * G.size() + g; };
  std::map<std::pair<int, int>, int> compose;
  for (int a1 = 0; a1 < base.num_arrows(); ++a1)
    for (int a2 = 0; a2 < base.num_arrows(); ++a2) {
      if (!base.composable(a1, a2)) continue;
      for (int g = 0; g < G.size(); ++g) {
        // (a1, q) . (a2, p) = (a1 a2, p) with q = a2 . p
        int p = g;
        int q = G.mul(b.psi[static_cast<size_t>(a2)], p);
        compose[{ar(a1, q), ar(a2, p)}] = ar(base.compose(a1, a2), p);
      }
    }
  std::vector<int> identity;
  for (int x = 0; x < base.num_objects(); ++x)
    for (int g = 0; g < G.size(); ++g) identity.push_back(ar(base.identity(x), g));
  std::vector<int> inverse;
  for (int a = 0; a < base.num_arrows(); ++a)
    for (int g = 0; g < G.size(); ++g)
      inverse.push_back(ar(base.inverse(a), G.mul(b.psi[static_cast<size_t>(a)], g)));
  return TransformationGroupoid{
      FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                     std::move(identity), std::move(inverse)),
      std::move(point), std::move(arrow_data)};
}

CheckReport validate_transformation_groupoid(const TransformationGroupoid& t,
                                             const BundleCocycle& b) {
  const FiniteGroupoid& base = *b.base;
  const FiniteGroup& G = *b.group;
  auto axioms = t.q.validate();
  if (!axioms.ok) return axioms;
  // projection is a strict homomorphism
  for (int q1 = 0; q1 < t.q.num_arrows(); ++q1)
    for (int q2 = 0; q2 < t.q.num_arrows(); ++q2) {
      if (!t.q.composable(q1, q2)) continue;
      int lhs = t.project_arrow(t.q.compose(q1, q2));
      int rhs = base.compose(t.project_arrow(q1), t.project_arrow(q2));
      if (lhs != rhs) return {false, "projection fails to be a homomorphism"};
    }
  // right G-action commutes with the structure maps: acting on the base
  // point of an arrow gives an arrow with both endpoints acted on
  int gsize = G.size();
  auto act_obj = [&](int qobj, int g) {
    auto [x, h] = t.point[static_cast<size_t>(qobj)];
    return x * gsize + G.mul(h, g);
  };
  for (int qa = 0; qa < t.q.num_arrows(); ++qa) {
    auto [a, from] = t.arrow_data[static_cast<size_t>(qa)];
    for (int g = 0; g < gsize; ++g) {
      int h = t.point[static_cast<size_t>(from)].second;
      int moved = a * gsize + G.mul(h, g);  // same base arrow, acted base point
      if (t.q.src(moved) != act_obj(t.q.src(qa), g) || t.q.tgt(moved) != act_obj(t.q.tgt(qa), g))
        return {false, "G-action does not commute with the structure maps"};
      if (t.project_arrow(moved) != a) return {false, "G-action does not preserve fibers"};
    }
  }
  return {};
}

CheckReport GeneralizedHom::validate() const {
  if (static_cast<int>(tau.size()) != z_size || static_cast<int>(sigma.size()) != z_size)
    return {false, "momentum maps have wrong size"};
  // left action: total exactly when src(arrow) == tau(z), target-compatible
  for (int a = 0; a < gprime->num_arrows(); ++a)
    for (int z = 0; z < z_size; ++z) {
      auto it = left.find({a, z});
      bool should = gprime->src(a) == tau[static_cast<size_t>(z)];
      if (should != (it != left.end()))
        return {false, "left action domain mismatch"};
      if (it != left.end()) {
        int w = it->second;
        if (w < 0 || w >= z_size) return {false, "left action out of range"};
        if (tau[static_cast<size_t>(w)] != gprime->tgt(a))
          return {false, "left action breaks the tau momentum map"};
        if (sigma[static_cast<size_t>(w)] != sigma[static_cast<size_t>(z)])
          return {false, "left action must preserve sigma"};
      }
    }
  // unit and composition laws for the left action
  for (int z = 0; z < z_size; ++z)
    if (act_left(gprime->identity(tau[static_cast<size_t>(z)]), z) != z)
      return {false, "left action unit law fails"};
  for (int a1 = 0; a1 < gprime->num_arrows(); ++a1)
    for (int a2 = 0; a2 < gprime->num_arrows(); ++a2) {
      if (!gprime->composable(a1, a2)) continue;
      for (int z = 0; z < z_size; ++z)
        if (gprime->src(a2) == tau[static_cast<size_t>(z)])
          if (act_left(gprime->compose(a1, a2), z) != act_left(a1, act_left(a2, z)))
            return {false, "left action is not functorial"};
    }
  // right action symmetrically
  for (int z = 0; z < z_size; ++z)
    for (int a = 0; a < g->num_arrows(); ++a) {
      auto it = right.find({z, a});
      bool should = sigma[static_cast<size_t>(z)] == g->tgt(a);
      if (should != (it != right.end())) return {false, "right action domain mismatch"};
      if (it != right.end()) {
        int w = it->second;
        if (w < 0 || w >= z_size) return {false, "right action out of range"};
        if (sigma[static_cast<size_t>(w)] != g->src(a))
          return {false, "right action breaks the sigma momentum map"};
        if (tau[static_cast<size_t>(w)] != tau[static_cast<size_t>(z)])
          return {false, "right action must preserve tau"};
      }
    }
  for (int z = 0; z < z_size; ++z)
    if (act_right(z, g->identity(sigma[static_cast<size_t>(z)])) != z)
      return {false, "right action unit law fails"};
  for (int z = 0; z < z_size; ++z)
    for (int a1 = 0; a1 < g->num_arrows(); ++a1) {
      if (sigma[static_cast<size_t>(z)] != g->tgt(a1)) continue;
      for (int a2 = 0; a2 < g->num_arrows(); ++a2) {
        if (!g->composable(a1, a2)) continue;
        if (act_right(z, g->compose(a1, a2)) != act_right(act_right(z, a1), a2))
          return {false, "right action is not functorial"};
      }
    }
  // actions commute
  for (int a = 0; a < gprime->num_arrows(); ++a)
    for (int z = 0; z < z_size; ++z) {
      if (gprime->src(a) != tau[static_cast<size_t>(z)]) continue;
      for (int b = 0; b < g->num_arrows(); ++b) {
        if (sigma[static_cast<size_t>(z)] != g->tgt(b)) continue;
        if (act_right(act_left(a, z), b) != act_left(a, act_right(z, b)))
          return {false, "actions do not commute"};
      }
    }
  // principality: free and transitive on tau-fibers
  for (int z1 = 0; z1 < z_size; ++z1)
    for (int z2 = 0; z2 < z_size; ++z2) {
      if (tau[static_cast<size_t>(z1)] != tau[static_cast<size_t>(z2)]) continue;
      int found = -1;
      for (int a = 0; a < g->num_arrows(); ++a) {
        if (sigma[static_cast<size_t>(z1)] != g->tgt(a)) continue;
        if (act_right(z1, a) == z2) {
          if (found >= 0) return {false, "right action is not free on a tau-fiber"};
          found = a;
        }
      }
      if (found < 0) return {false, "right action is not transitive on a tau-fiber"};
    }
  return {};
}

int GeneralizedHom::act_left(int arrow, int z) const {
  auto it = left.find({arrow, z});
  if (it == left.end()) throw PresentationError("left action undefined");
  return it->second;
}

int GeneralizedHom::act_right(int z, int arrow) const {
  auto it = right.find({z, arrow});
  if (it == right.end()) throw PresentationError("right action undefined");
  return it->second;
}

GeneralizedHom identity_generalized_hom(const FiniteGroupoid& g) {
  GeneralizedHom phi;
  phi.gprime = &g;
  phi.g = &g;
  phi.z_size = g.num_arrows();
  for (int z = 0; z < g.num_arrows(); ++z) {
    phi.tau.push_back(g.tgt(z));
    phi.sigma.push_back(g.src(z));
  }
  for (int a = 0; a < g.num_arrows(); ++a)
    for (int z = 0; z < g.num_arrows(); ++z)
      if (g.composable(a, z)) phi.left[{a, z}] = g.compose(a, z);
  for (int z = 0; z < g.num_arrows(); ++z)
    for (int a = 0; a < g.num_arrows(); ++a)
      if (g.composable(z, a)) phi.right[{z, a}] = g.compose(z, a);
  return phi;
}

GeneralizedHom from_strict_hom(const FiniteGroupoid& gprime, const FiniteGroupoid& g,
                               const std::vector<int>& object_map,
                               const std::vector<int>& arrow_map) {
  for (int a = 0; a < gprime.num_arrows(); ++a) {
    if (g.src(arrow_map[static_cast<size_t>(a)]) != object_map[static_cast<size_t>(gprime.src(a))] ||
        g.tgt(arrow_map[static_cast<size_t>(a)]) != object_map[static_cast<size_t>(gprime.tgt(a))])
      throw PresentationError("arrow map does not respect endpoints");
  }
  for (int a1 = 0; a1 < gprime.num_arrows(); ++a1)
    for (int a2 = 0; a2 < gprime.num_arrows(); ++a2)
      if (gprime.composable(a1, a2) &&
          arrow_map[static_cast<size_t>(gprime.compose(a1, a2))] !=
              g.compose(arrow_map[static_cast<size_t>(a1)], arrow_map[static_cast<size_t>(a2)]))
        throw PresentationError("arrow map is not functorial");

  GeneralizedHom phi;
  phi.gprime = &gprime;
  phi.g = &g;
  // Z = pairs (x', gamma) with f0(x') == tgt(gamma)
  std::vector<std::pair<int, int>> zs;
  for (int x = 0; x < gprime.num_objects(); ++x)
    for (int a = 0; a < g.num_arrows(); ++a)
      if (g.tgt(a) == object_map[static_cast<size_t>(x)]) zs.emplace_back(x, a);
  phi.z_size = static_cast<int>(zs.size());
  auto find_z = [&](int x, int a) {
    for (int i = 0; i < phi.z_size; ++i)
      if (zs[static_cast<size_t>(i)] == std::make_pair(x, a)) return i;
    throw PresentationError("internal: missing Z element");
  };
  for (const auto& [x, a] : zs) {
    phi.tau.push_back(x);
    phi.sigma.push_back(g.src(a));
  }
  for (int ap = 0; ap < gprime.num_arrows(); ++ap)
    for (int i = 0; i < phi.z_size; ++i) {
      auto [x, a] = zs[static_cast<size_t>(i)];
      if (gprime.src(ap) != x) continue;
      phi.left[{ap, i}] =
          find_z(gprime.tgt(ap), g.compose(arrow_map[static_cast<size_t>(ap)], a));
    }
  for (int i = 0; i < phi.z_size; ++i) {
    auto [x, a] = zs[static_cast<size_t>(i)];
    for (int b = 0; b < g.num_arrows(); ++b)
      if (g.composable(a, b)) phi.right[{i, b}] = find_z(x, g.compose(a, b));
  }
  return phi;
}

GeneralizedHom compose_generalized(const GeneralizedHom& phi1, const GeneralizedHom& phi2) {
  // phi1: G'' -> G', phi2: G' -> G; composite: G'' -> G.
  if (phi1.g != phi2.gprime)
    throw PresentationError("generalized homomorphisms are not composable");
  const FiniteGroupoid& mid = *phi1.g;
  // pairs (z1, z2) with sigma1(z1) == tau2(z2), modulo (z1 . h, z2) ~ (z1, h . z2)
  std::vector<std::pair<int, int>> pairs;
  for (int z1 = 0; z1 < phi1.z_size; ++z1)
    for (int z2 = 0; z2 < phi2.z_size; ++z2)
      if (phi1.sigma[static_cast<size_t>(z1)] == phi2.tau[static_cast<size_t>(z2)])
        pairs.emplace_back(z1, z2);
  auto pair_index = [&](int z1, int z2) {
    for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
      if (pairs[static_cast<size_t>(i)] == std::make_pair(z1, z2)) return i;
    throw PresentationError("internal: missing fibered pair");
  };
  // union-find over the middle action
  std::vector<int> parent(pairs.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int i) {
    while (parent[static_cast<size_t>(i)] != i) i = parent[static_cast<size_t>(i)] = parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
    return i;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    auto [z1, z2] = pairs[static_cast<size_t>(i)];
    // (z1, z2) ~ (z1 . h, h^{-1} . z2) whenever sigma1(z1) == tgt(h); the
    // fibered-product condition makes tgt(h) == tau2(z2), so h^{-1} acts.
    for (int h = 0; h < mid.num_arrows(); ++h) {
      if (phi1.sigma[static_cast<size_t>(z1)] != mid.tgt(h)) continue;
      int z1h = phi1.act_right(z1, h);
      int hz2 = phi2.act_left(mid.inverse(h), z2);
      unite(i, pair_index(z1h, hz2));
    }
  }
  std::vector<int> rep;  // class representative per pair
  std::map<int, int> class_of_root;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    int r = find(i);
    if (!class_of_root.count(r)) {
      class_of_root[r] = static_cast<int>(class_of_root.size());
      rep.push_back(i);
    }
  }
  GeneralizedHom out;
  out.gprime = phi1.gprime;
  out.g = phi2.g;
  out.z_size = static_cast<int>(rep.size());
  auto class_of = [&](int z1, int z2) { return class_of_root.at(find(pair_index(z1, z2))); };
  for (int c = 0; c < out.z_size; ++c) {
    auto [z1, z2] = pairs[static_cast<size_t>(rep[static_cast<size_t>(c)])];
    out.tau.push_back(phi1.tau[static_cast<size_t>(z1)]);
    out.sigma.push_back(phi2.sigma[static_cast<size_t>(z2)]);
  }
  for (int a = 0; a < out.gprime->num_arrows(); ++a)
    for (int c = 0; c < out.z_size; ++c) {
      auto [z1, z2] = pairs[static_cast<size_t>(rep[static_cast<size_t>(c)])];
      if (out.gprime->src(a) != out.tau[static_cast<size_t>(c)]) continue;
      out.left[{a, c}] = class_of(phi1.act_left(a, z1), z2);
    }
  for (int c = 0; c < out.z_size; ++c)
    for (int b = 0; b < out.g->num_arrows(); ++b) {
      auto [z1, z2] = pairs[static_cast<size_t>(rep[static_cast<size_t>(c)])];
      if (out.sigma[static_cast<size_t>(c)] != out.g->tgt(b)) continue;
      out.right[{c, b}] = class_of(z1, phi2.act_right(z2, b));
    }
  return out;
}

namespace {

// Deterministic base point per object: the smallest z in the tau-fiber.
std::vector<int> base_points(const GeneralizedHom& phi) {
  std::vector<int> bp(static_cast<size_t>(phi.gprime->num_objects()), -1);
  for (int z = 0; z < phi.z_size; ++z)
    if (bp[static_cast<size_t>(phi.tau[static_cast<size_t>(z)])] < 0)
      bp[static_cast<size_t>(phi.tau[static_cast<size_t>(z)])] = z;
  for (int x = 0; x < phi.gprime->num_objects(); ++x)
    if (bp[static_cast<size_t>(x)] < 0)
      throw PresentationError("Z does not cover every object (not principal)");
  return bp;
}

// The unique base arrow gamma with gammaprime . z_src = z_tgt . gamma.
int sigma_of_arrow(const GeneralizedHom& phi, const std::vector<int>& bp, int aprime) {
  int zsrc = bp[static_cast<size_t>(phi.gprime->src(aprime))];
  int ztgt = bp[static_cast<size_t>(phi.gprime->tgt(aprime))];
  int moved = phi.act_left(aprime, zsrc);
  int found = -1;
  for (int a = 0; a < phi.g->num_arrows(); ++a) {
    if (phi.sigma[static_cast<size_t>(ztgt)] != phi.g->tgt(a)) continue;
    if (phi.act_right(ztgt, a) == moved) {
      if (found >= 0) throw PresentationError("principality violated: non-unique transporter");
      found = a;
    }
  }
  if (found < 0) throw PresentationError("principality violated: no transporter");
  return found;
}

}  // namespace

BundleCocycle pullback_bundle(const GeneralizedHom& phi, const BundleCocycle& b) {
  auto rep = phi.validate();
  if (!rep.ok) throw PresentationError("Z is not principal: " + rep.detail);
  if (b.base != phi.g) throw PresentationError("bundle lives over the wrong groupoid");
  auto bp = base_points(phi);
  BundleCocycle out{phi.gprime, b.group, {}};
  out.psi.reserve(static_cast<size_t>(phi.gprime->num_arrows()));
  for (int a = 0; a < phi.gprime->num_arrows(); ++a)
    out.psi.push_back(b.psi[static_cast<size_t>(sigma_of_arrow(phi, bp, a))]);
  auto check = out.validate();
  if (!check.ok) throw PresentationError("pulled-back cocycle invalid: " + check.detail);
  return out;
}

PullbackGroupoid pullback_groupoid(const GeneralizedHom& phi) {
  auto rep = phi.validate();
  if (!rep.ok) throw PresentationError("Z is not principal: " + rep.detail);
  const FiniteGroupoid& gp = *phi.gprime;
  std::vector<std::tuple<int, int, int>> arrow_data;
  std::vector<int> tau_arrow, sigma_arrow;
  std::vector<std::string> objects;
  for (int z = 0; z < phi.z_size; ++z) objects.push_back("z" + std::to_string(z));
  std::vector<FiniteGroupoid::Arrow> arrows;
  std::map<std::tuple<int, int, int>, int> arrow_index;
  for (int z1 = 0; z1 < phi.z_size; ++z1)
    for (int a = 0; a < gp.num_arrows(); ++a) {
      if (phi.tau[static_cast<size_t>(z1)] != gp.tgt(a)) continue;
      for (int z2 = 0; z2 < phi.z_size; ++z2) {
        if (phi.tau[static_cast<size_t>(z2)] != gp.src(a)) continue;
        arrow_index[{z1, a, z2}] = static_cast<int>(arrows.size());
        arrows.push_back({"(" + std::to_string(z1) + "," + gp.arrow(a).name + "," +
                              std::to_string(z2) + ")",
                          z2, z1});
        arrow_data.emplace_back(z1, a, z2);
      }
    }
  std::map<std::pair<int, int>, int> compose;
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i)
    for (int j = 0; j < static_cast<int>(arrows.size()); ++j) {
      auto [z1, a1, z2] = arrow_data[static_cast<size_t>(i)];
      auto [w1, a2, w2] = arrow_data[static_cast<size_t>(j)];
      if (z2 != w1) continue;
      compose[{i, j}] = arrow_index.at({z1, gp.compose(a1, a2), w2});
    }
  std::vector<int> identity;
  for (int z = 0; z < phi.z_size; ++z)
    identity.push_back(arrow_index.at({z, gp.identity(phi.tau[static_cast<size_t>(z)]), z}));
  std::vector<int> inverse;
  for (const auto& [z1, a, z2] : arrow_data)
    inverse.push_back(arrow_index.at({z2, gp.inverse(a), z1}));
  for (const auto& [z1, a, z2] : arrow_data) {
    tau_arrow.push_back(a);
    // unique gamma with a . z2 = z1 . gamma
    int moved = phi.act_left(a, z2);
    int found = -1;
    for (int g = 0; g < phi.g->num_arrows(); ++g) {
      if (phi.sigma[static_cast<size_t>(z1)] != phi.g->tgt(g)) continue;
      if (phi.act_right(z1, g) == moved) {
        if (found >= 0) throw PresentationError("principality violated: non-unique transporter");
        found = g;
      }
    }
    if (found < 0) throw PresentationError("principality violated: no transporter");
    sigma_arrow.push_back(found);
  }
  return PullbackGroupoid{
      FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                     std::move(identity), std::move(inverse)),
      std::move(arrow_data), std::move(tau_arrow), std::move(sigma_arrow)};
}

int holonomy(const BundleCocycle& b, int object, int loop_arrow) {
  if (b.base->src(loop_arrow) != object || b.base->tgt(loop_arrow) != object)
    throw PresentationError("arrow is not a loop at the given object");
  return b.psi[static_cast<size_t>(loop_arrow)];
}

HolonomyRep holonomy_rep(const BundleCocycle& b, int object) {
  HolonomyRep rep;
  rep.loops = b.base->vertex_group(object);
  for (int g : rep.loops) rep.images.push_back(b.psi[static_cast<size_t>(g)]);
  return rep;
}

bool bundles_isomorphic(const BundleCocycle& b1, const BundleCocycle& b2) {
  if (b1.base != b2.base || b1.group != b2.group) return false;
  const FiniteGroupoid& base = *b1.base;
  const FiniteGroup& G = *b1.group;
  std::vector<int> eta(static_cast<size_t>(base.num_objects()), -1);
  std::vector<bool> done(static_cast<size_t>(base.num_objects()), false);
  for (int x0 = 0; x0 < base.num_objects(); ++x0) {
    if (done[static_cast<size_t>(x0)]) continue;
    auto comp = base.component_of(x0);
    bool found = false;
    for (int seed = 0; seed < G.size() && !found; ++seed) {
      // propagate eta over a spanning tree, then verify the component
      std::map<int, int> trial;
      trial[x0] = seed;
      std::vector<int> stack{x0};
      while (!stack.empty()) {
        int y = stack.back();
        stack.pop_back();
        for (int a = 0; a < base.num_arrows(); ++a) {
          if (base.src(a) != y && base.tgt(a) != y) continue;
          // psi2(a) = eta(tgt) psi1(a) eta(src)^{-1}
          if (trial.count(base.src(a)) && !trial.count(base.tgt(a))) {
            int val = G.mul(G.mul(b2.psi[static_cast<size_t>(a)], trial[base.src(a)]),
                            G.inverse(b1.psi[static_cast<size_t>(a)]));
            trial[base.tgt(a)] = val;
            stack.push_back(base.tgt(a));
          } else if (trial.count(base.tgt(a)) && !trial.count(base.src(a))) {
            int val = G.mul(G.inverse(b2.psi[static_cast<size_t>(a)]),
                            G.mul(trial[base.tgt(a)], b1.psi[static_cast<size_t>(a)]));
            trial[base.src(a)] = val;
            stack.push_back(base.src(a));
          }
        }
      }
      bool ok = true;
      for (int a = 0; a < base.num_arrows() && ok; ++a) {
        if (!trial.count(base.src(a)) || !trial.count(base.tgt(a))) continue;
        bool in_comp = std::find(comp.begin(), comp.end(), base.src(a)) != comp.end();
        if (!in_comp) continue;
        int lhs = b2.psi[static_cast<size_t>(a)];
        int rhs = G.mul(G.mul(trial[base.tgt(a)], b1.psi[static_cast<size_t>(a)]),
                        G.inverse(trial[base.src(a)]));
        ok = lhs == rhs;
      }
      if (ok) {
        for (int y : comp) {
          eta[static_cast<size_t>(y)] = trial.count(y) ? trial[y] : G.identity();
          done[static_cast<size_t>(y)] = true;
        }
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace weilkit
