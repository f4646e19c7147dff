#include "weilkit/simplicial.hpp"

#include <sstream>

#include "weilkit/linalg.hpp"

namespace weilkit {

// Builders may recurse into these accessors, so construction happens outside
// the lock; a concurrent duplicate build is discarded and the first stored
// object wins, keeping returned references stable.
const GDAlgebra& SimplicialGDA::level(int n) const {
  if (n < 0) throw PresentationError("negative simplicial level");
  {
    std::scoped_lock lk(mu_);
    auto it = levels_.find(n);
    if (it != levels_.end()) return *it->second;
  }
  auto built = std::make_unique<GDAlgebra>(build_level(n));
  std::scoped_lock lk(mu_);
  auto it = levels_.emplace(n, std::move(built)).first;
  return *it->second;
}

const AlgebraHom& SimplicialGDA::face(int i, int n) const {
  if (n < 1 || i < 0 || i > n) throw PresentationError("face index out of range");
  auto key = std::make_pair(i, n);
  {
    std::scoped_lock lk(mu_);
    auto it = faces_.find(key);
    if (it != faces_.end()) return *it->second;
  }
  auto built = std::make_unique<AlgebraHom>(build_face(i, n));
  std::scoped_lock lk(mu_);
  auto it = faces_.emplace(key, std::move(built)).first;
  return *it->second;
}

const AlgebraHom& SimplicialGDA::degeneracy(int i, int n) const {
  if (n < 0 || i < 0 || i > n) throw PresentationError("degeneracy index out of range");
  auto key = std::make_pair(i, n);
  {
    std::scoped_lock lk(mu_);
    auto it = degeneracies_.find(key);
    if (it != degeneracies_.end()) return *it->second;
  }
  auto built = std::make_unique<AlgebraHom>(build_degeneracy(i, n));
  std::scoped_lock lk(mu_);
  auto it = degeneracies_.emplace(key, std::move(built)).first;
  return *it->second;
}

namespace {

std::string slot_name(int slot, const std::string& base_name) {
  return std::to_string(slot) + "." + base_name;
}

std::string slot_tag(int slot, const std::string& base_tag) {
  std::string digits = std::to_string(slot);
  std::string pad(digits.size() >= 3 ? 0 : 3 - digits.size(), '0');
  return "x" + pad + digits + "." + base_tag;
}

}  // namespace

TensorPowerSGDA::TensorPowerSGDA(GDAlgebra base) : base_(std::move(base)) {}

GDAlgebra TensorPowerSGDA::build_level(int n) const {
  int slots = n + 1;
  std::vector<Generator> gens;
  for (int s = 0; s < slots; ++s)
    for (int g = 0; g < base_.tbl().size(); ++g) {
      const Generator& bg = base_.tbl().gen(g);
      gens.push_back({slot_name(s, bg.name), bg.degree, slot_tag(s, bg.tag)});
    }
  TablePtr t = make_table(std::move(gens));

  auto embed = [&](int s, const GradedElement& x) {
    AlgebraHom h{base_.table(), t, {}};
    for (int g = 0; g < base_.tbl().size(); ++g)
      h.images.push_back(GradedElement::generator(t, slot_name(s, base_.tbl().gen(g).name)));
    return h(x);
  };

  std::vector<GradedElement> d_images;
  d_images.reserve(static_cast<size_t>(t->size()));
  for (int s = 0; s < slots; ++s)
    for (int g = 0; g < base_.tbl().size(); ++g)
      d_images.push_back(embed(s, base_.d_images()[static_cast<size_t>(g)]));
  // table order is slot-major and make_table sorts by (tag, name); slot tags
  // ascend with the slot, but names within one slot sort by (tag, name) of
  // the base, matching the loop order used above only if the base table is
  // already sorted -- it is, by construction of AlgebraTable. Rebuild the
  // image list keyed by name to stay independent of that coincidence.
  std::vector<GradedElement> d_sorted(static_cast<size_t>(t->size()), GradedElement::zero(t));
  {
    size_t idx = 0;
    for (int s = 0; s < slots; ++s)
      for (int g = 0; g < base_.tbl().size(); ++g) {
        int gi = t->require(slot_name(s, base_.tbl().gen(g).name));
        d_sorted[static_cast<size_t>(gi)] = d_images[idx++];
      }
  }

  std::vector<LieAction> actions;
  for (int a = 0; a < base_.num_actions(); ++a) {
    LieAction act{base_.lie(a), {}};
    for (int j = 0; j < base_.lie(a).dim(); ++j) {
      std::vector<GradedElement> row(static_cast<size_t>(t->size()), GradedElement::zero(t));
      for (int s = 0; s < slots; ++s)
        for (int g = 0; g < base_.tbl().size(); ++g) {
          int gi = t->require(slot_name(s, base_.tbl().gen(g).name));
          row[static_cast<size_t>(gi)] =
              embed(s, base_.action(a).contraction[static_cast<size_t>(j)][static_cast<size_t>(g)]);
        }
      act.contraction.push_back(std::move(row));
    }
    actions.push_back(std::move(act));
  }
  return GDAlgebra(t, std::move(d_sorted), std::move(actions));
}

AlgebraHom TensorPowerSGDA::build_face(int i, int n) const {
  const GDAlgebra& src = level(n - 1);
  const GDAlgebra& dst = level(n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int s = 0; s < n; ++s)
    for (int g = 0; g < base_.tbl().size(); ++g) {
      int from = src.tbl().require(slot_name(s, base_.tbl().gen(g).name));
      int to_slot = s < i ? s : s + 1;
      h.images[static_cast<size_t>(from)] =
          dst.gen(slot_name(to_slot, base_.tbl().gen(g).name));
    }
  return h;
}

AlgebraHom TensorPowerSGDA::build_degeneracy(int i, int n) const {
  const GDAlgebra& src = level(n + 1);
  const GDAlgebra& dst = level(n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int s = 0; s < n + 2; ++s)
    for (int g = 0; g < base_.tbl().size(); ++g) {
      int from = src.tbl().require(slot_name(s, base_.tbl().gen(g).name));
      int to_slot = s <= i ? s : (s == i + 1 ? i : s - 1);
      h.images[static_cast<size_t>(from)] =
          dst.gen(slot_name(to_slot, base_.tbl().gen(g).name));
    }
  return h;
}

AlgebraHom TensorPowerSGDA::slot_embedding(int slot, int n) const {
  const GDAlgebra& dst = level(n);
  AlgebraHom h{base_.table(), dst.table(), {}};
  for (int g = 0; g < base_.tbl().size(); ++g)
    h.images.push_back(dst.gen(slot_name(slot, base_.tbl().gen(g).name)));
  return h;
}

GDAlgebra ConstantSGDA::build_level(int) const { return a_; }

TensorWithConstantSGDA::TensorWithConstantSGDA(std::shared_ptr<const SimplicialGDA> inner,
                                               GDAlgebra right)
    : inner_(std::move(inner)), right_(std::move(right)) {}

GDAlgebra TensorWithConstantSGDA::build_level(int n) const {
  return tensor_gda(inner_->level(n), right_);
}

AlgebraHom TensorWithConstantSGDA::embed_inner(int n) const {
  const GDAlgebra& lvl = level(n);
  AlgebraHom h{inner_->level(n).table(), lvl.table(), {}};
  for (int g = 0; g < inner_->level(n).tbl().size(); ++g)
    h.images.push_back(lvl.gen("0." + inner_->level(n).tbl().gen(g).name));
  return h;
}

AlgebraHom TensorWithConstantSGDA::embed_right(int n) const {
  const GDAlgebra& lvl = level(n);
  AlgebraHom h{right_.table(), lvl.table(), {}};
  for (int g = 0; g < right_.tbl().size(); ++g)
    h.images.push_back(lvl.gen("1." + right_.tbl().gen(g).name));
  return h;
}

AlgebraHom TensorWithConstantSGDA::build_face(int i, int n) const {
  const GDAlgebra& src = level(n - 1);
  const GDAlgebra& dst = level(n);
  const GDAlgebra& in_src = inner_->level(n - 1);
  const AlgebraHom& base_face = inner_->face(i, n);
  AlgebraHom to_dst = embed_inner(n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int g = 0; g < in_src.tbl().size(); ++g) {
    int from = src.tbl().require("0." + in_src.tbl().gen(g).name);
    h.images[static_cast<size_t>(from)] = to_dst(base_face.images[static_cast<size_t>(g)]);
  }
  for (int g = 0; g < right_.tbl().size(); ++g) {
    int from = src.tbl().require("1." + right_.tbl().gen(g).name);
    h.images[static_cast<size_t>(from)] = dst.gen("1." + right_.tbl().gen(g).name);
  }
  return h;
}

AlgebraHom TensorWithConstantSGDA::build_degeneracy(int i, int n) const {
  const GDAlgebra& src = level(n + 1);
  const GDAlgebra& dst = level(n);
  const GDAlgebra& in_src = inner_->level(n + 1);
  const AlgebraHom& base_deg = inner_->degeneracy(i, n);
  AlgebraHom to_dst = embed_inner(n);
  AlgebraHom h{src.table(), dst.table(), {}};
  h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
  for (int g = 0; g < in_src.tbl().size(); ++g) {
    int from = src.tbl().require("0." + in_src.tbl().gen(g).name);
    h.images[static_cast<size_t>(from)] = to_dst(base_deg.images[static_cast<size_t>(g)]);
  }
  for (int g = 0; g < right_.tbl().size(); ++g) {
    int from = src.tbl().require("1." + right_.tbl().gen(g).name);
    h.images[static_cast<size_t>(from)] = dst.gen("1." + right_.tbl().gen(g).name);
  }
  return h;
}

GradedElement BigradedElement::at(int n) const {
  auto it = levels_.find(n);
  if (it != levels_.end()) return it->second;
  return GradedElement::zero(host_->level(n).table());
}

void BigradedElement::add(int n, const GradedElement& x) {
  if (x.is_zero()) return;
  if (x.table() != host_->level(n).table())
    throw PresentationError("bigraded entry does not live in its declared level");
  auto it = levels_.find(n);
  if (it == levels_.end()) levels_.emplace(n, x);
  else {
    it->second += x;
    if (it->second.is_zero()) levels_.erase(it);
  }
}

std::optional<int> BigradedElement::total_degree() const {
  std::optional<int> td;
  for (const auto& [n, x] : levels_) {
    auto d = x.degree();
    if (!d) return std::nullopt;
    if (!td) td = n + *d;
    else if (*td != n + *d) return std::nullopt;
  }
  return td;
}

BigradedElement& BigradedElement::operator+=(const BigradedElement& o) {
  if (!host_) host_ = o.host_;
  else if (o.host_ && host_ != o.host_)
    throw PresentationError("bigraded elements live over different hosts");
  for (const auto& [n, x] : o.levels_) add(n, x);
  return *this;
}

BigradedElement& BigradedElement::operator-=(const BigradedElement& o) {
  if (!host_) host_ = o.host_;
  else if (o.host_ && host_ != o.host_)
    throw PresentationError("bigraded elements live over different hosts");
  for (const auto& [n, x] : o.levels_) add(n, -x);
  return *this;
}

BigradedElement single_level(const SimplicialGDA& s, int n, GradedElement x) {
  BigradedElement b(&s);
  b.add(n, x);
  return b;
}

BigradedElement delta(const SimplicialGDA& s, const BigradedElement& x) {
  BigradedElement out(&s);
  for (const auto& [n, xn] : x.levels()) {
    GradedElement dxn = s.level(n).d(xn);
    if (n % 2 != 0) dxn = -dxn;
    out.add(n, dxn);
    for (int i = 0; i <= n + 1; ++i) {
      GradedElement fx = s.face(i, n + 1)(xn);
      if (i % 2 != 0) fx = -fx;
      out.add(n + 1, fx);
    }
  }
  return out;
}

BigradedElement cup(const SimplicialGDA& s, const BigradedElement& a, const BigradedElement& b) {
  BigradedElement out(&s);
  for (const auto& [m, am] : a.levels()) {
    for (int k : am.degrees_present()) {
      GradedElement ak = am.homogeneous_part(k);
      for (const auto& [n, bn] : b.levels()) {
        // raise a from level m to m+n via the trailing faces ...
        GradedElement ar = ak;
        for (int t = m + 1; t <= m + n; ++t) ar = s.face(t, t)(ar);
        // ... and b from level n to m+n via the leading faces
        GradedElement br = bn;
        for (int t = n + 1; t <= n + m; ++t) br = s.face(0, t)(br);
        GradedElement prod = ar * br;
        if ((k * n) % 2 != 0) prod = -prod;
        out.add(m + n, prod);
      }
    }
  }
  return out;
}

std::vector<AlgebraHom> p_maps(const SimplicialGDA& s, int n) {
  std::vector<AlgebraHom> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    AlgebraHom h = identity_hom(s.level(0).table());
    for (int t = 1; t <= n; ++t) {
      int idx = t <= n - i ? t : 0;
      h = compose(s.face(idx, t), h);
    }
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

struct WindowBasis {
  // flattened monomial basis of (+)_{n <= D} A_n^{D-n}
  std::vector<std::pair<int, Monomial>> elems;
  std::map<std::pair<int, Monomial>, int> index;
};

WindowBasis window_basis(const SimplicialGDA& s, int total_degree) {
  WindowBasis wb;
  for (int n = 0; n <= total_degree; ++n) {
    int k = total_degree - n;
    for (auto& m : degree_window_basis(s.level(n).tbl(), k)) {
      wb.index[{n, m}] = static_cast<int>(wb.elems.size());
      wb.elems.emplace_back(n, std::move(m));
    }
  }
  return wb;
}

SparseMatrix delta_matrix(const SimplicialGDA& s, const WindowBasis& from, const WindowBasis& to) {
  SparseMatrix m(std::max<int>(1, static_cast<int>(to.elems.size())),
                 std::max<int>(1, static_cast<int>(from.elems.size())));
  for (int col = 0; col < static_cast<int>(from.elems.size()); ++col) {
    const auto& [n, mono] = from.elems[static_cast<size_t>(col)];
    BigradedElement x = single_level(
        s, n, GradedElement::monomial(s.level(n).table(), mono, Rational(1)));
    BigradedElement dx = delta(s, x);
    for (const auto& [lev, el] : dx.levels())
      for (const auto& [mo, c] : el.terms())
        m.add(to.index.at({lev, mo}), col, c);
  }
  return m;
}

std::vector<Rational> to_vector(const WindowBasis& wb, const BigradedElement& z) {
  std::vector<Rational> v(wb.elems.size());
  for (const auto& [lev, el] : z.levels())
    for (const auto& [mo, c] : el.terms()) {
      auto it = wb.index.find({lev, mo});
      if (it == wb.index.end())
        throw WindowError("window-incomplete: element leaves the represented window");
      v[static_cast<size_t>(it->second)] = c;
    }
  return v;
}

BigradedElement from_vector(const SimplicialGDA& s, const WindowBasis& wb,
                            const std::vector<Rational>& v) {
  BigradedElement out(&s);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const auto& [n, mono] = wb.elems[i];
    out.add(n, GradedElement::monomial(s.level(n).table(), mono, v[i]));
  }
  return out;
}

void require_window(int total_degree, int level_bound, int degree_bound) {
  if (level_bound < total_degree + 1 || degree_bound < total_degree + 1) {
    std::ostringstream os;
    os << "window-incomplete: total degree " << total_degree << " needs level and degree bounds >= "
       << total_degree + 1;
    throw WindowError(os.str());
  }
}

}  // namespace

CohomologyWindow cohomology_window(const SimplicialGDA& s, int total_degree, int level_bound,
                                   int degree_bound) {
  if (total_degree < 0) throw PresentationError("negative total degree");
  require_window(total_degree, level_bound, degree_bound);
  WindowBasis below = total_degree > 0 ? window_basis(s, total_degree - 1) : WindowBasis{};
  WindowBasis here = window_basis(s, total_degree);
  WindowBasis above = window_basis(s, total_degree + 1);

  SparseMatrix out_map = delta_matrix(s, here, above);
  auto ker = kernel(out_map);

  CohomologyWindow result;
  if (here.elems.empty()) return result;

  // image of delta from below, then extend by kernel vectors that enlarge the
  // span; those extensions represent the cohomology classes.
  std::vector<std::vector<Rational>> span_cols;
  if (!below.elems.empty()) {
    SparseMatrix in_map = delta_matrix(s, below, here);
    for (int c = 0; c < static_cast<int>(below.elems.size()); ++c) {
      std::vector<Rational> col(here.elems.size());
      for (const auto& [rc, v] : in_map.entries())
        if (rc.second == c) col[static_cast<size_t>(rc.first)] = v;
      span_cols.push_back(std::move(col));
    }
  }
  auto rank_of = [&](const std::vector<std::vector<Rational>>& cols) {
    SparseMatrix m(std::max<int>(1, static_cast<int>(here.elems.size())),
                   std::max<int>(1, static_cast<int>(cols.size())));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
      for (int r = 0; r < static_cast<int>(here.elems.size()); ++r)
        if (!cols[static_cast<size_t>(c)][static_cast<size_t>(r)].is_zero())
          m.set(r, c, cols[static_cast<size_t>(c)][static_cast<size_t>(r)]);
    return rank(m);
  };
  int base_rank = span_cols.empty() ? 0 : rank_of(span_cols);
  int current_rank = base_rank;
  for (const auto& kv : ker) {
    span_cols.push_back(kv);
    int r = rank_of(span_cols);
    if (r > current_rank) {
      current_rank = r;
      result.representatives.push_back(from_vector(s, here, kv));
    } else {
      span_cols.pop_back();
    }
  }
  result.dimension = static_cast<int>(result.representatives.size());
  return result;
}

std::optional<BigradedElement> solve_delta(const SimplicialGDA& s, const BigradedElement& z,
                                           int level_bound, int degree_bound) {
  auto td = z.total_degree();
  if (!td) {
    if (z.is_zero()) return BigradedElement(&s);
    throw PresentationError("solve_delta requires a homogeneous total degree");
  }
  require_window(*td - 1, level_bound, degree_bound);
  WindowBasis from = window_basis(s, *td - 1);
  WindowBasis to = window_basis(s, *td);
  SparseMatrix m = delta_matrix(s, from, to);
  auto rhs = to_vector(to, z);
  auto x = solve(m, rhs);
  if (!x) return std::nullopt;
  return from_vector(s, from, *x);
}

BigradedElement SimplicialHom::operator()(const BigradedElement& x) const {
  BigradedElement out(dst);
  for (const auto& [n, xn] : x.levels()) {
    if (n >= static_cast<int>(at_level.size()))
      throw WindowError("simplicial homomorphism not materialized deep enough");
    out.add(n, at_level[static_cast<size_t>(n)](xn));
  }
  return out;
}

SimplicialHom slotwise_hom(const TensorPowerSGDA& src, const TensorPowerSGDA& dst,
                           const AlgebraHom& base_hom, int max_level) {
  if (base_hom.src != src.base().table() || base_hom.dst != dst.base().table())
    throw PresentationError("slotwise lift requires a base-to-base homomorphism");
  SimplicialHom phi{&src, &dst, {}};
  for (int n = 0; n <= max_level; ++n) {
    const GDAlgebra& sl = src.level(n);
    AlgebraHom h{sl.table(), dst.level(n).table(), {}};
    h.images.resize(static_cast<size_t>(sl.tbl().size()),
                    GradedElement::zero(dst.level(n).table()));
    for (int s = 0; s <= n; ++s) {
      AlgebraHom emb = dst.slot_embedding(s, n);
      for (int g = 0; g < src.base().tbl().size(); ++g) {
        int from = sl.tbl().require(slot_name(s, src.base().tbl().gen(g).name));
        h.images[static_cast<size_t>(from)] = emb(base_hom.images[static_cast<size_t>(g)]);
      }
    }
    phi.at_level.push_back(std::move(h));
  }
  return phi;
}

CheckReport validate_simplicial_hom(const SimplicialHom& phi) {
  int max_level = static_cast<int>(phi.at_level.size()) - 1;
  for (int n = 0; n <= max_level; ++n) {
    const GDAlgebra& a = phi.src->level(n);
    const GDAlgebra& b = phi.dst->level(n);
    const AlgebraHom& f = phi.at_level[static_cast<size_t>(n)];
    for (int g = 0; g < a.tbl().size(); ++g) {
      GradedElement x = a.gen(g);
      if (!(f(a.d(x)) == b.d(f(x))))
        return {false, "phi does not commute with d at level " + std::to_string(n)};
      for (int act = 0; act < std::min(a.num_actions(), b.num_actions()); ++act)
        for (int j = 0; j < a.lie(act).dim(); ++j)
          if (!(f(a.contract(act, j, x)) == b.contract(act, j, f(x))))
            return {false, "phi does not commute with a contraction at level " + std::to_string(n)};
      if (n >= 1)
        for (int i = 0; i <= n; ++i) {
          // face: A_{n-1} -> A_n; compare phi_n . face against face . phi_{n-1}
          const AlgebraHom& fs = phi.src->face(i, n);
          const AlgebraHom& fd = phi.dst->face(i, n);
          for (int gg = 0; gg < phi.src->level(n - 1).tbl().size(); ++gg) {
            GradedElement y = phi.src->level(n - 1).gen(gg);
            if (!(f(fs(y)) == fd(phi.at_level[static_cast<size_t>(n - 1)](y))))
              return {false, "phi does not commute with face(" + std::to_string(i) + "," +
                                 std::to_string(n) + ")"};
          }
        }
      if (n + 1 <= max_level)
        for (int i = 0; i <= n; ++i) {
          const AlgebraHom& ds = phi.src->degeneracy(i, n);
          const AlgebraHom& dd = phi.dst->degeneracy(i, n);
          for (int gg = 0; gg < phi.src->level(n + 1).tbl().size(); ++gg) {
            GradedElement y = phi.src->level(n + 1).gen(gg);
            if (!(f(ds(y)) == dd(phi.at_level[static_cast<size_t>(n + 1)](y))))
              return {false, "phi does not commute with degeneracy(" + std::to_string(i) + "," +
                                 std::to_string(n) + ")"};
          }
        }
    }
  }
  return {};
}

CheckReport validate_cosimplicial(const SimplicialGDA& s, int max_level) {
  auto gens_of = [&](int n) {
    std::vector<GradedElement> v;
    for (int g = 0; g < s.level(n).tbl().size(); ++g) v.push_back(s.level(n).gen(g));
    return v;
  };
  auto fail = [](const std::string& what, int i, int j, int n) {
    std::ostringstream os;
    os << what << " fails at (i,j)=(" << i << "," << j << "), level " << n;
    return CheckReport{false, os.str()};
  };

  for (int n = 0; n <= max_level; ++n) {
    // eps_j^n eps_i^{n-1} = eps_i^n eps_{j-1}^{n-1} for i < j
    if (n >= 2)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          for (const auto& x : gens_of(n - 2))
            if (!(s.face(j, n)(s.face(i, n - 1)(x)) == s.face(i, n)(s.face(j - 1, n - 1)(x))))
              return fail("coface identity", i, j, n);
    // eta_j^n eta_i^{n+1} = eta_i^n eta_{j+1}^{n+1} for i <= j
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (const auto& x : gens_of(n + 2))
          if (!(s.degeneracy(j, n)(s.degeneracy(i, n + 1)(x)) ==
                s.degeneracy(i, n)(s.degeneracy(j + 1, n + 1)(x))))
            return fail("codegeneracy identity", i, j, n);
    // mixed identities on eta_j^n eps_i^{n+1}
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (const auto& x : gens_of(n)) {
          GradedElement lhs = s.degeneracy(j, n)(s.face(i, n + 1)(x));
          if (i < j) {
            if (n >= 1 && !(lhs == s.face(i, n)(s.degeneracy(j - 1, n - 1)(x))))
              return fail("mixed identity (i<j)", i, j, n);
          } else if (i == j || i == j + 1) {
            if (!(lhs == x)) return fail("mixed identity (unit)", i, j, n);
          } else {
            if (n >= 1 && !(lhs == s.face(i - 1, n)(s.degeneracy(j, n - 1)(x))))
              return fail("mixed identity (i>j+1)", i, j, n);
          }
        }
    // faces and degeneracies are morphisms of G-differential algebras
    for (int i = 0; i <= n && n >= 1; ++i) {
      const AlgebraHom& f = s.face(i, n);
      const GDAlgebra& a = s.level(n - 1);
      const GDAlgebra& b = s.level(n);
      for (const auto& x : gens_of(n - 1)) {
        if (!(f(a.d(x)) == b.d(f(x)))) return fail("face/d commutation", i, 0, n);
        for (int act = 0; act < a.num_actions(); ++act)
          for (int j = 0; j < a.lie(act).dim(); ++j) {
            if (!(f(a.contract(act, j, x)) == b.contract(act, j, f(x))))
              return fail("face/contraction commutation", i, j, n);
            if (!(f(a.lie_derivative(act, j, x)) == b.lie_derivative(act, j, f(x))))
              return fail("face/Lie-derivative commutation", i, j, n);
          }
      }
    }
    for (int i = 0; i <= n; ++i) {
      const AlgebraHom& e = s.degeneracy(i, n);
      const GDAlgebra& a = s.level(n + 1);
      const GDAlgebra& b = s.level(n);
      for (const auto& x : gens_of(n + 1)) {
        if (!(e(a.d(x)) == b.d(e(x)))) return fail("degeneracy/d commutation", i, 0, n);
        for (int act = 0; act < a.num_actions(); ++act)
          for (int j = 0; j < a.lie(act).dim(); ++j)
            if (!(e(a.contract(act, j, x)) == b.contract(act, j, e(x))))
              return fail("degeneracy/contraction commutation", i, j, n);
      }
    }
  }
  return {};
}

}  // namespace weilkit
