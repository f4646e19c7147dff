#include "weilkit/chern_weil.hpp"

#include <sstream>

namespace weilkit {

CheckReport validate_pseudo_connection(const PseudoConnection& pc) {
  return is_connection(pc.host->level(0), pc.theta, pc.action);
}

TotalCurvature total_curvature(const PseudoConnection& pc) {
  const SimplicialGDA& s = *pc.host;
  TotalCurvature tc;
  const AlgebraHom& e0 = s.face(0, 1);
  const AlgebraHom& e1 = s.face(1, 1);
  for (const auto& c : pc.theta.comps) tc.del_theta.comps.push_back(e0(c) - e1(c));
  tc.omega = curvature(s.level(0), pc.theta, pc.action);
  return tc;
}

GBigraded g_bigraded_from_total(const PseudoConnection& pc, const TotalCurvature& tc) {
  GBigraded out;
  for (int i = 0; i < pc.lie().dim(); ++i) {
    BigradedElement b(pc.host);
    b.add(1, tc.del_theta.comps[static_cast<size_t>(i)]);
    b.add(0, tc.omega.comps[static_cast<size_t>(i)]);
    out.push_back(std::move(b));
  }
  return out;
}

GBigraded g_bracket(const SimplicialGDA& s, const LieAlgebraData& lie, const GBigraded& a,
                    const GBigraded& b) {
  GBigraded out(static_cast<size_t>(lie.dim()), BigradedElement(&s));
  for (int i = 0; i < lie.dim(); ++i)
    for (int j = 0; j < lie.dim(); ++j)
      for (int k = 0; k < lie.dim(); ++k) {
        const Rational& f = lie.f(i, j, k);
        if (f.is_zero()) continue;
        BigradedElement c = cup(s, a[static_cast<size_t>(j)], b[static_cast<size_t>(k)]);
        for (const auto& [n, x] : c.levels()) out[static_cast<size_t>(i)].add(n, f * x);
      }
  return out;
}

GBigraded g_delta(const SimplicialGDA& s, const GBigraded& a) {
  GBigraded out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(delta(s, c));
  return out;
}

CheckReport check_bianchi(const PseudoConnection& pc) {
  const SimplicialGDA& s = *pc.host;
  const LieAlgebraData& lie = pc.lie();
  TotalCurvature tc = total_curvature(pc);
  GBigraded omega_total = g_bigraded_from_total(pc, tc);
  GBigraded theta;
  for (const auto& c : pc.theta.comps) theta.push_back(single_level(s, 0, c));

  GBigraded lhs = g_delta(s, omega_total);
  GBigraded br1 = g_bracket(s, lie, omega_total, theta);
  GBigraded br2 = g_bracket(s, lie, theta, omega_total);
  for (int i = 0; i < lie.dim(); ++i) {
    BigradedElement rhs(&s);
    for (const auto& [n, x] : br1[static_cast<size_t>(i)].levels()) rhs.add(n, kHalf * x);
    for (const auto& [n, x] : br2[static_cast<size_t>(i)].levels()) rhs.add(n, -(kHalf * x));
    BigradedElement residual = lhs[static_cast<size_t>(i)] - rhs;
    if (!residual.is_zero()) {
      std::ostringstream os;
      os << "Bianchi residual in component " << i + 1 << " at levels";
      for (const auto& [n, x] : residual.levels()) os << " " << n << ": " << x.str() << ";";
      return {false, os.str()};
    }
  }
  return {};
}

BigradedElement z_theta_fat(const PseudoConnection& pc, const InvariantPolynomial& f) {
  if (f.lie().dim() != pc.lie().dim())
    throw PresentationError("polynomial and connection live over different Lie algebras");
  auto rep = validate_pseudo_connection(pc);
  if (!rep.ok) throw PresentationError("not a pseudo-connection: " + rep.detail);
  int max_level = 2 * f.polynomial_degree();
  FatRealization fat(pc.host);
  FatGVector theta_t = lift_connection(fat, pc.theta, max_level);
  FatGVector omega_t = fat_curvature(fat, theta_t, pc.lie());
  FatElement value = evaluate_invariant_fat(f, omega_t, fat, max_level);
  return integrate(value);
}

SimplicialHom chern_weil_hom(const TensorPowerSGDA& weil_tower, const PseudoConnection& pc,
                             int max_level) {
  const SimplicialGDA& host = *pc.host;
  const LieAlgebraData& lie = pc.lie();
  if (weil_tower.base().lie().dim() != lie.dim())
    throw PresentationError("Weil tower and connection disagree on the Lie algebra");
  SimplicialHom phi{&weil_tower, &host, {}};
  for (int n = 0; n <= max_level; ++n) {
    const GDAlgebra& src = weil_tower.level(n);
    const GDAlgebra& dst = host.level(n);
    auto pm = p_maps(host, n);
    AlgebraHom h{src.table(), dst.table(), {}};
    h.images.resize(static_cast<size_t>(src.tbl().size()), GradedElement::zero(dst.table()));
    for (int s = 0; s <= n; ++s) {
      GVector theta_s = pm[static_cast<size_t>(s)](pc.theta);
      GVector omega_s = curvature(dst, theta_s, pc.action);
      for (int i = 0; i < lie.dim(); ++i) {
        std::string suffix = std::to_string(s) + ".th" + std::to_string(i + 1);
        h.images[static_cast<size_t>(src.tbl().require(suffix))] =
            theta_s.comps[static_cast<size_t>(i)];
        std::string osuffix = std::to_string(s) + ".om" + std::to_string(i + 1);
        h.images[static_cast<size_t>(src.tbl().require(osuffix))] =
            omega_s.comps[static_cast<size_t>(i)];
      }
    }
    phi.at_level.push_back(std::move(h));
  }
  return phi;
}

BigradedElement z_theta_simplicial(const PseudoConnection& pc, const InvariantPolynomial& f) {
  if (f.lie().dim() != pc.lie().dim())
    throw PresentationError("polynomial and connection live over different Lie algebras");
  auto rep = validate_pseudo_connection(pc);
  if (!rep.ok) throw PresentationError("not a pseudo-connection: " + rep.detail);
  int max_level = 2 * f.polynomial_degree();

  GDAlgebra weil = weil_algebra(pc.lie());
  TensorPowerSGDA tower(std::move(weil));
  GVector eta0;
  for (int i = 0; i < pc.lie().dim(); ++i)
    eta0.comps.push_back(tower.level(0).gen("0.th" + std::to_string(i + 1)));
  PseudoConnection universal{&tower, eta0, 0};
  BigradedElement universal_cocycle = z_theta_fat(universal, f);

  SimplicialHom c = chern_weil_hom(tower, pc, max_level);
  return c(universal_cocycle);
}

bool is_basic_levelwise(const SimplicialGDA& s, const BigradedElement& x, int action) {
  for (const auto& [n, e] : x.levels())
    if (!is_basic(s.level(n), e, action)) return false;
  return true;
}

CheckReport check_functoriality(const SimplicialHom& phi, const PseudoConnection& pc,
                                const InvariantPolynomial& f) {
  if (phi.src != pc.host) throw PresentationError("connection does not live on phi's source");
  GVector mapped;
  for (const auto& c : pc.theta.comps) mapped.comps.push_back(phi.at_level.at(0)(c));
  PseudoConnection pc2{phi.dst, mapped, pc.action};
  BigradedElement lhs = z_theta_fat(pc2, f);
  BigradedElement rhs = phi(z_theta_fat(pc, f));
  if (lhs == rhs) return {};
  BigradedElement residual = lhs - rhs;
  std::ostringstream os;
  os << "functoriality residual at levels";
  for (const auto& [n, x] : residual.levels()) os << " " << n;
  return {false, os.str()};
}

IndependenceWitness certify_connection_independence(const PseudoConnection& pc1,
                                                    const PseudoConnection& pc2,
                                                    const InvariantPolynomial& f,
                                                    int level_bound, int degree_bound) {
  if (pc1.host != pc2.host)
    throw PresentationError("connection independence needs a common host");
  BigradedElement z1 = z_theta_fat(pc1, f);
  BigradedElement z2 = z_theta_fat(pc2, f);
  IndependenceWitness w;
  w.difference = z1 - z2;
  if (w.difference.is_zero()) {
    w.primitive = BigradedElement(pc1.host);
    return w;
  }
  auto primitive = solve_delta(*pc1.host, w.difference, level_bound, degree_bound);
  if (!primitive)
    throw WindowError("window-incomplete: no primitive representable in the given window");
  w.primitive = *primitive;
  return w;
}

GVector curvature_via_differences(const FatRealization& fat, const PseudoConnection& pc,
                                  int level) {
  const SimplicialGDA& host = *pc.host;
  const LieAlgebraData& lie = pc.lie();
  int n = level;
  const GDAlgebra& lvl = fat.level(n);
  AlgebraHom emb = fat.embed_level(n, n);
  auto pm = p_maps(host, n);

  // theta_i = p_i^n(theta), Omega_i = p_i^n(Omega), embedded in the level
  GVector omega0 = curvature(host.level(0), pc.theta, pc.action);
  std::vector<GVector> theta_i, omega_i;
  for (int i = 0; i <= n; ++i) {
    theta_i.push_back(emb(pm[static_cast<size_t>(i)](pc.theta)));
    omega_i.push_back(emb(pm[static_cast<size_t>(i)](omega0)));
  }

  auto t_of = [&](int j) {  // t_j with t_0 eliminated
    if (j == 0) {
      GradedElement t0 = lvl.unit();
      for (int k = 1; k <= n; ++k) t0 -= lvl.gen(simplex_t_name(k));
      return t0;
    }
    return lvl.gen(simplex_t_name(j));
  };
  auto dt_of = [&](int j) {
    if (j == 0) {
      GradedElement d0 = lvl.zero();
      for (int k = 1; k <= n; ++k) d0 -= lvl.gen(simplex_dt_name(k));
      return d0;
    }
    return lvl.gen(simplex_dt_name(j));
  };
  // s_i = t_0 + ... + t_i, ds_i = -(dt_{i+1} + ... + dt_n)
  auto ds_of = [&](int i) {
    GradedElement d = lvl.zero();
    for (int j = i + 1; j <= n; ++j) d -= dt_of(j);
    return d;
  };
  auto tail_sum = [&](int k) {  // sum_{i > k} t_i
    GradedElement s = lvl.zero();
    for (int i = k + 1; i <= n; ++i) s += t_of(i);
    return s;
  };

  GVector out;
  out.comps.assign(static_cast<size_t>(lie.dim()), lvl.zero());
  // -sum ds_i ^ (theta_{i+1} - theta_i)
  for (int i = 0; i <= n - 1; ++i) {
    GradedElement dsi = ds_of(i);
    for (int c = 0; c < lie.dim(); ++c) {
      GradedElement diff = theta_i[static_cast<size_t>(i + 1)].comps[static_cast<size_t>(c)] -
                           theta_i[static_cast<size_t>(i)].comps[static_cast<size_t>(c)];
      out.comps[static_cast<size_t>(c)] -= dsi * diff;
    }
  }
  // + sum t_i Omega_i
  for (int i = 0; i <= n; ++i) {
    GradedElement ti = t_of(i);
    for (int c = 0; c < lie.dim(); ++c)
      out.comps[static_cast<size_t>(c)] += ti * omega_i[static_cast<size_t>(i)].comps[static_cast<size_t>(c)];
  }
  // - 1/2 sum_{k,l} ( sum_{i > max(k,l)} t_i - tail(k) tail(l) ) [eta_k, eta_l]
  for (int k = 0; k <= n - 1; ++k)
    for (int l = 0; l <= n - 1; ++l) {
      GradedElement coeff = tail_sum(std::max(k, l)) - tail_sum(k) * tail_sum(l);
      if (coeff.is_zero()) continue;
      for (int i = 0; i < lie.dim(); ++i)
        for (int a = 0; a < lie.dim(); ++a)
          for (int b = 0; b < lie.dim(); ++b) {
            const Rational& f = lie.f(i, a, b);
            if (f.is_zero()) continue;
            GradedElement eka = theta_i[static_cast<size_t>(k + 1)].comps[static_cast<size_t>(a)] -
                                theta_i[static_cast<size_t>(k)].comps[static_cast<size_t>(a)];
            GradedElement elb = theta_i[static_cast<size_t>(l + 1)].comps[static_cast<size_t>(b)] -
                                theta_i[static_cast<size_t>(l)].comps[static_cast<size_t>(b)];
            out.comps[static_cast<size_t>(i)] -= kHalf * f * (coeff * (eka * elb));
          }
    }
  return out;
}

namespace {

GDAlgebra weil_with_gh_actions(const LieAlgebraData& h, const GDAlgebra& a) {
  GDAlgebra wh = weil_algebra(h);
  return with_actions(wh, {zero_action(a.lie(0), wh.table()), wh.action(0)});
}

}  // namespace

BottTuData bott_tu_connection(const LieAlgebraData& h, const GDAlgebra& a, const GVector& theta) {
  if (a.num_actions() < 2)
    throw PresentationError("Bott-Tu construction needs commuting G- and H-structures");
  if (a.lie(1).dim() != h.dim())
    throw PresentationError("H-structure dimension does not match the given Lie algebra");
  auto conn = is_connection(a, theta, 0);
  if (!conn.ok) throw PresentationError("theta is not a G-connection: " + conn.detail);
  for (int j = 0; j < h.dim(); ++j)
    for (const auto& c : theta.comps)
      if (!a.lie_derivative(1, j, c).is_zero())
        throw PresentationError("theta is not H-invariant");

  GDAlgebra wh2 = weil_with_gh_actions(h, a);
  GDAlgebra T = tensor_gda(wh2, a);
  AlgebraHom embL = tensor_embed_left(wh2, a, T);
  AlgebraHom embR = tensor_embed_right(wh2, a, T);

  int gdim = a.lie(0).dim();
  GVector xi;
  xi.comps.assign(static_cast<size_t>(gdim), GradedElement::zero(T.table()));
  for (int k = 0; k < gdim; ++k) {
    GradedElement acc = embR(theta.comps[static_cast<size_t>(k)]);
    for (int i = 0; i < h.dim(); ++i) {
      GradedElement L_ik = -a.contract(1, i, theta.comps[static_cast<size_t>(k)]);
      if (L_ik.is_zero()) continue;
      acc += embL(wh2.gen("th" + std::to_string(i + 1))) * embR(L_ik);
    }
    xi.comps[static_cast<size_t>(k)] = std::move(acc);
  }
  return BottTuData{std::move(T), std::move(xi), std::move(embL), std::move(embR)};
}

WeilToSimplicial::WeilToSimplicial(const LieAlgebraData& h, const GDAlgebra& a, int max_level)
    : h_(h),
      weil_h_(weil_with_gh_actions(h, a)),
      domain_(tensor_gda(weil_h_, a)),
      max_level_(max_level) {
  if (a.num_actions() < 2)
    throw PresentationError("comparison map needs commuting G- and H-structures");
  weil_tower_ = std::make_shared<TensorPowerSGDA>(weil_h_);
  host_ = std::make_shared<TensorWithConstantSGDA>(weil_tower_, a);
  fat_ = std::make_unique<FatRealization>(host_.get());

  // canonical connection of W(h), embedded at level 0 of the host
  GVector eta0;
  for (int i = 0; i < h.dim(); ++i)
    eta0.comps.push_back(host_->level(0).gen("0.0.th" + std::to_string(i + 1)));
  FatGVector theta_t = lift_connection(*fat_, eta0, max_level_);
  FatGVector omega_t = fat_curvature(*fat_, theta_t, h_);

  gen_images_.assign(static_cast<size_t>(domain_.tbl().size()), FatElement{});
  for (int g = 0; g < domain_.tbl().size(); ++g) {
    const std::string& name = domain_.tbl().gen(g).name;
    if (name.rfind("0.th", 0) == 0) {
      int i = std::stoi(name.substr(4)) - 1;
      gen_images_[static_cast<size_t>(g)] = theta_t.comps[static_cast<size_t>(i)];
    } else if (name.rfind("0.om", 0) == 0) {
      int i = std::stoi(name.substr(4)) - 1;
      gen_images_[static_cast<size_t>(g)] = omega_t.comps[static_cast<size_t>(i)];
    } else {
      // right factor: the constant compatible family
      const std::string base = name.substr(2);  // strip "1."
      FatElement fe = fat_zero(*fat_, max_level_);
      for (int n = 0; n <= max_level_; ++n) {
        AlgebraHom to_level = host_->embed_right(n);
        AlgebraHom to_fat = fat_->embed_level(n, n);
        fe.set(n, to_fat(to_level(a.gen(base))));
      }
      gen_images_[static_cast<size_t>(g)] = std::move(fe);
    }
  }
}

BigradedElement WeilToSimplicial::map(const GradedElement& x) const {
  if (x.table() != domain_.table())
    throw PresentationError("comparison map applied outside its domain");
  FatElement acc = fat_zero(*fat_, max_level_);
  for (const auto& [m, c] : x.terms()) {
    FatElement prod = fat_unit(*fat_, max_level_);
    prod *= c;
    for (auto [g, e] : m.factors)
      for (int k = 0; k < e; ++k) prod = prod * gen_images_[static_cast<size_t>(g)];
    acc += prod;
  }
  return integrate(acc);
}

GradedElement WeilToSimplicial::domain_d(const GradedElement& x) const { return domain_.d(x); }

bool WeilToSimplicial::domain_h_basic(const GradedElement& x) const {
  return is_basic(domain_, x, 1);
}

bool WeilToSimplicial::image_h_basic(const BigradedElement& x) const {
  return is_basic_levelwise(*host_, x, 1);
}

}  // namespace weilkit
