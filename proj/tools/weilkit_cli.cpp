// weilkit: batch front end for the exact Chern-Weil engine.
//
// Exit codes: 0 success, 1 mathematical-check failure, 2 input error
// (malformed files, unknown generators, windows too small).

#include <CLI11.hpp>
#include <iostream>

#include "weilkit/chern_weil.hpp"
#include "weilkit/json_io.hpp"

using namespace weilkit;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::vector<std::string> paths;
  std::string lie_path, poly_path, connection_path;
  std::string groupoid_path, bundle_path, object_name;
  std::string g_lie_path, h_lie_path;
  std::string construction = "both";
  std::string host = "tower";
  std::string variant = "collapse";
  std::string format = "json";
  int degree_bound = 8;
  int level_bound = 4;
  int total_degree = 0;
  int max_degree = 3;
  int samples = 25;
  unsigned long long seed = 1;
  bool expect_level0 = false;
};

// Deterministic sampling identical across runs and platforms (splitmix64).
struct Sampler {
  uint64_t state;
  explicit Sampler(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  Rational coefficient() { return Rational(below(9) - 4, 1 + below(3)); }
  GradedElement homogeneous(const TablePtr& t, int degree, int terms = 3) {
    auto basis = degree_window_basis(*t, degree);
    GradedElement x(t);
    if (basis.empty()) return x;
    for (int k = 0; k < terms; ++k)
      x += GradedElement::monomial(t, basis[static_cast<size_t>(below(static_cast<int>(basis.size())))],
                                   coefficient());
    return x;
  }
};

void emit(const Json& j, const Options& opt) {
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    // latex output is presentation-only
    if (j.contains("cocycle_latex")) std::cout << j["cocycle_latex"].get<std::string>();
    else std::cout << "% " << j.dump() << "\n";
  }
}

GDAlgebra perturbation_factor(const LieAlgebraData& glie) {
  // auxiliary factor E = <p1 (deg 1), q1 (deg 2)>, d p1 = q1, zero contraction
  TablePtr t = make_table({{"p1", 1, "e"}, {"q1", 2, "e"}});
  std::vector<GradedElement> d(2, GradedElement::zero(t));
  d[static_cast<size_t>(t->require("p1"))] = GradedElement::generator(t, "q1");
  return GDAlgebra(t, std::move(d), {zero_action(glie, t)});
}

// Pseudo-connection on the tensor tower of `base`, components embedded from
// W(g) generators at level 0, optionally perturbed by an auxiliary basic
// degree-1 element (abelian g only).
struct TowerSetup {
  std::shared_ptr<TensorPowerSGDA> tower;
  GVector theta;
};

TowerSetup tower_with_eta(const GDAlgebra& base, const LieAlgebraData& lie,
                          const std::string& theta_prefix) {
  auto tower = std::make_shared<TensorPowerSGDA>(base);
  GVector theta;
  for (int i = 0; i < lie.dim(); ++i)
    theta.comps.push_back(tower->level(0).gen("0." + theta_prefix + "th" + std::to_string(i + 1)));
  return {std::move(tower), std::move(theta)};
}

int cmd_validate(const Options& opt) {
  Json out;
  out["command"] = "validate";
  Json reports = Json::array();
  bool all_ok = true;
  // a bundle file applies to the most recent groupoid file
  std::unique_ptr<FiniteGroupoid> last_groupoid;
  std::unique_ptr<LoadedBundle> keep_bundle;
  for (const auto& path : opt.paths) {
    Json j = load_json_file(path);
    std::string type = json_type_of(j);
    Json rep;
    rep["file"] = path;
    rep["type"] = type;
    if (type == "lie_algebra") {
      LieAlgebraData lie = parse_lie_algebra(j);
      GDAlgebra w = weil_algebra(lie);
      auto check = validate_presentation(w, opt.degree_bound);
      rep["weil_algebra"] = check.ok ? "pass" : check.detail;
      auto conn = is_connection(w, canonical_connection(w));
      rep["canonical_connection"] = conn.ok ? "pass" : conn.detail;
      all_ok = all_ok && check.ok && conn.ok;
    } else if (type == "gd_algebra") {
      GDAlgebra a = parse_gd_algebra(j);
      auto check = validate_presentation(a, opt.degree_bound);
      rep["presentation"] = check.ok ? "pass" : check.detail;
      all_ok = all_ok && check.ok;
    } else if (type == "groupoid") {
      last_groupoid = std::make_unique<FiniteGroupoid>(parse_groupoid(j));
      auto axioms = last_groupoid->validate();
      rep["axioms"] = axioms.ok ? "pass" : axioms.detail;
      Nerve nerve(*last_groupoid, 4);
      auto simp = nerve.validate_simplicial_identities();
      rep["nerve_simplicial_identities"] = simp.ok ? "pass" : simp.detail;
      all_ok = all_ok && axioms.ok && simp.ok;
    } else if (type == "bundle") {
      if (!last_groupoid)
        throw InputError("bundle file '" + path + "' must follow its base groupoid file");
      keep_bundle = std::make_unique<LoadedBundle>(parse_bundle_file(j, *last_groupoid));
      rep["cocycle"] = "pass";
    } else {
      throw InputError("unsupported fixture type '" + type + "' in " + path);
    }
    reports.push_back(std::move(rep));
  }
  out["reports"] = std::move(reports);
  out["ok"] = all_ok;
  emit(out, opt);
  return all_ok ? kOk : kMathFailure;
}

int cmd_chern_weil(const Options& opt) {
  LieAlgebraData lie = parse_lie_algebra(load_json_file(opt.lie_path));
  GDAlgebra weil = weil_algebra(lie);
  InvariantPolynomial f =
      opt.poly_path.empty()
          ? InvariantPolynomial::from_exponents(
                lie, {{std::vector<int>(static_cast<size_t>(lie.dim()), 0), Rational(1)}})
          : parse_invariant_polynomial(load_json_file(opt.poly_path), lie);

  std::shared_ptr<SimplicialGDA> host;
  GVector theta;
  if (opt.host == "tower") {
    auto setup = tower_with_eta(weil, lie, "");
    host = setup.tower;
    theta = setup.theta;
  } else if (opt.host == "constant") {
    host = std::make_shared<ConstantSGDA>(weil);
    theta = canonical_connection(weil);
  } else {
    throw InputError("unknown host '" + opt.host + "' (tower|constant)");
  }
  if (!opt.connection_path.empty()) {
    // components over W(g) generator names, embedded at level 0
    Json cj = load_json_file(opt.connection_path);
    GVector base_theta = parse_gvector(
        cj.contains("components") ? cj["components"] : cj, weil.table());
    if (opt.host == "tower") {
      AlgebraHom emb = dynamic_cast<const TensorPowerSGDA&>(*host).slot_embedding(0, 0);
      theta = emb(base_theta);
    } else {
      theta = base_theta;
    }
  }
  PseudoConnection pc{host.get(), theta, 0};

  Json out;
  out["command"] = "chern-weil";
  out["lie"] = lie.name();
  out["construction"] = opt.construction;
  BigradedElement result(host.get());
  if (opt.construction == "fat") {
    result = z_theta_fat(pc, f);
  } else if (opt.construction == "simplicial") {
    result = z_theta_simplicial(pc, f);
  } else if (opt.construction == "both") {
    BigradedElement zf = z_theta_fat(pc, f);
    BigradedElement zs = z_theta_simplicial(pc, f);
    bool equal = zf == zs;
    out["constructions_coincide"] = equal;
    if (!equal) {
      out["ok"] = false;
      emit(out, opt);
      return kMathFailure;
    }
    result = zf;
  } else {
    throw InputError("unknown construction '" + opt.construction + "'");
  }
  BigradedElement dz = delta(*host, result);
  out["closed"] = dz.is_zero();
  out["basic"] = is_basic_levelwise(*host, result, 0);
  out["cocycle"] = cocycle_to_json(result);
  if (opt.format == "latex") out["cocycle_latex"] = cocycle_to_latex(result);
  bool ok = dz.is_zero() && out["basic"].get<bool>();
  if (opt.expect_level0) {
    bool level0 = result.levels().empty() ||
                  (result.levels().size() == 1 && result.levels().begin()->first == 0);
    out["supported_at_level0"] = level0;
    ok = ok && level0;
  }
  out["ok"] = ok;
  emit(out, opt);
  return ok ? kOk : kMathFailure;
}

int cmd_bianchi(const Options& opt) {
  LieAlgebraData lie = parse_lie_algebra(load_json_file(opt.lie_path));
  GDAlgebra weil = weil_algebra(lie);
  auto setup = tower_with_eta(weil, lie, "");
  PseudoConnection pc{setup.tower.get(), setup.theta, 0};
  auto rep = check_bianchi(pc);
  Json out;
  out["command"] = "bianchi";
  out["lie"] = lie.name();
  out["ok"] = rep.ok;
  if (!rep.ok) out["residual"] = rep.detail;
  emit(out, opt);
  return rep.ok ? kOk : kMathFailure;
}

int cmd_functoriality(const Options& opt) {
  LieAlgebraData lie = parse_lie_algebra(load_json_file(opt.lie_path));
  InvariantPolynomial f = parse_invariant_polynomial(load_json_file(opt.poly_path), lie);
  GDAlgebra weil = weil_algebra(lie);
  Json out;
  out["command"] = "functoriality";
  out["variant"] = opt.variant;
  int max_level = 2 * f.polynomial_degree() + 1;

  if (opt.variant == "automorphism") {
    if (lie.name() != "so3")
      throw InputError("the automorphism variant is bundled for so3 only");
    // sigma: X1 -> X2, X2 -> -X1, X3 -> X3 (rotation by a signed permutation)
    std::vector<std::vector<long>> M = {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};  // sigma X_j = sum_i M[i][j] X_i
    // target structure: contraction i'_j = i_{sigma^{-1} X_j}
    std::vector<std::vector<long>> Minv = {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}};
    LieAction twisted{lie, {}};
    for (int j = 0; j < 3; ++j) {
      std::vector<GradedElement> row(static_cast<size_t>(weil.tbl().size()),
                                     GradedElement::zero(weil.table()));
      for (int i = 0; i < 3; ++i) {
        // i'_j(th_i) = xi^i(sigma^{-1} X_j) = Minv[i][j]
        long v = Minv[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (v != 0)
          row[static_cast<size_t>(weil.tbl().require("th" + std::to_string(i + 1)))] =
              Rational(v) * GradedElement::unit(weil.table());
      }
      twisted.contraction.push_back(std::move(row));
    }
    GDAlgebra weil_twisted = with_actions(weil, {std::move(twisted)});
    auto src = std::make_shared<TensorPowerSGDA>(weil);
    auto dst = std::make_shared<TensorPowerSGDA>(weil_twisted);
    // base map: th_i -> sum_k M'_{ik} th_k with M'_{ik} = xi^i(sigma X_k)
    AlgebraHom base{weil.table(), weil_twisted.table(), {}};
    base.images.resize(static_cast<size_t>(weil.tbl().size()),
                       GradedElement::zero(weil_twisted.table()));
    for (int i = 0; i < 3; ++i) {
      GradedElement ith(weil_twisted.table()), iom(weil_twisted.table());
      for (int k = 0; k < 3; ++k) {
        long v = M[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (v == 0) continue;
        ith += Rational(v) * weil_twisted.gen("th" + std::to_string(k + 1));
        iom += Rational(v) * weil_twisted.gen("om" + std::to_string(k + 1));
      }
      base.images[static_cast<size_t>(weil.tbl().require("th" + std::to_string(i + 1)))] = ith;
      base.images[static_cast<size_t>(weil.tbl().require("om" + std::to_string(i + 1)))] = iom;
    }
    SimplicialHom phi = slotwise_hom(*src, *dst, base, max_level);
    auto hom_ok = validate_simplicial_hom(phi);
    out["homomorphism"] = hom_ok.ok ? "pass" : hom_ok.detail;
    GVector theta;
    for (int i = 0; i < 3; ++i) theta.comps.push_back(src->level(0).gen("0.th" + std::to_string(i + 1)));
    PseudoConnection pc{src.get(), theta, 0};
    auto rep = check_functoriality(phi, pc, f);
    out["ok"] = hom_ok.ok && rep.ok;
    if (!rep.ok) out["residual"] = rep.detail;
    emit(out, opt);
    return (hom_ok.ok && rep.ok) ? kOk : kMathFailure;
  }

  if (opt.variant != "collapse")
    throw InputError("unknown variant '" + opt.variant + "' (automorphism|collapse)");
  GDAlgebra aux = perturbation_factor(lie);
  GDAlgebra big = tensor_gda(weil, aux);
  auto src = std::make_shared<TensorPowerSGDA>(big);
  auto dst = std::make_shared<TensorPowerSGDA>(weil);
  // base map: identity on W(g), scalar projection on the auxiliary factor
  AlgebraHom base{big.table(), weil.table(), {}};
  base.images.resize(static_cast<size_t>(big.tbl().size()), GradedElement::zero(weil.table()));
  for (int g = 0; g < weil.tbl().size(); ++g)
    base.images[static_cast<size_t>(big.tbl().require("0." + weil.tbl().gen(g).name))] = weil.gen(g);
  SimplicialHom phi = slotwise_hom(*src, *dst, base, max_level);
  auto hom_ok = validate_simplicial_hom(phi);
  out["homomorphism"] = hom_ok.ok ? "pass" : hom_ok.detail;
  GVector theta;
  for (int i = 0; i < lie.dim(); ++i)
    theta.comps.push_back(src->level(0).gen("0.0.th" + std::to_string(i + 1)));
  if (lie.is_abelian())
    theta.comps[0] += src->level(0).gen("0.1.p1");  // basic degree-1 perturbation
  PseudoConnection pc{src.get(), theta, 0};
  auto rep = check_functoriality(phi, pc, f);
  out["ok"] = hom_ok.ok && rep.ok;
  if (!rep.ok) out["residual"] = rep.detail;
  emit(out, opt);
  return (hom_ok.ok && rep.ok) ? kOk : kMathFailure;
}

int cmd_independence(const Options& opt) {
  LieAlgebraData lie = parse_lie_algebra(load_json_file(opt.lie_path));
  if (!lie.is_abelian())
    throw InputError("the bundled perturbation fixture requires an abelian Lie algebra");
  InvariantPolynomial f = parse_invariant_polynomial(load_json_file(opt.poly_path), lie);
  GDAlgebra weil = weil_algebra(lie);
  GDAlgebra big = tensor_gda(weil, perturbation_factor(lie));
  auto tower = std::make_shared<TensorPowerSGDA>(big);
  GVector theta1, theta2;
  for (int i = 0; i < lie.dim(); ++i) {
    theta1.comps.push_back(tower->level(0).gen("0.0.th" + std::to_string(i + 1)));
    theta2.comps.push_back(tower->level(0).gen("0.0.th" + std::to_string(i + 1)));
  }
  theta2.comps[0] += tower->level(0).gen("0.1.p1");
  PseudoConnection pc1{tower.get(), theta1, 0};
  PseudoConnection pc2{tower.get(), theta2, 0};
  auto witness =
      certify_connection_independence(pc1, pc2, f, opt.level_bound, opt.degree_bound);
  // verify the primitive before reporting
  BigradedElement check = delta(*tower, witness.primitive) - witness.difference;
  Json out;
  out["command"] = "independence";
  out["difference"] = cocycle_to_json(witness.difference);
  out["primitive"] = cocycle_to_json(witness.primitive);
  out["verified"] = check.is_zero();
  out["ok"] = check.is_zero();
  emit(out, opt);
  return check.is_zero() ? kOk : kMathFailure;
}

int cmd_bott_tu(const Options& opt) {
  LieAlgebraData glie = parse_lie_algebra(load_json_file(opt.g_lie_path));
  LieAlgebraData hlie = parse_lie_algebra(load_json_file(opt.h_lie_path));
  InvariantPolynomial f =
      opt.poly_path.empty()
          ? InvariantPolynomial::from_exponents(
                glie, {{std::vector<int>(static_cast<size_t>(glie.dim()), 0), Rational(1)}})
          : parse_invariant_polynomial(load_json_file(opt.poly_path), glie);

  // a = W(g) (x) W(h), G acting on the first factor, H on the second
  GDAlgebra wg = weil_algebra(glie);
  GDAlgebra wg2 = with_actions(wg, {wg.action(0), zero_action(hlie, wg.table())});
  GDAlgebra wh = weil_algebra(hlie);
  GDAlgebra wh2 = with_actions(wh, {zero_action(glie, wh.table()), wh.action(0)});
  GDAlgebra a = tensor_gda(wg2, wh2);

  GVector theta;
  for (int i = 0; i < glie.dim(); ++i)
    theta.comps.push_back(a.gen("0.th" + std::to_string(i + 1)));
  bool perturbed = glie.is_abelian();
  if (perturbed) theta.comps[0] += a.gen("1.th1");  // H-contractible correction

  BottTuData bt = bott_tu_connection(hlie, a, theta);
  Json out;
  out["command"] = "bott-tu";
  auto gconn = is_connection(bt.algebra, bt.xi, 0);
  out["g_connection"] = gconn.ok ? "pass" : gconn.detail;
  bool hbasic = true;
  for (int j = 0; j < hlie.dim() && hbasic; ++j)
    for (const auto& c : bt.xi.comps) {
      hbasic = hbasic && bt.algebra.contract(1, j, c).is_zero() &&
               bt.algebra.lie_derivative(1, j, c).is_zero();
    }
  out["h_basic"] = hbasic;

  // z_BT(f) = f(curvature of Xi), pushed through the comparison map
  GVector omega = curvature(bt.algebra, bt.xi, 0);
  GradedElement zbt = evaluate_invariant(f, omega);
  WeilToSimplicial K(hlie, a, 2 * f.polynomial_degree() + 2);
  AlgebraHom bridge = name_matching_hom(bt.algebra.table(), K.domain().table());
  GradedElement zbt_in_domain = bridge(zbt);
  out["zbt_h_basic"] = K.domain_h_basic(zbt_in_domain);
  BigradedElement image = K.map(zbt_in_domain);
  BigradedElement dimage = delta(K.host(), image);
  out["K_zbt_closed"] = dimage.is_zero();
  out["K_zbt_h_basic"] = K.image_h_basic(image);

  // chain-map property on sampled H-basic elements
  Sampler sampler(opt.seed);
  int chain_ok = 0;
  for (int trial = 0; trial < opt.samples; ++trial) {
    int degree = 1 + sampler.below(3);
    auto basis = basic_subspace(K.domain(), degree, 1);
    GradedElement x(K.domain().table());
    if (basis.empty()) { ++chain_ok; continue; }
    for (int k = 0; k < 2; ++k)
      x += sampler.coefficient() * basis[static_cast<size_t>(sampler.below(static_cast<int>(basis.size())))];
    BigradedElement lhs = K.map(K.domain_d(x));
    BigradedElement rhs = delta(K.host(), K.map(x));
    if (lhs == rhs) ++chain_ok;
  }
  out["chain_map_samples"] = opt.samples;
  out["chain_map_passed"] = chain_ok;

  bool ok = gconn.ok && hbasic && out["zbt_h_basic"].get<bool>() && dimage.is_zero() &&
            out["K_zbt_h_basic"].get<bool>() && chain_ok == opt.samples;
  out["ok"] = ok;
  emit(out, opt);
  return ok ? kOk : kMathFailure;
}

int cmd_holonomy(const Options& opt) {
  FiniteGroupoid groupoid = parse_groupoid(load_json_file(opt.groupoid_path));
  LoadedBundle lb = parse_bundle_file(load_json_file(opt.bundle_path), groupoid);
  BundleCocycle bundle = lb.bind(groupoid);
  int object = groupoid.object_index(opt.object_name);
  if (object < 0) {
    std::cerr << "check failed: object '" << opt.object_name << "' not found\n";
    return kMathFailure;
  }
  HolonomyRep rep = holonomy_rep(bundle, object);
  Json out;
  out["command"] = "holonomy";
  out["object"] = opt.object_name;
  Json table = Json::array();
  for (size_t i = 0; i < rep.loops.size(); ++i) {
    Json row;
    row["loop"] = groupoid.arrow(rep.loops[i]).name;
    row["image"] = lb.group->name(rep.images[i]);
    table.push_back(std::move(row));
  }
  out["vertex_group_order"] = rep.loops.size();
  out["representation"] = std::move(table);
  // homomorphism property, exhaustively
  bool hom = true;
  for (int g1 : rep.loops)
    for (int g2 : rep.loops)
      hom = hom && bundle.psi[static_cast<size_t>(groupoid.compose(g1, g2))] ==
                       lb.group->mul(bundle.psi[static_cast<size_t>(g1)],
                                     bundle.psi[static_cast<size_t>(g2)]);
  out["homomorphism"] = hom;
  out["ok"] = hom;
  emit(out, opt);
  return hom ? kOk : kMathFailure;
}

int cmd_cohomology(const Options& opt) {
  Json out;
  out["command"] = "cohomology";
  if (!opt.groupoid_path.empty()) {
    FiniteGroupoid groupoid = parse_groupoid(load_json_file(opt.groupoid_path));
    Nerve nerve(groupoid, opt.max_degree + 1);
    Json dims = Json::array();
    for (int k = 0; k <= opt.max_degree; ++k) dims.push_back(groupoid_cohomology_dim(nerve, k));
    out["dimensions"] = std::move(dims);
    out["ok"] = true;
    emit(out, opt);
    return kOk;
  }
  if (opt.lie_path.empty()) throw InputError("cohomology needs --groupoid or --lie");
  LieAlgebraData lie = parse_lie_algebra(load_json_file(opt.lie_path));
  GDAlgebra weil = weil_algebra(lie);
  TensorPowerSGDA tower(weil);
  auto window = cohomology_window(tower, opt.total_degree, opt.level_bound, opt.degree_bound);
  out["total_degree"] = opt.total_degree;
  out["dimension"] = window.dimension;
  Json reps = Json::array();
  for (const auto& r : window.representatives) reps.push_back(cocycle_to_json(r));
  out["representatives"] = std::move(reps);
  out["ok"] = true;
  emit(out, opt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weilkit: exact Chern-Weil computations for G-differential simplicial algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--degree-bound", opt.degree_bound, "degree bound for windows/validation");
    cmd->add_option("--level-bound", opt.level_bound, "simplicial level bound");
    cmd->add_option("--format", opt.format, "output format: json|latex");
    cmd->add_option("--seed", opt.seed, "seed for randomized property samples");
    cmd->add_option("--samples", opt.samples, "number of randomized samples");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate fixture files");
  validate->add_option("paths", opt.paths, "fixture files")->required();
  add_common(validate);

  CLI::App* chern = app.add_subcommand("chern-weil", "compute the Chern-Weil cocycle");
  chern->add_option("--lie", opt.lie_path, "Lie algebra fixture")->required();
  chern->add_option("--poly", opt.poly_path, "invariant polynomial fixture");
  chern->add_option("--connection", opt.connection_path, "explicit connection components");
  chern->add_option("--construction", opt.construction, "fat|simplicial|both");
  chern->add_option("--host", opt.host, "tower|constant");
  chern->add_flag("--expect-level0", opt.expect_level0, "assert support at level 0 only");
  add_common(chern);

  CLI::App* bianchi = app.add_subcommand("bianchi", "check the Bianchi identity");
  bianchi->add_option("--lie", opt.lie_path, "Lie algebra fixture")->required();
  add_common(bianchi);

  CLI::App* functoriality = app.add_subcommand("functoriality", "z_{phi(theta)} = phi . z_theta");
  functoriality->add_option("--lie", opt.lie_path, "Lie algebra fixture")->required();
  functoriality->add_option("--poly", opt.poly_path, "invariant polynomial fixture")->required();
  functoriality->add_option("--variant", opt.variant, "automorphism|collapse");
  add_common(functoriality);

  CLI::App* independence = app.add_subcommand("independence", "exhibit a delta-primitive");
  independence->add_option("--lie", opt.lie_path, "abelian Lie algebra fixture")->required();
  independence->add_option("--poly", opt.poly_path, "invariant polynomial fixture")->required();
  add_common(independence);

  CLI::App* botttu = app.add_subcommand("bott-tu", "equivariant connection and comparison map");
  botttu->add_option("--g-lie", opt.g_lie_path, "structure Lie algebra fixture")->required();
  botttu->add_option("--h-lie", opt.h_lie_path, "equivariance Lie algebra fixture")->required();
  botttu->add_option("--poly", opt.poly_path, "invariant polynomial fixture");
  add_common(botttu);

  CLI::App* holonomy_cmd = app.add_subcommand("holonomy", "holonomy of a flat bundle");
  holonomy_cmd->add_option("--groupoid", opt.groupoid_path, "groupoid fixture")->required();
  holonomy_cmd->add_option("--bundle", opt.bundle_path, "bundle fixture")->required();
  holonomy_cmd->add_option("--object", opt.object_name, "base object")->required();
  add_common(holonomy_cmd);

  CLI::App* cohomology = app.add_subcommand("cohomology", "cohomology dimensions");
  cohomology->add_option("--groupoid", opt.groupoid_path, "groupoid fixture");
  cohomology->add_option("--lie", opt.lie_path, "Lie algebra fixture (tower cohomology)");
  cohomology->add_option("--max-degree", opt.max_degree, "top degree for groupoid cohomology");
  cohomology->add_option("--total-degree", opt.total_degree, "total degree for tower cohomology");
  add_common(cohomology);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (chern->parsed()) return cmd_chern_weil(opt);
    if (bianchi->parsed()) return cmd_bianchi(opt);
    if (functoriality->parsed()) return cmd_functoriality(opt);
    if (independence->parsed()) return cmd_independence(opt);
    if (botttu->parsed()) return cmd_bott_tu(opt);
    if (holonomy_cmd->parsed()) return cmd_holonomy(opt);
    if (cohomology->parsed()) return cmd_cohomology(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const WindowError& e) {
    std::cerr << "window error: " << e.what() << "\n";
    return kInputError;
  } catch (const PresentationError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
