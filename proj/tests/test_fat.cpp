#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "weilkit/fat.hpp"
#include "weilkit/weil.hpp"

using namespace weilkit;
using weilkit::testing::Rng;
using weilkit::testing::random_homogeneous;

namespace {

Rational binomial(int n, int k) {
  Rational c(1);
  for (int j = 0; j < k; ++j) c *= Rational(n - j, j + 1);
  return c;
}

// int_0^1 t^p (1-t)^q dt by expanding (1-t)^q and integrating term by term;
// independent of the closed-form factorial formula under test.
Rational beta_integral(int p, int q) {
  Rational v(0);
  for (int j = 0; j <= q; ++j) {
    Rational term = binomial(q, j) / Rational(p + j + 1);
    if (j % 2 != 0) term = -term;
    v += term;
  }
  return v;
}

// Iterated-integral oracle for the simplex moment: Fubini over the last
// coordinate plus the scaling law for the shrunken inner simplex.
Rational simplex_moment_oracle(const std::vector<int>& exps) {
  int n = static_cast<int>(exps.size());
  if (n == 0) return Rational(1);
  int inner_weight = (n - 1);
  for (int i = 0; i + 1 < n; ++i) inner_weight += exps[static_cast<size_t>(i)];
  std::vector<int> rest(exps.begin(), exps.end() - 1);
  return beta_integral(exps.back(), inner_weight) * simplex_moment_oracle(rest);
}

struct TowerSetup {
  std::shared_ptr<TensorPowerSGDA> tower;
  std::shared_ptr<FatRealization> fat;
};

TowerSetup make_setup(const LieAlgebraData& lie) {
  auto tower = std::make_shared<TensorPowerSGDA>(weil_algebra(lie));
  auto fat = std::make_shared<FatRealization>(tower.get());
  return {tower, fat};
}

}  // namespace

TEST_CASE("standalone polynomial simplex forms") {
  TablePtr t2 = simplex_form_table(2);
  GradedElement t1 = simplex_t(t2, 1);
  GradedElement dt1 = simplex_dt(t2, 1);
  CHECK(simplex_d(t1) == dt1);
  CHECK(simplex_d(dt1).is_zero());
  CHECK(simplex_d(simplex_d(t1 * t1 * simplex_t(t2, 2))).is_zero());
  // polynomial coordinates have unbounded exponents
  GradedElement cube = t1 * t1 * t1;
  CHECK(cube.degree() == 0);
  CHECK(simplex_d(cube) == Rational(3) * (t1 * t1 * dt1));
}

TEST_CASE("simplex monomial integrals match the iterated-integral oracle") {
  // all exponent vectors with |a| <= 4 through n <= 3
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> exps(static_cast<size_t>(n), 0);
    std::function<void(int, int)> visit = [&](int pos, int budget) {
      if (pos == n) {
        auto tower = std::make_shared<TensorPowerSGDA>(weil_algebra(LieAlgebraData::abelian(1)));
        FatRealization fat(tower.get());
        const GDAlgebra& lvl = fat.level(n);
        GradedElement form = lvl.unit();
        for (int i = 1; i <= n; ++i)
          for (int e = 0; e < exps[static_cast<size_t>(i - 1)]; ++e)
            form = form * lvl.gen(simplex_t_name(i));
        for (int i = 1; i <= n; ++i) form = form * lvl.gen(simplex_dt_name(i));
        GradedElement value = integrate_simplex_top(form, n, tower->level(n).table());
        Rational expected = simplex_moment_oracle(exps);
        CHECK(value == GradedElement::scalar(tower->level(n).table(), expected));
        return;
      }
      for (int e = 0; e <= budget; ++e) {
        exps[static_cast<size_t>(pos)] = e;
        visit(pos + 1, budget - e);
      }
      exps[static_cast<size_t>(pos)] = 0;
    };
    visit(0, 4);
  }
}

TEST_CASE("named simplex integrals") {
  auto tower = std::make_shared<TensorPowerSGDA>(weil_algebra(LieAlgebraData::abelian(1)));
  FatRealization fat(tower.get());
  SUBCASE("the length of the interval") {
    const GDAlgebra& lvl = fat.level(1);
    GradedElement value = integrate_simplex_top(lvl.gen("@dt01"), 1, tower->level(1).table());
    CHECK(value == GradedElement::unit(tower->level(1).table()));
  }
  SUBCASE("first moment of the interval") {
    const GDAlgebra& lvl = fat.level(1);
    GradedElement value =
        integrate_simplex_top(lvl.gen("@t01") * lvl.gen("@dt01"), 1, tower->level(1).table());
    CHECK(value == GradedElement::scalar(tower->level(1).table(), Rational(1, 2)));
  }
  SUBCASE("first moment of the triangle") {
    const GDAlgebra& lvl = fat.level(2);
    GradedElement value = integrate_simplex_top(
        lvl.gen("@t01") * lvl.gen("@dt01") * lvl.gen("@dt02"), 2, tower->level(2).table());
    CHECK(value == GradedElement::scalar(tower->level(2).table(), Rational(1, 6)));
  }
  SUBCASE("levels of the wrong simplex degree contribute nothing") {
    const GDAlgebra& lvl = fat.level(2);
    GradedElement value =
        integrate_simplex_top(lvl.gen("@dt01"), 2, tower->level(2).table());
    CHECK(value.is_zero());
  }
}

TEST_CASE("lifted connection") {
  auto setup = make_setup(LieAlgebraData::abelian(1));
  GVector theta0;
  theta0.comps.push_back(setup.tower->level(0).gen("0.th1"));
  FatGVector theta = lift_connection(*setup.fat, theta0, 3);
  SUBCASE("level 0 is the connection itself") {
    AlgebraHom emb = setup.fat->embed_level(0, 0);
    CHECK(theta.comps[0].at(0) == emb(theta0.comps[0]));
  }
  SUBCASE("level 1 interpolates the two unit insertions") {
    const GDAlgebra& lvl = setup.fat->level(1);
    GradedElement t1 = lvl.gen("@t01");
    GradedElement expected =
        (lvl.unit() - t1) * lvl.gen("0.th1") + t1 * lvl.gen("1.th1");
    CHECK(theta.comps[0].at(1) == expected);
  }
  SUBCASE("barycentric weights collapse the contraction") {
    for (int n = 0; n <= 3; ++n) {
      GradedElement c = setup.fat->level(n).contract(0, 0, theta.comps[0].at(n));
      CHECK(c == GradedElement::unit(setup.fat->level(n).table()));
    }
  }
  SUBCASE("the lift satisfies the compatibility conditions") {
    CHECK(check_compatibility(theta.comps[0]).ok);
  }
  SUBCASE("lifting preserves invariance on the so3 tower") {
    auto so3 = make_setup(LieAlgebraData::so3());
    const LieAlgebraData& lie = so3.tower->base().lie();
    GVector eta0;
    for (int i = 0; i < 3; ++i)
      eta0.comps.push_back(so3.tower->level(0).gen("0.th" + std::to_string(i + 1)));
    FatGVector eta = lift_connection(*so3.fat, eta0, 2);
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        FatElement inv = fat_lie_derivative(eta.comps[static_cast<size_t>(i)], 0, j);
        for (int k = 0; k < 3; ++k) {
          FatElement term = eta.comps[static_cast<size_t>(k)];
          term *= lie.f(i, j, k);
          inv += term;
        }
        CHECK(inv.entries.empty());
      }
  }
}

TEST_CASE("compatibility checking") {
  auto setup = make_setup(LieAlgebraData::abelian(1));
  SUBCASE("the constant family passes") {
    CHECK(check_compatibility(fat_unit(*setup.fat, 3)).ok);
  }
  SUBCASE("a perturbed level-1 entry fails at level 1") {
    GVector theta0;
    theta0.comps.push_back(setup.tower->level(0).gen("0.th1"));
    FatElement x = lift_connection(*setup.fat, theta0, 2).comps[0];
    const GDAlgebra& lvl = setup.fat->level(1);
    x.set(1, x.at(1) + lvl.gen("@t01") * lvl.gen("0.th1"));
    auto rep = check_compatibility(x);
    CHECK(!rep.ok);
    CHECK(rep.detail.find("(1,") != std::string::npos);
  }
}

TEST_CASE("fat differential") {
  auto setup = make_setup(LieAlgebraData::abelian(1));
  SUBCASE("acts as the algebra differential on simplex-free entries") {
    FatElement x = fat_zero(*setup.fat, 2);
    AlgebraHom emb0 = setup.fat->embed_level(0, 0);
    x.set(0, emb0(setup.tower->slot_embedding(0, 0)(setup.tower->base().gen("th1"))));
    FatElement dx = fat_d(x);
    CHECK(dx.at(0) == emb0(setup.tower->slot_embedding(0, 0)(setup.tower->base().gen("om1"))));
  }
  SUBCASE("Leibniz on a degree-0 simplex factor") {
    const GDAlgebra& lvl = setup.fat->level(1);
    FatElement x = fat_zero(*setup.fat, 1);
    x.set(1, lvl.gen("@t01") * lvl.gen("0.th1"));
    FatElement dx = fat_d(x);
    CHECK(dx.at(1) == lvl.gen("@dt01") * lvl.gen("0.th1") + lvl.gen("@t01") * lvl.gen("0.om1"));
  }
  SUBCASE("squares to zero on random compatible families") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
      GradedElement a = random_homogeneous(rng, setup.tower->level(0).table(), 1 + rng.below(3));
      FatElement x = fat_lift(*setup.fat, a, 3);
      CHECK(fat_d(fat_d(x)).entries.empty());
    }
  }
}

TEST_CASE("compatibility is preserved by the operations") {
  auto setup = make_setup(LieAlgebraData::so3());
  Rng rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    GradedElement a = random_homogeneous(rng, setup.tower->level(0).table(), 1 + rng.below(2));
    GradedElement b = random_homogeneous(rng, setup.tower->level(0).table(), 1 + rng.below(2));
    FatElement fa = fat_lift(*setup.fat, a, 3);
    FatElement fb = fat_lift(*setup.fat, b, 3);
    CHECK(check_compatibility(fa).ok);
    CHECK(check_compatibility(fa * fb).ok);
    CHECK(check_compatibility(fat_d(fa)).ok);
    CHECK(check_compatibility(fat_contract(fa, 0, rng.below(3))).ok);
  }
}

TEST_CASE("integration is a chain map") {
  // I(D x) = delta(I x) on randomized compatible families through level 3
  int checked = 0;
  for (const auto& lie : {LieAlgebraData::abelian(1), LieAlgebraData::so3()}) {
    auto setup = make_setup(lie);
    Rng rng(lie.dim() == 1 ? 101 : 202);
    for (int trial = 0; trial < 30; ++trial) {
      GradedElement a = random_homogeneous(rng, setup.tower->level(0).table(), 1 + rng.below(3));
      GradedElement b = random_homogeneous(rng, setup.tower->level(0).table(), 1 + rng.below(2));
      FatElement x = fat_lift(*setup.fat, a, 3);
      switch (rng.below(4)) {
        case 0: break;
        case 1: x = x * fat_lift(*setup.fat, b, 3); break;
        case 2: x = fat_d(x); break;
        default: x = fat_d(x) * fat_lift(*setup.fat, b, 3); break;
      }
      BigradedElement lhs = integrate(fat_d(x));
      BigradedElement rhs = delta(*setup.tower, integrate(x));
      CHECK(lhs == rhs);
      ++checked;
    }
  }
  CHECK(checked >= 50);
}
