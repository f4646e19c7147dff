#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilkit/json_io.hpp"
#include "weilkit/weil.hpp"

using namespace weilkit;

TEST_CASE("Weil differential on generators") {
  SUBCASE("abelian: d th = om, d om = 0") {
    GDAlgebra w = weil_algebra(LieAlgebraData::abelian(1));
    CHECK(w.d(w.gen("th1")) == w.gen("om1"));
    CHECK(w.d(w.gen("om1")).is_zero());
  }
  SUBCASE("so3: d om1 follows the structure constants") {
    GDAlgebra w = weil_algebra(LieAlgebraData::so3());
    GradedElement expected = w.gen("om2") * w.gen("th3") - w.gen("om3") * w.gen("th2");
    CHECK(w.d(w.gen("om1")) == expected);
    CHECK(w.d(w.d(w.gen("th1"))).is_zero());
    CHECK(w.d(w.d(w.gen("om1"))).is_zero());
  }
  SUBCASE("contraction kills the degree-2 generators") {
    GDAlgebra w = weil_algebra(LieAlgebraData::sl2());
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i)
        CHECK(w.contract(0, j, w.gen("om" + std::to_string(i + 1))).is_zero());
  }
  SUBCASE("contraction pairs the degree-1 generators with the dual basis") {
    GDAlgebra w = weil_algebra(LieAlgebraData::sl2());
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        GradedElement got = w.contract(0, j, w.gen("th" + std::to_string(i + 1)));
        CHECK(got == (i == j ? w.unit() : w.zero()));
      }
  }
}

TEST_CASE("canonical connection") {
  GDAlgebra w = weil_algebra(LieAlgebraData::abelian(1));
  GVector eta = canonical_connection(w);
  REQUIRE(eta.comps.size() == 1);
  CHECK(eta.comps[0] == w.gen("th1"));
  CHECK(is_connection(w, eta).ok);
  CHECK(curvature(w, eta).comps[0] == w.gen("om1"));
}

TEST_CASE("invariant polynomial loading") {
  SUBCASE("every polynomial over an abelian algebra is invariant") {
    auto lie = LieAlgebraData::abelian(2, "r2");
    CHECK_NOTHROW(InvariantPolynomial::from_exponents(lie, {{{1, 2}, Rational(3)}}));
  }
  SUBCASE("so3: linear symbols are not invariant, the Killing quadratic is") {
    auto lie = LieAlgebraData::so3();
    CHECK_THROWS_AS(InvariantPolynomial::from_exponents(lie, {{{1, 0, 0}, Rational(1)}}),
                    PresentationError);
    CHECK_NOTHROW(InvariantPolynomial::from_exponents(
        lie, {{{2, 0, 0}, Rational(1)}, {{0, 2, 0}, Rational(1)}, {{0, 0, 2}, Rational(1)}}));
  }
  SUBCASE("sl2 Killing element") {
    auto lie = LieAlgebraData::sl2();
    CHECK_NOTHROW(InvariantPolynomial::from_exponents(
        lie, {{{2, 0, 0}, Rational(1)}, {{0, 1, 1}, Rational(1)}}));
    CHECK_THROWS_AS(InvariantPolynomial::from_exponents(lie, {{{0, 2, 0}, Rational(1)}}),
                    PresentationError);
  }
  SUBCASE("heisenberg: the symbols vanishing on the derived algebra are invariant") {
    auto lie = LieAlgebraData::heisenberg3();
    CHECK_NOTHROW(InvariantPolynomial::from_exponents(lie, {{{1, 0, 0}, Rational(1)}}));
    CHECK_NOTHROW(InvariantPolynomial::from_exponents(lie, {{{0, 1, 0}, Rational(1)}}));
    CHECK_THROWS_AS(InvariantPolynomial::from_exponents(lie, {{{0, 0, 1}, Rational(1)}}),
                    PresentationError);
  }
}

TEST_CASE("invariant evaluation") {
  auto lie = LieAlgebraData::abelian(1);
  GDAlgebra w = weil_algebra(lie);
  GVector omega = curvature(w, canonical_connection(w));
  SUBCASE("f = xi substitutes the curvature") {
    auto f = InvariantPolynomial::from_exponents(lie, {{{1}, Rational(1)}});
    CHECK(evaluate_invariant(f, omega) == w.gen("om1"));
  }
  SUBCASE("f = xi^2") {
    auto f = InvariantPolynomial::from_exponents(lie, {{{2}, Rational(1)}});
    CHECK(evaluate_invariant(f, omega) == w.gen("om1") * w.gen("om1"));
  }
  SUBCASE("constants evaluate to multiples of the unit") {
    auto f = InvariantPolynomial::from_exponents(lie, {{{0}, Rational(7, 3)}});
    CHECK(evaluate_invariant(f, omega) == GradedElement::scalar(w.table(), Rational(7, 3)));
  }
  SUBCASE("odd-degree components are rejected") {
    auto f = InvariantPolynomial::from_exponents(lie, {{{1}, Rational(1)}});
    GVector odd;
    odd.comps.push_back(w.gen("th1"));
    CHECK_THROWS_AS(evaluate_invariant(f, odd), PresentationError);
  }
}

TEST_CASE("evaluated invariants are closed and basic") {
  struct Fixture {
    LieAlgebraData lie;
    InvariantPolynomial poly;
  };
  std::vector<Fixture> fixtures;
  {
    auto u1 = LieAlgebraData::abelian(1);
    fixtures.push_back({u1, InvariantPolynomial::from_exponents(u1, {{{2}, Rational(1)}})});
    auto so3 = LieAlgebraData::so3();
    fixtures.push_back(
        {so3, InvariantPolynomial::from_exponents(
                  so3, {{{2, 0, 0}, Rational(1)}, {{0, 2, 0}, Rational(1)}, {{0, 0, 2}, Rational(1)}})});
    auto sl2 = LieAlgebraData::sl2();
    fixtures.push_back({sl2, InvariantPolynomial::from_exponents(
                                 sl2, {{{2, 0, 0}, Rational(1)}, {{0, 1, 1}, Rational(1)}})});
  }
  for (const auto& fx : fixtures) {
    CAPTURE(fx.lie.name());
    GDAlgebra w = weil_algebra(fx.lie);
    GVector omega = curvature(w, canonical_connection(w));
    GradedElement z = evaluate_invariant(fx.poly, omega);
    CHECK(!z.is_zero());
    CHECK(w.d(z).is_zero());
    CHECK(is_basic(w, z));
  }
}

TEST_CASE("polynomial product stays invariant") {
  auto lie = LieAlgebraData::so3();
  auto killing = InvariantPolynomial::from_exponents(
      lie, {{{2, 0, 0}, Rational(1)}, {{0, 2, 0}, Rational(1)}, {{0, 0, 2}, Rational(1)}});
  auto square = multiply(killing, killing);
  CHECK(square.polynomial_degree() == 4);
}

TEST_CASE("presentation JSON round-trips") {
  GDAlgebra w = weil_algebra(LieAlgebraData::sl2());
  Json j = gd_algebra_to_json(w);
  GDAlgebra back = parse_gd_algebra(j);
  REQUIRE(back.tbl().size() == w.tbl().size());
  for (int g = 0; g < w.tbl().size(); ++g) {
    CHECK(back.tbl().gen(g).name == w.tbl().gen(g).name);
    CHECK(back.tbl().gen(g).degree == w.tbl().gen(g).degree);
    // images agree term by term under the name identification
    AlgebraHom bridge = name_matching_hom(w.table(), back.table());
    CHECK(back.d_images()[static_cast<size_t>(g)] ==
          bridge(w.d_images()[static_cast<size_t>(g)]));
  }
  CHECK(Json(gd_algebra_to_json(back)) == j);
  CHECK(validate_presentation(back, 5).ok);
}
