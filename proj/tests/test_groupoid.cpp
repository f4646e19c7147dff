#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weilkit/groupoid.hpp"

using namespace weilkit;

namespace {

// Generalized homomorphism from the pair groupoid on k objects to the
// one-point trivial groupoid: Z = k points over one object.
GeneralizedHom pair_to_point(const FiniteGroupoid& pair_k, const FiniteGroupoid& point) {
  GeneralizedHom phi;
  phi.gprime = &pair_k;
  phi.g = &point;
  phi.z_size = pair_k.num_objects();
  phi.tau.resize(static_cast<size_t>(phi.z_size));
  phi.sigma.assign(static_cast<size_t>(phi.z_size), 0);
  for (int z = 0; z < phi.z_size; ++z) phi.tau[static_cast<size_t>(z)] = z;
  for (int a = 0; a < pair_k.num_arrows(); ++a)
    phi.left[{a, pair_k.src(a)}] = pair_k.tgt(a);
  for (int z = 0; z < phi.z_size; ++z) phi.right[{z, 0}] = z;
  return phi;
}

// The inverse direction: from the point groupoid to the pair groupoid,
// witnessing their Morita equivalence with the same bibundle read backwards.
GeneralizedHom point_to_pair(const FiniteGroupoid& point, const FiniteGroupoid& pair_k) {
  GeneralizedHom phi;
  phi.gprime = &point;
  phi.g = &pair_k;
  phi.z_size = pair_k.num_objects();
  phi.tau.assign(static_cast<size_t>(phi.z_size), 0);
  phi.sigma.resize(static_cast<size_t>(phi.z_size));
  for (int z = 0; z < phi.z_size; ++z) phi.sigma[static_cast<size_t>(z)] = z;
  for (int z = 0; z < phi.z_size; ++z) phi.left[{point.identity(0), z}] = z;
  for (int z = 0; z < phi.z_size; ++z)
    for (int a = 0; a < pair_k.num_arrows(); ++a)
      if (pair_k.tgt(a) == z) phi.right[{z, a}] = pair_k.src(a);
  return phi;
}

}  // namespace

TEST_CASE("finite groups") {
  SUBCASE("cyclic groups satisfy the axioms") {
    for (int n = 1; n <= 6; ++n) CHECK(FiniteGroup::cyclic(n).size() == n);
  }
  SUBCASE("a broken table is rejected") {
    CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {{0, 0}, {0, 0}}), PresentationError);
  }
}

TEST_CASE("groupoid axioms and constructions") {
  SUBCASE("group, pair, and discrete groupoids all validate") {
    CHECK(FiniteGroupoid::from_group(FiniteGroup::cyclic(4)).validate().ok);
    CHECK(FiniteGroupoid::pair_groupoid(3).validate().ok);
    CHECK(FiniteGroupoid::discrete(4).validate().ok);
  }
  SUBCASE("missing composition entries are caught") {
    std::vector<FiniteGroupoid::Arrow> arrows{{"e", 0, 0}, {"g", 0, 0}};
    std::map<std::pair<int, int>, int> compose{{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}};
    CHECK_THROWS_AS(FiniteGroupoid({"*"}, arrows, compose, {0}, {0, 1}), PresentationError);
  }
}

TEST_CASE("nerve levels count composable tuples") {
  SUBCASE("one-object Z/2 has 2^n tuples") {
    FiniteGroupoid z2 = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
    Nerve nerve(z2, 4);
    CHECK(nerve.size(0) == 1);
    CHECK(nerve.size(1) == 2);
    CHECK(nerve.size(2) == 4);
    CHECK(nerve.size(3) == 8);
  }
  SUBCASE("discrete groupoids have constant nerve") {
    FiniteGroupoid d = FiniteGroupoid::discrete(5);
    Nerve nerve(d, 4);
    for (int n = 0; n <= 4; ++n) CHECK(nerve.size(n) == 5);
  }
  SUBCASE("pair groupoid on k objects has k^{n+1} tuples") {
    FiniteGroupoid pair3 = FiniteGroupoid::pair_groupoid(3);
    Nerve nerve(pair3, 3);
    CHECK(nerve.size(0) == 3);
    CHECK(nerve.size(1) == 9);
    CHECK(nerve.size(2) == 27);
    CHECK(nerve.size(3) == 81);
  }
}

TEST_CASE("nerve simplicial identities hold exhaustively") {
  for (auto make : {+[] { return FiniteGroupoid::from_group(FiniteGroup::cyclic(2)); },
                    +[] { return FiniteGroupoid::from_group(FiniteGroup::cyclic(4)); },
                    +[] { return FiniteGroupoid::pair_groupoid(2); },
                    +[] { return FiniteGroupoid::discrete(3); }}) {
    FiniteGroupoid g = make();
    Nerve nerve(g, 4);
    CHECK(nerve.validate_simplicial_identities().ok);
  }
}

TEST_CASE("groupoid cochain complex") {
  FiniteGroupoid z2 = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
  Nerve nerve(z2, 4);
  SUBCASE("the coboundary of a constant vanishes") {
    Cochain c(static_cast<size_t>(nerve.size(0)), Rational(5));
    for (const auto& v : coboundary(nerve, 0, c)) CHECK(v == Rational(0));
  }
  SUBCASE("on a disconnected base the coboundary of objects is src minus tgt") {
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    Nerve pn(pair2, 2);
    Cochain c(2);
    c[0] = Rational(1);
    Cochain dc = coboundary(pn, 0, c);
    for (int idx = 0; idx < pn.size(1); ++idx) {
      const auto& t = pn.tuple(1, idx);
      Rational expected = (pair2.src(t[0]) == 0 ? Rational(1) : Rational(0)) -
                          (pair2.tgt(t[0]) == 0 ? Rational(1) : Rational(0));
      CHECK(dc[static_cast<size_t>(idx)] == expected);
    }
  }
  SUBCASE("the coboundary squares to zero exhaustively up to level 3") {
    for (int n = 0; n <= 2; ++n)
      for (int basis = 0; basis < nerve.size(n); ++basis) {
        Cochain c(static_cast<size_t>(nerve.size(n)));
        c[static_cast<size_t>(basis)] = Rational(1);
        for (const auto& v : coboundary(nerve, n + 1, coboundary(nerve, n, c)))
          CHECK(v == Rational(0));
      }
  }
  SUBCASE("cup of two 0-cochains is the pointwise product on endpoints") {
    Cochain c1(static_cast<size_t>(nerve.size(0)), Rational(3));
    Cochain c2(static_cast<size_t>(nerve.size(0)), Rational(5));
    Cochain c12 = cochain_cup(nerve, 0, c1, 0, c2);
    for (const auto& v : c12) CHECK(v == Rational(15));
  }
  SUBCASE("cup is associative and satisfies the Leibniz rule exhaustively") {
    auto unit_cochain = [&](int n, int idx) {
      Cochain c(static_cast<size_t>(nerve.size(n)));
      c[static_cast<size_t>(idx)] = Rational(1);
      return c;
    };
    for (int i = 0; i < nerve.size(1); ++i)
      for (int j = 0; j < nerve.size(1); ++j) {
        Cochain a = unit_cochain(1, i), b = unit_cochain(1, j);
        for (int k = 0; k < nerve.size(1); ++k) {
          Cochain c = unit_cochain(1, k);
          CHECK(cochain_cup(nerve, 2, cochain_cup(nerve, 1, a, 1, b), 1, c) ==
                cochain_cup(nerve, 1, a, 2, cochain_cup(nerve, 1, b, 1, c)));
        }
        // d(a u b) = da u b + (-1)^1 a u db for two 1-cochains
        Cochain lhs = coboundary(nerve, 2, cochain_cup(nerve, 1, a, 1, b));
        Cochain rhs = cochain_cup(nerve, 2, coboundary(nerve, 1, a), 1, b);
        Cochain second = cochain_cup(nerve, 1, a, 2, coboundary(nerve, 1, b));
        for (size_t m = 0; m < lhs.size(); ++m) CHECK(lhs[m] == rhs[m] - second[m]);
      }
  }
  SUBCASE("rational cohomology of Z/2 vanishes in degrees 1 to 3") {
    CHECK(groupoid_cohomology_dim(nerve, 0) == 1);
    Nerve deep(z2, 5);
    for (int k = 1; k <= 3; ++k) CHECK(groupoid_cohomology_dim(deep, k) == 0);
  }
  SUBCASE("the pair groupoid is rationally a point") {
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    Nerve pn(pair2, 4);
    CHECK(groupoid_cohomology_dim(pn, 0) == 1);
    for (int k = 1; k <= 2; ++k) CHECK(groupoid_cohomology_dim(pn, k) == 0);
  }
}

TEST_CASE("bundle cocycles") {
  FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  SUBCASE("the mod-2 assignment is functorial") {
    BundleCocycle b{&z4, &z2, {0, 1, 0, 1}};
    CHECK(b.validate().ok);
  }
  SUBCASE("a non-functorial assignment is rejected") {
    BundleCocycle b{&z4, &z2, {0, 1, 1, 1}};
    CHECK(!b.validate().ok);
  }
  SUBCASE("trivial bundles validate over any base") {
    FiniteGroupoid pair3 = FiniteGroupoid::pair_groupoid(3);
    CHECK(trivial_bundle(pair3, z2).validate().ok);
  }
}

TEST_CASE("transformation groupoid") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  SUBCASE("trivial cocycle gives a product structure") {
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    BundleCocycle b = trivial_bundle(pair2, z2);
    TransformationGroupoid t = transformation_groupoid(b);
    CHECK(t.q.num_objects() == pair2.num_objects() * z2.size());
    CHECK(t.q.num_arrows() == pair2.num_arrows() * z2.size());
    CHECK(validate_transformation_groupoid(t, b).ok);
    // with psi trivial every arrow preserves the group coordinate
    for (int qa = 0; qa < t.q.num_arrows(); ++qa)
      CHECK(t.point[static_cast<size_t>(t.q.src(qa))].second ==
            t.point[static_cast<size_t>(t.q.tgt(qa))].second);
  }
  SUBCASE("a point base gives the action groupoid of the group on itself") {
    FiniteGroupoid point = FiniteGroupoid::discrete(1);
    BundleCocycle b = trivial_bundle(point, z2);
    TransformationGroupoid t = transformation_groupoid(b);
    CHECK(t.q.num_objects() == 2);
    CHECK(t.q.num_arrows() == 2);
    CHECK(validate_transformation_groupoid(t, b).ok);
  }
  SUBCASE("the mod-2 fixture passes every axiom exhaustively") {
    FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
    BundleCocycle b{&z4, &z2, {0, 1, 0, 1}};
    REQUIRE(b.validate().ok);
    TransformationGroupoid t = transformation_groupoid(b);
    CHECK(validate_transformation_groupoid(t, b).ok);
    Nerve nerve(t.q, 4);
    CHECK(nerve.validate_simplicial_identities().ok);
  }
}

TEST_CASE("generalized homomorphisms") {
  FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
  SUBCASE("the identity bibundle validates") {
    CHECK(identity_generalized_hom(z4).validate().ok);
  }
  SUBCASE("strict homomorphisms induce valid bibundles") {
    FiniteGroupoid z2g = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
    // mod-2 map z4 -> z2
    GeneralizedHom phi = from_strict_hom(z4, z2g, {0}, {0, 1, 0, 1});
    CHECK(phi.validate().ok);
  }
  SUBCASE("the Morita bibundle between a point and the pair groupoid validates") {
    FiniteGroupoid point = FiniteGroupoid::from_group(FiniteGroup::trivial());
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    CHECK(pair_to_point(pair2, point).validate().ok);
    CHECK(point_to_pair(point, pair2).validate().ok);
  }
}

TEST_CASE("pull-back bundles") {
  FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  BundleCocycle b{&z4, &z2, {0, 1, 0, 1}};
  REQUIRE(b.validate().ok);
  SUBCASE("pull-back along the identity is isomorphic to the original") {
    GeneralizedHom id = identity_generalized_hom(z4);
    BundleCocycle pb = pullback_bundle(id, b);
    CHECK(pb.validate().ok);
    CHECK(bundles_isomorphic(pb, b));
  }
  SUBCASE("pull-back along a strict homomorphism composes the cocycle") {
    FiniteGroupoid z8 = FiniteGroupoid::from_group(FiniteGroup::cyclic(8));
    std::vector<int> arrow_map;
    for (int i = 0; i < 8; ++i) arrow_map.push_back(i % 4);
    GeneralizedHom phi = from_strict_hom(z8, z4, {0}, arrow_map);
    REQUIRE(phi.validate().ok);
    BundleCocycle pb = pullback_bundle(phi, b);
    for (int a = 0; a < 8; ++a)
      CHECK(pb.psi[static_cast<size_t>(a)] ==
            b.psi[static_cast<size_t>(arrow_map[static_cast<size_t>(a)])]);
  }
  SUBCASE("Morita pull-back of the trivial bundle over a point is trivial") {
    FiniteGroupoid point = FiniteGroupoid::from_group(FiniteGroup::trivial());
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    BundleCocycle pt_bundle = trivial_bundle(point, z2);
    GeneralizedHom phi = pair_to_point(pair2, point);
    BundleCocycle pb = pullback_bundle(phi, pt_bundle);
    CHECK(pb.validate().ok);
    CHECK(bundles_isomorphic(pb, trivial_bundle(pair2, z2)));
  }
  SUBCASE("Morita composition round-trips the trivial bundle") {
    FiniteGroupoid point = FiniteGroupoid::from_group(FiniteGroup::trivial());
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    GeneralizedHom down = pair_to_point(pair2, point);   // pair2 -> point
    GeneralizedHom up = point_to_pair(point, pair2);     // point -> pair2
    GeneralizedHom round = compose_generalized(down, up);  // pair2 -> pair2
    REQUIRE(round.validate().ok);
    BundleCocycle tb = trivial_bundle(pair2, z2);
    CHECK(bundles_isomorphic(pullback_bundle(round, tb), tb));
  }
  SUBCASE("pull-back along a composite equals the composite of pull-backs") {
    FiniteGroupoid z8 = FiniteGroupoid::from_group(FiniteGroup::cyclic(8));
    std::vector<int> mod4;
    for (int i = 0; i < 8; ++i) mod4.push_back(i % 4);
    GeneralizedHom phi1 = from_strict_hom(z8, z4, {0}, mod4);  // z8 -> z4
    GeneralizedHom phi2 = identity_generalized_hom(z4);        // z4 -> z4
    GeneralizedHom composite = compose_generalized(phi1, phi2);
    REQUIRE(composite.validate().ok);
    BundleCocycle lhs = pullback_bundle(composite, b);
    BundleCocycle rhs = pullback_bundle(phi1, pullback_bundle(phi2, b));
    CHECK(bundles_isomorphic(lhs, rhs));
  }
}

TEST_CASE("pull-back groupoids") {
  SUBCASE("the identity bibundle reproduces the groupoid up to the arrow chart") {
    FiniteGroupoid z2g = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
    GeneralizedHom id = identity_generalized_hom(z2g);
    PullbackGroupoid pb = pullback_groupoid(id);
    CHECK(pb.groupoid.validate().ok);
    // Z = arrows of Z/2, so the pull-back is the transformation-style cover:
    // two objects, transitive, vertex groups of order |Z/2|
    CHECK(pb.groupoid.num_objects() == 2);
    CHECK(pb.groupoid.num_arrows() == 8);
    CHECK(pb.groupoid.vertex_group(0).size() == 2);
  }
  SUBCASE("a two-point cover of the point group gives the pair groupoid") {
    FiniteGroupoid point = FiniteGroupoid::from_group(FiniteGroup::trivial());
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    GeneralizedHom phi = point_to_pair(point, pair2);
    PullbackGroupoid pb = pullback_groupoid(phi);
    CHECK(pb.groupoid.num_objects() == 2);
    CHECK(pb.groupoid.num_arrows() == 4);
    for (int x = 0; x < 2; ++x) CHECK(pb.groupoid.vertex_group(x).size() == 1);
  }
  SUBCASE("tau and sigma are strict homomorphisms, exhaustively") {
    FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
    GeneralizedHom id = identity_generalized_hom(z4);
    PullbackGroupoid pb = pullback_groupoid(id);
    const FiniteGroupoid& big = pb.groupoid;
    for (int i = 0; i < big.num_arrows(); ++i)
      for (int j = 0; j < big.num_arrows(); ++j) {
        if (!big.composable(i, j)) continue;
        int c = big.compose(i, j);
        CHECK(pb.tau_arrow[static_cast<size_t>(c)] ==
              z4.compose(pb.tau_arrow[static_cast<size_t>(i)],
                         pb.tau_arrow[static_cast<size_t>(j)]));
        CHECK(pb.sigma_arrow[static_cast<size_t>(c)] ==
              z4.compose(pb.sigma_arrow[static_cast<size_t>(i)],
                         pb.sigma_arrow[static_cast<size_t>(j)]));
      }
  }
}

TEST_CASE("holonomy") {
  FiniteGroupoid z4 = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  BundleCocycle b{&z4, &z2, {0, 1, 0, 1}};
  SUBCASE("identity loops map to the identity") {
    CHECK(holonomy(b, 0, z4.identity(0)) == z2.identity());
  }
  SUBCASE("the generator maps to the nonzero class") {
    CHECK(holonomy(b, 0, 1) == 1);
  }
  SUBCASE("non-loops are rejected") {
    FiniteGroupoid pair2 = FiniteGroupoid::pair_groupoid(2);
    BundleCocycle tb = trivial_bundle(pair2, z2);
    int crossing = -1;
    for (int a = 0; a < pair2.num_arrows(); ++a)
      if (pair2.src(a) != pair2.tgt(a)) crossing = a;
    CHECK_THROWS_AS(holonomy(tb, pair2.src(crossing), crossing), PresentationError);
  }
  SUBCASE("the vertex-group representation is a homomorphism, exhaustively") {
    HolonomyRep rep = holonomy_rep(b, 0);
    REQUIRE(rep.loops.size() == 4);
    for (size_t i = 0; i < rep.loops.size(); ++i)
      for (size_t j = 0; j < rep.loops.size(); ++j) {
        int composed = z4.compose(rep.loops[i], rep.loops[j]);
        CHECK(b.psi[static_cast<size_t>(composed)] ==
              z2.mul(rep.images[i], rep.images[j]));
      }
  }
  SUBCASE("trivial bundles give the trivial representation") {
    BundleCocycle tb = trivial_bundle(z4, z2);
    HolonomyRep rep = holonomy_rep(tb, 0);
    for (int image : rep.images) CHECK(image == z2.identity());
  }
}
