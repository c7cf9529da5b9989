#include <doctest.h>

#include <set>

#include "dbl_fixtures.hpp"
#include "wgdbl/dblcat.hpp"

using namespace wgdbl;
using namespace fixtures;

TEST_CASE("H and V embeddings validate") {
  DoubleCategory h = h_double(fix_arrow());
  CHECK(h.X0->num_objects() == 2);
  CHECK(h.X1->num_objects() == 3);
  DoubleCategory v = v_z2();
  CHECK(v.X0->num_arrows() == 2);
  CHECK(v.X1->num_objects() == 1);
  DoubleCategory g = b2a();
  CHECK(g.X1->num_arrows() == 3);
}

TEST_CASE("validate rejects interchange violations") {
  // b2a with a corrupted horizontal composition of cells
  DoubleCategory base = b2a();
  auto p = base.presentation();
  for (auto& e : p.m_arr)
    if (e[0] == "r1" && e[1] == "r1") e[2] = "r0";  // should be r2
  try {
    DoubleCategory::validate(p);
    CHECK(false);
  } catch (const ValidationError& err) {
    CHECK(err.code == "InterchangeViolation");
  }
}

TEST_CASE("presentation round-trips through validate") {
  DoubleCategory d = h_double(fix_posb());
  DoubleCategory again = DoubleCategory::validate(d.presentation());
  CHECK(again.X1->num_objects() == d.X1->num_objects());
  CHECK(again.pairs.apex->num_objects() == d.pairs.apex->num_objects());
}

TEST_CASE("horizontal nerve") {
  DoubleCategory h = h_double(fix_arrow());
  SUBCASE("level 0 is X0") {
    CHECK(horizontal_nerve(h, 0).cat->num_objects() == 2);
  }
  SUBCASE("level 1 is X1") {
    CHECK(horizontal_nerve(h, 1).cat.get() == h.X1.get());
  }
  SUBCASE("level 2 lists the composable pairs") {
    NerveLevel lvl = horizontal_nerve(h, 2);
    // oracle: enumerate composable pairs of FIX-ARROW directly
    CatPtr c = fix_arrow();
    std::set<std::pair<int, int>> expected;
    for (int g = 0; g < c->num_arrows(); ++g)
      for (int f = 0; f < c->num_arrows(); ++f)
        if (c->composable(g, f)) expected.insert({g, f});
    CHECK(expected.size() == 4);  // (1a,1a),(1b,1b),(f,1a),(1b,f)
    CHECK(lvl.cat->num_objects() == static_cast<int>(expected.size()));
    for (const auto& t : lvl.obj_tuples) REQUIRE(t.size() == 2);
  }
}

TEST_CASE("nerve levels match direct enumeration") {
  SUBCASE("H(fix_arrow) level 2") {
    DoubleCategory h = h_double(fix_arrow());
    NerveLevel lvl = horizontal_nerve(h, 2);
    CatPtr c = fix_arrow();
    std::set<std::pair<std::string, std::string>> expected;
    for (int g = 0; g < c->num_arrows(); ++g)
      for (int f = 0; f < c->num_arrows(); ++f)
        if (c->composable(g, f)) expected.insert({c->arrow(g).id, c->arrow(f).id});
    CHECK(lvl.cat->num_objects() == static_cast<int>(expected.size()));
  }
  SUBCASE("b2a level 3 arrows are all cell triples") {
    DoubleCategory g = b2a();
    NerveLevel lvl = horizontal_nerve(g, 3);
    CHECK(lvl.cat->num_objects() == 1);
    CHECK(lvl.cat->num_arrows() == 27);
  }
}

TEST_CASE("weak globularity") {
  SUBCASE("H(C) always passes") {
    for (const CatPtr& c : {fix_arrow(), fix_posb(), fix_iso()}) {
      WeakGlobularityReport r = check_weak_globularity(h_double(c), 3);
      CHECK(r.pass());
      CHECK(r.isofibration_d0);  // discrete X0: only identity isos
    }
  }
  SUBCASE("V(Z/2) fails at the objects category") {
    WeakGlobularityReport r = check_weak_globularity(v_z2(), 2);
    CHECK(!r.x0_verdict.is_equivalence());
    CHECK(r.x0_verdict.ff_witness.has_value());
    CHECK(!r.pass());
  }
  SUBCASE("V(chaotic) passes") {
    WeakGlobularityReport r = check_weak_globularity(v_double(chaotic(2)), 3);
    CHECK(r.pass());
  }
  SUBCASE("specialized checker agrees with the materialized oracle") {
    std::vector<DoubleCategory> ds;
    ds.push_back(h_double(fix_arrow()));
    ds.push_back(h_double(fix_posb()));
    ds.push_back(v_double(chaotic(2)));
    ds.push_back(v_z2());
    ds.push_back(b2a());
    for (const auto& d : ds) {
      WeakGlobularityReport r = check_weak_globularity(d, 3);
      for (const auto& [n, verdict] : r.segal) {
        EquivalenceVerdict oracle = segal_oracle(d, n);
        CHECK(verdict.is_equivalence() == oracle.is_equivalence());
        CHECK(verdict.fully_faithful == oracle.fully_faithful);
        CHECK(verdict.essentially_surjective == oracle.essentially_surjective);
      }
    }
  }
  SUBCASE("isofibration implies the Segal verdicts (Remark 4.4 direction)") {
    for (const auto& d : {h_double(fix_posb()), v_double(chaotic(3)), b2a()}) {
      WeakGlobularityReport r = check_weak_globularity(d, 3);
      if (r.isofibration_d0 || r.isofibration_d1)
        for (const auto& s : r.segal) CHECK(s.verdict.is_equivalence());
    }
  }
}

TEST_CASE("find_filler") {
  DoubleCategory h = h_double(fix_posb());
  WeakGlobularityReport wg = check_weak_globularity(h, 2);
  REQUIRE(wg.pass());
  SUBCASE("identity boundary yields the iota cell") {
    int A = h.X0->object_index("x");
    int IdA = h.hid(A);
    auto fill = find_filler(h, FillerSide::Left, h.vid(A), IdA, wg);
    REQUIRE(fill.has_value());
    CHECK(fill->cell == h.cid(IdA));  // 1_{Id_A}, the iota cell
  }
  SUBCASE("not weakly globular input raises") {
    DoubleCategory v = v_z2();
    WeakGlobularityReport bad = check_weak_globularity(v, 2);
    REQUIRE(!bad.pass());
    CHECK_THROWS_AS(
        find_filler(v, FillerSide::Left, 0, 0, bad), ValidationError);
  }
}

TEST_CASE("discretize") {
  SUBCASE("H(fix_arrow) reproduces the ordinary nerve levelwise") {
    CatPtr c = fix_arrow();
    DoubleCategory h = h_double(c);
    WeakGlobularityReport wg = check_weak_globularity(h, 3);
    REQUIRE(wg.pass());
    DiscretizeResult d = discretize(h, 3, wg);
    CHECK(d.level0_discrete);
    CHECK(d.nerve.levels[0].cat->num_objects() == c->num_objects());
    CHECK(d.nerve.levels[1].cat->num_objects() == c->num_arrows());
    // level 2 of the nerve of C = composable pairs
    int pairs = 0;
    for (int g = 0; g < c->num_arrows(); ++g)
      for (int f = 0; f < c->num_arrows(); ++f)
        if (c->composable(g, f)) ++pairs;
    CHECK(d.nerve.levels[2].cat->num_objects() == pairs);
    for (const auto& s : d.segal) CHECK(s.verdict.is_equivalence());
  }
  SUBCASE("simplicial identities hold within the truncation") {
    DoubleCategory h = h_double(fix_posb());
    WeakGlobularityReport wg = check_weak_globularity(h, 3);
    DiscretizeResult d = discretize(h, 3, wg);
    const auto& f = d.nerve.face;
    const auto& s = d.nerve.degeneracy;
    // d_i d_j = d_{j-1} d_i for i < j
    for (int k = 2; k <= 3; ++k)
      for (int j = 1; j <= k; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(FinFunctor::compose(f[k - 1][i], f[k][j])
                    .same_tables(FinFunctor::compose(f[k - 1][j - 1], f[k][i])));
    // d_i s_i = id = d_{i+1} s_i
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i <= k; ++i) {
        CHECK(FinFunctor::compose(f[k + 1][i], s[k][i])
                  .same_tables(FinFunctor::identity(d.nerve.levels[k].cat)));
        CHECK(FinFunctor::compose(f[k + 1][i + 1], s[k][i])
                  .same_tables(FinFunctor::identity(d.nerve.levels[k].cat)));
      }
  }
  SUBCASE("V(Z/2) is rejected") {
    DoubleCategory v = v_z2();
    WeakGlobularityReport wg = check_weak_globularity(v, 2);
    CHECK_THROWS_AS(discretize(v, 2, wg), ValidationError);
  }
}

TEST_CASE("pi0_double") {
  SUBCASE("H(C) gives back C") {
    CatPtr c = fix_posb();
    DoubleCategory h = h_double(c);
    WeakGlobularityReport wg = check_weak_globularity(h, 2);
    CatPtr p = pi0_double(h, wg);
    CHECK(p->num_objects() == c->num_objects());
    CHECK(p->num_arrows() == c->num_arrows());
    for (int g = 0; g < c->num_arrows(); ++g)
      for (int f = 0; f < c->num_arrows(); ++f)
        if (c->composable(g, f))
          CHECK(p->arrow(p->compose(p->arrow_index(c->arrow(g).id),
                                    p->arrow_index(c->arrow(f).id)))
                    .id == c->arrow(c->compose(g, f)).id);
  }
  SUBCASE("cells collapse to a point for b2a") {
    DoubleCategory g = b2a();
    WeakGlobularityReport wg = check_weak_globularity(g, 2);
    CatPtr p = pi0_double(g, wg);
    CHECK(p->num_objects() == 1);
    CHECK(p->num_arrows() == 1);
  }
}

TEST_CASE("strict functor and transformation checks") {
  DoubleCategory h = h_double(fix_iso());
  SUBCASE("identity functor passes") {
    CHECK(check_strict_functor(identity_double_functor(h)).pass);
  }
  SUBCASE("boundary-breaking functor fails") {
    DoubleFunctor f = identity_double_functor(h);
    // swap the object map on X0 but keep X1: breaks d0 . F1 = F0 . d0
    std::vector<int> om = {1, 0};
    std::vector<int> am = {h.X0->identity(1), h.X0->identity(0)};
    f.F0 = FinFunctor(h.X0, h.X0, om, am, false);
    CheckResult r = check_strict_functor(f);
    CHECK(!r.pass);
    CHECK(!r.failure.empty());
  }
  SUBCASE("identity horizontal transformation passes") {
    DoubleFunctor id = identity_double_functor(h);
    HorizontalTransformation a;
    a.G = &id;
    a.K = &id;
    a.component.resize(h.X0->num_objects());
    a.cell.resize(h.X0->num_arrows());
    for (int o = 0; o < h.X0->num_objects(); ++o) a.component[o] = h.hid(o);
    for (int v = 0; v < h.X0->num_arrows(); ++v) a.cell[v] = h.scell(v);
    CHECK(check_horizontal_transformation(a).pass);
    CHECK(a.invertible(h));
  }
  SUBCASE("perturbed horizontal transformation fails naming the square") {
    DoubleCategory g = b2a();
    DoubleFunctor id = identity_double_functor(g);
    HorizontalTransformation a;
    a.G = &id;
    a.K = &id;
    a.component = {g.hid(0)};
    a.cell = {g.X1->arrow_index("r1")};  // not the identity cell
    CheckResult r = check_horizontal_transformation(a);
    CHECK(!r.pass);
  }
  SUBCASE("identity vertical transformation passes") {
    DoubleFunctor id = identity_double_functor(h);
    VerticalTransformation g;
    g.F = &id;
    g.G = &id;
    g.component.resize(h.X0->num_objects());
    g.cell.resize(h.X1->num_objects());
    for (int o = 0; o < h.X0->num_objects(); ++o) g.component[o] = h.vid(o);
    for (int x = 0; x < h.X1->num_objects(); ++x) g.cell[x] = h.cid(x);
    CHECK(check_vertical_transformation(g).pass);
  }
}

TEST_CASE("check_2_equivalence") {
  SUBCASE("identity is a 2-equivalence") {
    DoubleCategory h = h_double(fix_arrow());
    auto v = check_2_equivalence(h, h, identity_double_functor(h));
    CHECK(v.pass);
  }
  SUBCASE("collapse to the terminal double category fails") {
    DoubleCategory h = h_double(fix_arrow());
    DoubleCategory t = h_double(terminal());
    std::vector<int> o0(h.X0->num_objects(), 0),
        a0(h.X0->num_arrows(), t.X0->identity(0));
    std::vector<int> o1(h.X1->num_objects(), 0),
        a1(h.X1->num_arrows(), t.X1->identity(0));
    DoubleFunctor f{&h, &t, FinFunctor(h.X0, t.X0, o0, a0, false),
                    FinFunctor(h.X1, t.X1, o1, a1, false)};
    REQUIRE(check_strict_functor(f).pass);
    auto v = check_2_equivalence(h, t, f);
    CHECK(!v.pass);
  }
  SUBCASE("levelwise equivalence gives a Pi0 isomorphism") {
    DoubleCategory a = v_double(chaotic(2));
    DoubleCategory b = v_double(terminal());
    std::vector<int> o0(a.X0->num_objects(), 0),
        a0(a.X0->num_arrows(), b.X0->identity(0));
    DoubleFunctor f{&a, &b, FinFunctor(a.X0, b.X0, o0, a0, false),
                    FinFunctor(a.X1, b.X1, o0, a0, false)};
    REQUIRE(check_strict_functor(f).pass);
    auto v = check_2_equivalence(a, b, f);
    CHECK(v.pass);
    // Pi0 of both sides is terminal, so Pi0 F is an isomorphism
    CHECK(v.pi0_verdict.is_equivalence());
  }
}
