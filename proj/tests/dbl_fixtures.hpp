#pragma once

#include "fixtures_common.hpp"
#include "wgdbl/dblcat.hpp"

namespace fixtures {

using wgdbl::DoubleCategory;

// One object, one horizontal arrow, cell group Z/3 under both compositions.
inline DoubleCategory b2a() {
  using namespace wgdbl;
  CatPtr X0 = discrete_category({"pt"});
  CategoryPresentation x1 = zmod_raw(3);
  x1.objects = {"I"};
  for (auto& a : x1.arrows) a.src = a.tgt = "I";
  x1.identities = {{"I", "r0"}};
  CatPtr X1 = FinCategory::validate_ptr(x1);

  std::vector<int> dobj = {0};
  std::vector<int> darr(X1->num_arrows(), X0->identity(0));
  FinFunctor d0(X1, X0, dobj, darr, false);
  FinFunctor d1 = d0;
  std::vector<int> sobj = {X1->object_index("I")};
  std::vector<int> sarr = {X1->arrow_index("r0")};
  FinFunctor s(X0, X1, sobj, sarr, false);

  auto ho = [](int, int) -> std::optional<int> { return 0; };
  auto hc = [X1](int a, int b) -> std::optional<int> {
    int i = a, j = b;  // arrows sorted r0 < r1 < r2, index = exponent
    return (i + j) % 3;
    (void)X1;
  };
  return DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc);
}

// H of the one-object Z/2 groupoid: the "BG" fixture.
inline DoubleCategory bg() { return wgdbl::h_double(zmod(2)); }

inline DoubleCategory v_z2() { return wgdbl::v_double(zmod(2)); }

// Disjoint union of b2a and bg as one double category (for homotopy tests).
inline DoubleCategory b2a_plus_bg() {
  using namespace wgdbl;
  CategoryPresentation x0;
  x0.objects = {"p", "q"};
  x0.arrows = {{"1p", "p", "p"}, {"1q", "q", "q"}};
  x0.identities = {{"p", "1p"}, {"q", "1q"}};
  x0.compose = {{"1p", "1p", "1p"}, {"1q", "1q", "1q"}};
  CatPtr X0 = FinCategory::validate_ptr(x0);

  // X1: component p carries one horizontal arrow with Z/3 cells; component q
  // carries the two horizontal arrows of BG with identity cells only.
  CategoryPresentation x1;
  x1.objects = {"I", "u0", "u1"};
  x1.arrows = {{"c0", "I", "I"},   {"c1", "I", "I"},   {"c2", "I", "I"},
               {"1u0", "u0", "u0"}, {"1u1", "u1", "u1"}};
  x1.identities = {{"I", "c0"}, {"u0", "1u0"}, {"u1", "1u1"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      x1.compose.push_back({"c" + std::to_string(i), "c" + std::to_string(j),
                            "c" + std::to_string((i + j) % 3)});
  x1.compose.push_back({"1u0", "1u0", "1u0"});
  x1.compose.push_back({"1u1", "1u1", "1u1"});
  CatPtr X1 = FinCategory::validate_ptr(x1);

  auto oi = [&](const std::string& s) { return X1->object_index(s); };
  std::vector<int> dobj(X1->num_objects());
  dobj[oi("I")] = X0->object_index("p");
  dobj[oi("u0")] = X0->object_index("q");
  dobj[oi("u1")] = X0->object_index("q");
  std::vector<int> darr(X1->num_arrows());
  for (int c = 0; c < X1->num_arrows(); ++c)
    darr[c] = X0->identity(dobj[X1->src(c)]);
  FinFunctor d0(X1, X0, dobj, darr, false);
  FinFunctor d1 = d0;

  std::vector<int> sobj(X0->num_objects());
  sobj[X0->object_index("p")] = oi("I");
  sobj[X0->object_index("q")] = oi("u0");
  std::vector<int> sarr(X0->num_arrows());
  sarr[X0->identity(X0->object_index("p"))] = X1->identity(oi("I"));
  sarr[X0->identity(X0->object_index("q"))] = X1->identity(oi("u0"));
  FinFunctor s(X0, X1, sobj, sarr, false);

  auto ho = [X1, oi](int a, int b) -> std::optional<int> {
    const std::string& an = X1->object(a);
    const std::string& bn = X1->object(b);
    if (an == "I" && bn == "I") return a;
    if (an[0] == 'u' && bn[0] == 'u') {
      int i = an[1] - '0', j = bn[1] - '0';
      return oi("u" + std::to_string((i + j) % 2));
    }
    return std::nullopt;
  };
  auto hc = [X1, ho](int a, int b) -> std::optional<int> {
    const std::string& an = X1->arrow(a).id;
    const std::string& bn = X1->arrow(b).id;
    if (an[0] == 'c' && bn[0] == 'c') {
      int i = an[1] - '0', j = bn[1] - '0';
      return X1->arrow_index("c" + std::to_string((i + j) % 3));
    }
    auto o = ho(X1->src(a), X1->src(b));
    if (!o) return std::nullopt;
    return X1->identity(*o);
  };
  return DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc);
}

// Materialized Segal oracle: builds X1 x_{X0d}^n X1 with fincat pullbacks and
// runs the generic equivalence check on the comparison functor. Only suitable
// for small fixtures; used to cross-check the specialized checker.
inline wgdbl::EquivalenceVerdict segal_oracle(const DoubleCategory& D, int n) {
  using namespace wgdbl;
  DiscreteComparison cmp = object_classes(D);
  FinFunctor d0d = FinFunctor::compose(cmp.gamma, D.d0);
  FinFunctor d1d = FinFunctor::compose(cmp.gamma, D.d1);

  // strict side: nerve level n, with tuple decode
  NerveLevel strict = horizontal_nerve(D, n);

  // discrete-matched side, nested the same way
  struct Level {
    CatPtr cat;
    std::vector<std::vector<int>> obj_tuples, arr_tuples;
    std::map<std::vector<int>, int> obj_lookup, arr_lookup;
  };
  Level loose;
  loose.cat = D.X1;
  for (int i = 0; i < D.X1->num_objects(); ++i) {
    loose.obj_tuples.push_back({i});
    loose.obj_lookup[{i}] = i;
  }
  for (int i = 0; i < D.X1->num_arrows(); ++i) {
    loose.arr_tuples.push_back({i});
    loose.arr_lookup[{i}] = i;
  }
  for (int k = 2; k <= n; ++k) {
    std::vector<int> om(loose.cat->num_objects()), am(loose.cat->num_arrows());
    for (int i = 0; i < loose.cat->num_objects(); ++i)
      om[i] = d0d.obj(loose.obj_tuples[i].front());
    for (int i = 0; i < loose.cat->num_arrows(); ++i)
      am[i] = d0d.arr(loose.arr_tuples[i].front());
    FinFunctor first_src(loose.cat, cmp.discrete, om, am, false);
    PullbackResult pb = pullback(first_src, d1d);
    Level next;
    next.cat = pb.apex;
    for (int i = 0; i < pb.apex->num_objects(); ++i) {
      auto [p, c] = pb.obj_components[i];
      std::vector<int> t = {c};
      auto& rest = loose.obj_tuples[p];
      t.insert(t.end(), rest.begin(), rest.end());
      next.obj_tuples.push_back(t);
      next.obj_lookup[t] = i;
    }
    for (int i = 0; i < pb.apex->num_arrows(); ++i) {
      auto [p, c] = pb.arr_components[i];
      std::vector<int> t = {c};
      auto& rest = loose.arr_tuples[p];
      t.insert(t.end(), rest.begin(), rest.end());
      next.arr_tuples.push_back(t);
      next.arr_lookup[t] = i;
    }
    loose = std::move(next);
  }

  std::vector<int> om(strict.cat->num_objects()), am(strict.cat->num_arrows());
  for (int i = 0; i < strict.cat->num_objects(); ++i)
    om[i] = loose.obj_lookup.at(strict.obj_tuples[i]);
  for (int i = 0; i < strict.cat->num_arrows(); ++i)
    am[i] = loose.arr_lookup.at(strict.arr_tuples[i]);
  FinFunctor comparison(strict.cat, loose.cat, om, am);
  return is_equivalence(comparison);
}

}  // namespace fixtures
