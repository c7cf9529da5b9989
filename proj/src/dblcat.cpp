#include "wgdbl/dblcat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wgdbl {

namespace {

FinFunctor functor_from_tables(const CatPtr& dom, const CatPtr& cod,
                               const std::map<std::string, std::string>& obj,
                               const std::map<std::string, std::string>& arr,
                               const std::string& name) {
  std::vector<int> om(dom->num_objects(), -1), am(dom->num_arrows(), -1);
  for (const auto& [k, v] : obj) om[dom->object_index(k)] = cod->object_index(v);
  for (const auto& [k, v] : arr) am[dom->arrow_index(k)] = cod->arrow_index(v);
  for (int i = 0; i < dom->num_objects(); ++i)
    if (om[i] < 0)
      throw ValidationError("InternalCategoryAxiomViolation",
                            name + " missing object entry for " + dom->object(i));
  for (int i = 0; i < dom->num_arrows(); ++i)
    if (am[i] < 0)
      throw ValidationError("InternalCategoryAxiomViolation",
                            name + " missing arrow entry for " + dom->arrow(i).id);
  return FinFunctor(dom, cod, std::move(om), std::move(am));
}

}  // namespace

std::optional<int> DoubleCategory::hcomp(int a, int b) const {
  auto p = pairs.find_obj(a, b);
  if (!p) return std::nullopt;
  return m.obj(*p);
}

std::optional<int> DoubleCategory::ccomp(int a, int b) const {
  auto p = pairs.find_arr(a, b);
  if (!p) return std::nullopt;
  return m.arr(*p);
}

DoubleCategory DoubleCategory::assemble(
    CatPtr X0, CatPtr X1, FinFunctor d0, FinFunctor d1, FinFunctor s,
    const std::function<std::optional<int>(int, int)>& hcomp_obj,
    const std::function<std::optional<int>(int, int)>& hcomp_cell) {
  DoubleCategory D;
  D.X0 = std::move(X0);
  D.X1 = std::move(X1);
  D.d0 = std::move(d0);
  D.d1 = std::move(d1);
  D.s = std::move(s);

  if (!FinFunctor::compose(D.d0, D.s).same_tables(FinFunctor::identity(D.X0)))
    throw ValidationError("InternalCategoryAxiomViolation", "d0 . s != id");
  if (!FinFunctor::compose(D.d1, D.s).same_tables(FinFunctor::identity(D.X0)))
    throw ValidationError("InternalCategoryAxiomViolation", "d1 . s != id");

  D.pairs = pullback(D.d0, D.d1);
  const auto& P = *D.pairs.apex;

  std::vector<int> mo(P.num_objects(), -1), ma(P.num_arrows(), -1);
  for (int i = 0; i < P.num_objects(); ++i) {
    auto [a, b] = D.pairs.obj_components[i];
    auto c = hcomp_obj(a, b);
    if (!c)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "m undefined on composable pair " + P.object(i));
    mo[i] = *c;
  }
  for (int i = 0; i < P.num_arrows(); ++i) {
    auto [a, b] = D.pairs.arr_components[i];
    auto c = hcomp_cell(a, b);
    if (!c)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "m undefined on composable cells " + P.arrow(i).id);
    ma[i] = *c;
  }

  // Functoriality of m: identities and the middle-four interchange.
  for (int i = 0; i < P.num_objects(); ++i)
    if (ma[P.identity(i)] != D.X1->identity(mo[i]))
      throw ValidationError("InternalCategoryAxiomViolation",
                            "m does not preserve the identity cell of " + P.object(i));
  for (int q = 0; q < P.num_arrows(); ++q)
    for (int p = 0; p < P.num_arrows(); ++p) {
      if (!P.composable(q, p)) continue;
      int lhs = ma[P.compose(q, p)];
      int rhs_q = ma[q], rhs_p = ma[p];
      if (D.X1->compose(rhs_q, rhs_p) != lhs) {
        auto [a1, a2] = D.pairs.arr_components[q];
        auto [b1, b2] = D.pairs.arr_components[p];
        throw ValidationError(
            "InterchangeViolation",
            "interchange fails on cells (" + D.X1->arrow(a1).id + "," +
                D.X1->arrow(a2).id + ") . (" + D.X1->arrow(b1).id + "," +
                D.X1->arrow(b2).id + ")");
      }
    }
  D.m = FinFunctor(D.pairs.apex, D.X1, std::move(mo), std::move(ma), false);

  // Boundary compatibility: d0 . m = d0 . p2, d1 . m = d1 . p1.
  if (!FinFunctor::compose(D.d0, D.m).same_tables(
          FinFunctor::compose(D.d0, D.pairs.proj2)))
    throw ValidationError("InternalCategoryAxiomViolation", "d0 . m != d0 . p2");
  if (!FinFunctor::compose(D.d1, D.m).same_tables(
          FinFunctor::compose(D.d1, D.pairs.proj1)))
    throw ValidationError("InternalCategoryAxiomViolation", "d1 . m != d1 . p1");

  // Unit laws for m against s.
  for (int h = 0; h < D.X1->num_objects(); ++h) {
    if (D.hcomp(h, D.hid(D.hsrc(h))) != h)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "right unit law fails at " + D.X1->object(h));
    if (D.hcomp(D.hid(D.htgt(h)), h) != h)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "left unit law fails at " + D.X1->object(h));
  }
  for (int c = 0; c < D.X1->num_arrows(); ++c) {
    if (D.ccomp(c, D.scell(D.cleft(c))) != c)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "right unit law fails at cell " + D.X1->arrow(c).id);
    if (D.ccomp(D.scell(D.cright(c)), c) != c)
      throw ValidationError("InternalCategoryAxiomViolation",
                            "left unit law fails at cell " + D.X1->arrow(c).id);
  }

  // Associativity of m, on horizontal arrows and on cells.
  for (int a = 0; a < D.X1->num_objects(); ++a)
    for (int b = 0; b < D.X1->num_objects(); ++b) {
      if (D.hsrc(a) != D.htgt(b)) continue;
      for (int c = 0; c < D.X1->num_objects(); ++c) {
        if (D.hsrc(b) != D.htgt(c)) continue;
        if (D.hcomp(*D.hcomp(a, b), c) != D.hcomp(a, *D.hcomp(b, c)))
          throw ValidationError("InternalCategoryAxiomViolation",
                                "m not associative on (" + D.X1->object(a) + "," +
                                    D.X1->object(b) + "," + D.X1->object(c) + ")");
      }
    }
  for (int a = 0; a < D.X1->num_arrows(); ++a)
    for (int b = 0; b < D.X1->num_arrows(); ++b) {
      if (D.cleft(a) != D.cright(b)) continue;
      for (int c = 0; c < D.X1->num_arrows(); ++c) {
        if (D.cleft(b) != D.cright(c)) continue;
        if (D.ccomp(*D.ccomp(a, b), c) != D.ccomp(a, *D.ccomp(b, c)))
          throw ValidationError("InternalCategoryAxiomViolation",
                                "m not associative on cells (" + D.X1->arrow(a).id +
                                    "," + D.X1->arrow(b).id + "," +
                                    D.X1->arrow(c).id + ")");
      }
    }
  return D;
}

DoubleCategory DoubleCategory::validate(const DoubleCategoryPresentation& raw) {
  CatPtr X0 = FinCategory::validate_ptr(raw.X0);
  CatPtr X1 = FinCategory::validate_ptr(raw.X1);
  FinFunctor d0 = functor_from_tables(X1, X0, raw.d0_obj, raw.d0_arr, "d0");
  FinFunctor d1 = functor_from_tables(X1, X0, raw.d1_obj, raw.d1_arr, "d1");
  FinFunctor s = functor_from_tables(X0, X1, raw.s_obj, raw.s_arr, "s");

  std::map<std::pair<int, int>, int> mo, ma;
  for (const auto& e : raw.m_obj)
    mo[{X1->object_index(e[0]), X1->object_index(e[1])}] = X1->object_index(e[2]);
  for (const auto& e : raw.m_arr)
    ma[{X1->arrow_index(e[0]), X1->arrow_index(e[1])}] = X1->arrow_index(e[2]);
  auto ho = [&mo](int a, int b) -> std::optional<int> {
    auto it = mo.find({a, b});
    if (it == mo.end()) return std::nullopt;
    return it->second;
  };
  auto hc = [&ma](int a, int b) -> std::optional<int> {
    auto it = ma.find({a, b});
    if (it == ma.end()) return std::nullopt;
    return it->second;
  };
  return assemble(X0, X1, d0, d1, s, ho, hc);
}

DoubleCategoryPresentation DoubleCategory::presentation() const {
  DoubleCategoryPresentation p;
  p.X0 = X0->presentation();
  p.X1 = X1->presentation();
  for (int i = 0; i < X1->num_objects(); ++i) {
    p.d0_obj[X1->object(i)] = X0->object(d0.obj(i));
    p.d1_obj[X1->object(i)] = X0->object(d1.obj(i));
  }
  for (int i = 0; i < X1->num_arrows(); ++i) {
    p.d0_arr[X1->arrow(i).id] = X0->arrow(d0.arr(i)).id;
    p.d1_arr[X1->arrow(i).id] = X0->arrow(d1.arr(i)).id;
  }
  for (int i = 0; i < X0->num_objects(); ++i)
    p.s_obj[X0->object(i)] = X1->object(s.obj(i));
  for (int i = 0; i < X0->num_arrows(); ++i)
    p.s_arr[X0->arrow(i).id] = X1->arrow(s.arr(i)).id;
  for (int i = 0; i < pairs.apex->num_objects(); ++i) {
    auto [a, b] = pairs.obj_components[i];
    p.m_obj.push_back({X1->object(a), X1->object(b), X1->object(m.obj(i))});
  }
  for (int i = 0; i < pairs.apex->num_arrows(); ++i) {
    auto [a, b] = pairs.arr_components[i];
    p.m_arr.push_back({X1->arrow(a).id, X1->arrow(b).id, X1->arrow(m.arr(i)).id});
  }
  return p;
}

DoubleCategory h_double(const CatPtr& C) {
  CatPtr X0 = discrete_category(C->objects());

  CategoryPresentation x1;
  for (const auto& a : C->arrows()) {
    x1.objects.push_back(a.id);
    x1.arrows.push_back({"1(" + a.id + ")", a.id, a.id});
    x1.identities[a.id] = "1(" + a.id + ")";
    x1.compose.push_back({"1(" + a.id + ")", "1(" + a.id + ")", "1(" + a.id + ")"});
  }
  CatPtr X1 = FinCategory::validate_ptr(x1);

  std::vector<int> d0o(X1->num_objects()), d0a(X1->num_arrows());
  std::vector<int> d1o(X1->num_objects()), d1a(X1->num_arrows());
  for (int h = 0; h < X1->num_objects(); ++h) {
    int f = C->arrow_index(X1->object(h));
    d0o[h] = X0->object_index(C->object(C->src(f)));
    d1o[h] = X0->object_index(C->object(C->tgt(f)));
    d0a[X1->identity(h)] = X0->identity(d0o[h]);
    d1a[X1->identity(h)] = X0->identity(d1o[h]);
  }
  FinFunctor d0(X1, X0, std::move(d0o), std::move(d0a), false);
  FinFunctor d1(X1, X0, std::move(d1o), std::move(d1a), false);

  std::vector<int> so(X0->num_objects()), sa(X0->num_arrows());
  for (int o = 0; o < X0->num_objects(); ++o) {
    int co = C->object_index(X0->object(o));
    so[o] = X1->object_index(C->arrow(C->identity(co)).id);
    sa[X0->identity(o)] = X1->identity(so[o]);
  }
  FinFunctor s(X0, X1, std::move(so), std::move(sa), false);

  auto ho = [&C, X1](int a, int b) -> std::optional<int> {
    int fa = C->arrow_index(X1->object(a));
    int fb = C->arrow_index(X1->object(b));
    auto comp = C->try_compose(fa, fb);
    if (!comp) return std::nullopt;
    return X1->object_index(C->arrow(*comp).id);
  };
  auto hc = [&C, X1, ho](int a, int b) -> std::optional<int> {
    auto o = ho(X1->src(a), X1->src(b));
    if (!o) return std::nullopt;
    return X1->identity(*o);
  };
  return DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc);
}

DoubleCategory v_double(const CatPtr& C) {
  FinFunctor idf = FinFunctor::identity(C);
  auto ho = [](int a, int b) -> std::optional<int> {
    return a == b ? std::optional<int>(a) : std::nullopt;
  };
  return DoubleCategory::assemble(C, C, idf, idf, idf, ho, ho);
}

// ---------------------------------------------------------------------------
// Nerve

NerveLevel horizontal_nerve(const DoubleCategory& D, int k) {
  NerveLevel out;
  if (k == 0) {
    out.cat = D.X0;
    for (int i = 0; i < D.X0->num_objects(); ++i) out.obj_tuples.push_back({});
    for (int i = 0; i < D.X0->num_arrows(); ++i) out.arr_tuples.push_back({});
    return out;
  }
  if (k == 1) {
    out.cat = D.X1;
    for (int i = 0; i < D.X1->num_objects(); ++i) {
      out.obj_tuples.push_back({i});
      out.obj_lookup[{i}] = i;
    }
    for (int i = 0; i < D.X1->num_arrows(); ++i) {
      out.arr_tuples.push_back({i});
      out.arr_lookup[{i}] = i;
    }
    return out;
  }
  // Iterated pullback, nested to the left; a nested object ((a,b),c)
  // decodes to the diagram-order tuple [c, b, a].
  NerveLevel prev = horizontal_nerve(D, k - 1);
  FinFunctor src_of_earliest = k == 2 ? D.d0 : [&] {
    // d0 of the earliest component of the previous level.
    std::vector<int> om(prev.cat->num_objects()), am(prev.cat->num_arrows());
    for (int i = 0; i < prev.cat->num_objects(); ++i)
      om[i] = D.hsrc(prev.obj_tuples[i].front());
    for (int i = 0; i < prev.cat->num_arrows(); ++i)
      am[i] = D.cleft(prev.arr_tuples[i].front());
    return FinFunctor(prev.cat, D.X0, std::move(om), std::move(am), false);
  }();
  PullbackResult pb = pullback(src_of_earliest, D.d1);
  out.cat = pb.apex;
  for (int i = 0; i < out.cat->num_objects(); ++i) {
    auto [p, c] = pb.obj_components[i];
    std::vector<int> t = {c};
    const auto& rest = prev.obj_tuples[p];
    t.insert(t.end(), rest.begin(), rest.end());
    out.obj_tuples.push_back(t);
    out.obj_lookup[t] = i;
  }
  for (int i = 0; i < out.cat->num_arrows(); ++i) {
    auto [p, c] = pb.arr_components[i];
    std::vector<int> t = {c};
    const auto& rest = prev.arr_tuples[p];
    t.insert(t.end(), rest.begin(), rest.end());
    out.arr_tuples.push_back(t);
    out.arr_lookup[t] = i;
  }
  return out;
}

std::optional<int> NerveLevel::find_obj(const std::vector<int>& t) const {
  auto it = obj_lookup.find(t);
  if (it == obj_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<int> NerveLevel::find_arr(const std::vector<int>& t) const {
  auto it = arr_lookup.find(t);
  if (it == arr_lookup.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Weak globularity

DiscreteComparison object_classes(const DoubleCategory& D) {
  return is_equivalent_to_discrete(D.X0);
}

HorizontalIsoClasses horizontal_iso_classes(const DoubleCategory& D) {
  HorizontalIsoClasses out;
  int n = D.X1->num_objects();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < D.X1->num_arrows(); ++c) {
    if (!D.cell_invertible(c)) continue;
    int a = find(D.ctop(c)), b = find(D.cbot(c));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  out.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (out.class_of[r] < 0) {
      out.class_of[r] = static_cast<int>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[i] = out.class_of[r];
    out.classes[out.class_of[i]].push_back(i);
  }
  return out;
}

namespace {

// The Segal comparison X1 x_{X0}^n X1 -> X1 x_{X0d}^n X1 never gets
// materialized on the codomain side. Fully-faithfulness reduces to a scan
// over adjacent cell pairs (any componentwise cell tuple between strictly
// composable tuples must itself match strictly; padding with identity cells
// embeds an offending pair into a tuple of any length n >= 2).
// Essential surjectivity is decided per n over tuples of horizontal
// iso-classes, since strictness of a repair only depends on those.
struct SegalChecker {
  const DoubleCategory& D;
  std::vector<int> cls;  // X0 object -> pi0 class
  HorizontalIsoClasses hiso;

  explicit SegalChecker(const DoubleCategory& d) : D(d) {
    cls = d.X0->pi0().class_of;
    hiso = horizontal_iso_classes(d);
  }

  int hscls(int h) const { return cls[D.hsrc(h)]; }
  int htcls(int h) const { return cls[D.htgt(h)]; }

  // Returns a witnessing cell pair on failure.
  std::optional<std::pair<int, int>> fully_faithful_violation() const {
    std::map<std::pair<int, int>, std::vector<int>> by_srcs;
    for (int a = 0; a < D.X1->num_arrows(); ++a)
      by_srcs[{D.hsrc(D.ctop(a)), D.hsrc(D.cbot(a))}].push_back(a);
    for (int b = 0; b < D.X1->num_arrows(); ++b) {
      auto it = by_srcs.find({D.htgt(D.ctop(b)), D.htgt(D.cbot(b))});
      if (it == by_srcs.end()) continue;
      for (int a : it->second)
        if (D.cleft(a) != D.cright(b)) return std::make_pair(a, b);
    }
    return std::nullopt;
  }

  // A class-composable tuple of iso-classes admits a strictly composable
  // componentwise-isomorphic repair?
  bool repairable(const std::vector<int>& class_tuple) const {
    std::set<int> interfaces;  // possible htgt of the repaired prefix
    bool first = true;
    for (int c : class_tuple) {
      std::set<int> next;
      for (int h : hiso.classes[c]) {
        if (first || interfaces.count(D.hsrc(h))) next.insert(D.htgt(h));
      }
      if (next.empty()) return false;
      interfaces = std::move(next);
      first = false;
    }
    return true;
  }

  // Enumerate class-composable tuples of iso-classes of length n; returns a
  // representative witness tuple on failure.
  std::optional<std::vector<int>> essential_surjectivity_violation(int n) const {
    int k = static_cast<int>(hiso.classes.size());
    // endpoint pi0 classes per iso-class (well defined: invertible cells
    // connect endpoints within a pi0 class)
    std::vector<int> scls(k), tcls(k);
    for (int c = 0; c < k; ++c) {
      scls[c] = hscls(hiso.classes[c].front());
      tcls[c] = htcls(hiso.classes[c].front());
    }
    std::vector<int> tuple;
    std::optional<std::vector<int>> bad;
    std::function<void(int)> rec = [&](int pos) {
      if (bad) return;
      if (pos == n) {
        if (!repairable(tuple)) bad = tuple;
        return;
      }
      for (int c = 0; c < k; ++c) {
        if (pos > 0 && tcls[tuple.back()] != scls[c]) continue;
        tuple.push_back(c);
        rec(pos + 1);
        tuple.pop_back();
      }
    };
    rec(0);
    return bad;
  }

  EquivalenceVerdict verdict_for(int n) const {
    EquivalenceVerdict v;
    auto ff = fully_faithful_violation();
    v.fully_faithful = !ff.has_value();
    if (ff)
      v.ff_witness = {D.X1->arrow(ff->first).id + "/" + D.X1->arrow(ff->second).id,
                      "adjacent cell pair with mismatched boundary"};
    auto es = essential_surjectivity_violation(n);
    v.essentially_surjective = !es.has_value();
    if (es) {
      std::string w = "class tuple [";
      for (size_t i = 0; i < es->size(); ++i) {
        if (i) w += ",";
        w += D.X1->object(hiso.classes[(*es)[i]].front());
      }
      v.es_witness = w + "]";
    }
    return v;
  }
};

}  // namespace

WeakGlobularityReport check_weak_globularity(const DoubleCategory& D, int nmax) {
  WeakGlobularityReport r;
  r.x0_verdict = is_equivalent_to_discrete(D.X0).verdict;
  r.isofibration_d0 = D.d0.is_isofibration();
  r.isofibration_d1 = D.d1.is_isofibration();
  SegalChecker checker(D);
  for (int n = 2; n <= nmax; ++n)
    r.segal.push_back({n, checker.verdict_for(n)});
  return r;
}

std::optional<Filler> find_filler(const DoubleCategory& D, FillerSide side,
                                  int vertical, int horizontal,
                                  const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "find_filler requires a weakly globular input");
  int attach = side == FillerSide::Left ? D.hsrc(horizontal) : D.htgt(horizontal);
  if (D.X0->tgt(vertical) != attach)
    throw ValidationError("FillerBoundary",
                          "vertical arrow does not land on the required corner");
  int inv = D.X0->inverse(vertical);
  if (inv < 0)
    throw ValidationError("FillerBoundary", "attaching vertical is not invertible");
  for (int c = 0; c < D.X1->num_arrows(); ++c) {
    if (D.cbot(c) != horizontal || !D.cell_invertible(c)) continue;
    if (side == FillerSide::Left) {
      // d0(cell) = x . y1, so y1 = x^{-1} . d0(cell)
      int y1 = D.X0->compose(inv, D.cleft(c));
      return Filler{c, y1};
    }
    int x2 = D.X0->compose(inv, D.cright(c));
    return Filler{c, x2};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Discretization

namespace {

// Functor between nerve levels induced by a tuple operation.
FinFunctor tuple_functor(const NerveLevel& from, const NerveLevel& to,
                         const std::function<std::vector<int>(const std::vector<int>&)>& on_obj,
                         const std::function<std::vector<int>(const std::vector<int>&)>& on_arr) {
  std::vector<int> om(from.cat->num_objects()), am(from.cat->num_arrows());
  for (int i = 0; i < from.cat->num_objects(); ++i) {
    auto t = on_obj(from.obj_tuples[i]);
    auto j = to.find_obj(t);
    if (!j) throw ValidationError("NerveFace", "image tuple missing in target level");
    om[i] = *j;
  }
  for (int i = 0; i < from.cat->num_arrows(); ++i) {
    auto t = on_arr(from.arr_tuples[i]);
    auto j = to.find_arr(t);
    if (!j) throw ValidationError("NerveFace", "image tuple missing in target level");
    am[i] = *j;
  }
  return FinFunctor(from.cat, to.cat, std::move(om), std::move(am), false);
}

}  // namespace

DiscretizeResult discretize(const DoubleCategory& D, int nmax,
                            const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "discretize requires a weakly globular input");
  DiscretizeResult out;
  DiscreteComparison cmp = object_classes(D);

  auto& levels = out.nerve.levels;
  levels.resize(nmax + 1);
  // Level 0 is the discrete category of pi0 classes.
  levels[0].cat = cmp.discrete;
  for (int i = 0; i < cmp.discrete->num_objects(); ++i)
    levels[0].obj_tuples.push_back({});
  for (int i = 0; i < cmp.discrete->num_arrows(); ++i)
    levels[0].arr_tuples.push_back({});
  for (int k = 1; k <= nmax; ++k) levels[k] = horizontal_nerve(D, k);

  out.nerve.face.resize(nmax + 1);
  out.nerve.degeneracy.resize(nmax);

  // Bottom faces d_i = gamma . del_i and degeneracy s_0 = sigma_0 . gamma'.
  out.nerve.face[1].push_back(FinFunctor::compose(cmp.gamma, D.d1));  // del_0 = target
  out.nerve.face[1].push_back(FinFunctor::compose(cmp.gamma, D.d0));  // del_1 = source
  out.nerve.degeneracy[0].push_back(FinFunctor::compose(D.s, cmp.gamma_prime));

  for (int k = 2; k <= nmax; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto drop_or_merge_obj = [&, i, k](const std::vector<int>& t) {
        std::vector<int> r = t;
        if (i == 0) r.erase(r.begin());
        else if (i == k) r.pop_back();
        else {
          int merged = *D.hcomp(r[i], r[i - 1]);
          r[i - 1] = merged;
          r.erase(r.begin() + i);
        }
        return r;
      };
      auto drop_or_merge_arr = [&, i, k](const std::vector<int>& t) {
        std::vector<int> r = t;
        if (i == 0) r.erase(r.begin());
        else if (i == k) r.pop_back();
        else {
          int merged = *D.ccomp(r[i], r[i - 1]);
          r[i - 1] = merged;
          r.erase(r.begin() + i);
        }
        return r;
      };
      out.nerve.face[k].push_back(
          tuple_functor(levels[k], levels[k - 1], drop_or_merge_obj, drop_or_merge_arr));
    }
  }
  for (int k = 1; k < nmax; ++k) {
    for (int i = 0; i <= k; ++i) {
      auto insert_obj = [&, i](const std::vector<int>& t) {
        std::vector<int> r = t;
        int vertex = i == 0 ? D.hsrc(t[0]) : D.htgt(t[i - 1]);
        r.insert(r.begin() + i, D.hid(vertex));
        return r;
      };
      auto insert_arr = [&, i](const std::vector<int>& t) {
        std::vector<int> r = t;
        int vertex_arrow = i == 0 ? D.cleft(t[0]) : D.cright(t[i - 1]);
        r.insert(r.begin() + i, D.scell(vertex_arrow));
        return r;
      };
      out.nerve.degeneracy[k].push_back(
          tuple_functor(levels[k], levels[k + 1], insert_obj, insert_arr));
    }
  }

  out.level0_discrete = true;  // by construction; still reported
  SegalChecker checker(D);
  for (int n = 2; n <= nmax; ++n) out.segal.push_back({n, checker.verdict_for(n)});
  return out;
}

CatPtr pi0_double(const DoubleCategory& D, const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "pi0_double requires a weakly globular input");
  const auto& p0 = D.X0->pi0();
  const auto& p1 = D.X1->pi0();

  CategoryPresentation p;
  for (int rep : p0.representative) p.objects.push_back(D.X0->object(rep));
  auto obj_name = [&](int cls) { return D.X0->object(p0.representative[cls]); };
  auto arr_name = [&](int cls) { return D.X1->object(p1.representative[cls]); };

  // well-definedness of boundaries on classes
  std::vector<int> cls_src(p1.classes.size()), cls_tgt(p1.classes.size());
  for (size_t c = 0; c < p1.classes.size(); ++c) {
    cls_src[c] = p0.class_of[D.hsrc(p1.classes[c].front())];
    cls_tgt[c] = p0.class_of[D.htgt(p1.classes[c].front())];
    for (int h : p1.classes[c]) {
      if (p0.class_of[D.hsrc(h)] != cls_src[c] ||
          p0.class_of[D.htgt(h)] != cls_tgt[c])
        throw ValidationError("Pi0IllDefined",
                              "cell-connected horizontals with different classes");
    }
  }
  for (size_t c = 0; c < p1.classes.size(); ++c)
    p.arrows.push_back({arr_name(static_cast<int>(c)), obj_name(cls_src[c]),
                        obj_name(cls_tgt[c])});
  for (size_t o = 0; o < p0.classes.size(); ++o)
    p.identities[obj_name(static_cast<int>(o))] =
        arr_name(p1.class_of[D.hid(p0.representative[o])]);

  // composition induced by representatives; ambiguity is an error
  for (size_t a = 0; a < p1.classes.size(); ++a)
    for (size_t b = 0; b < p1.classes.size(); ++b) {
      if (cls_src[a] != cls_tgt[b]) continue;
      std::optional<int> result;
      for (int ha : p1.classes[a])
        for (int hb : p1.classes[b]) {
          auto comp = D.hcomp(ha, hb);
          if (!comp) continue;
          int cls = p1.class_of[*comp];
          if (result && *result != cls)
            throw ValidationError("Pi0IllDefined",
                                  "composition not constant on pi0 classes");
          result = cls;
        }
      if (!result)
        throw ValidationError("Pi0IllDefined",
                              "no strictly composable representatives for " +
                                  arr_name(static_cast<int>(a)) + " . " +
                                  arr_name(static_cast<int>(b)));
      p.compose.push_back({arr_name(static_cast<int>(a)),
                           arr_name(static_cast<int>(b)), arr_name(*result)});
    }
  return FinCategory::validate_ptr(p);
}

// ---------------------------------------------------------------------------
// Functors and transformations

CheckResult check_strict_functor(const DoubleFunctor& F) {
  CheckResult r;
  auto fail = [&r](const std::string& msg) {
    r.pass = false;
    if (r.failure.empty()) r.failure = msg;
  };
  const DoubleCategory& X = *F.dom;
  const DoubleCategory& Y = *F.cod;
  if (!FinFunctor::compose(Y.d0, F.F1).same_tables(FinFunctor::compose(F.F0, X.d0)))
    fail("d0 . F1 != F0 . d0");
  if (!FinFunctor::compose(Y.d1, F.F1).same_tables(FinFunctor::compose(F.F0, X.d1)))
    fail("d1 . F1 != F0 . d1");
  if (!FinFunctor::compose(F.F1, X.s).same_tables(FinFunctor::compose(Y.s, F.F0)))
    fail("F1 . s != s . F0");
  for (int i = 0; i < X.pairs.apex->num_objects() && r.pass; ++i) {
    auto [a, b] = X.pairs.obj_components[i];
    auto img = Y.hcomp(F.F1.obj(a), F.F1.obj(b));
    if (!img || *img != F.F1.obj(X.m.obj(i)))
      fail("m not preserved on horizontal pair (" + X.X1->object(a) + "," +
           X.X1->object(b) + ")");
  }
  for (int i = 0; i < X.pairs.apex->num_arrows() && r.pass; ++i) {
    auto [a, b] = X.pairs.arr_components[i];
    auto img = Y.ccomp(F.F1.arr(a), F.F1.arr(b));
    if (!img || *img != F.F1.arr(X.m.arr(i)))
      fail("m not preserved on cell pair (" + X.X1->arrow(a).id + "," +
           X.X1->arrow(b).id + ")");
  }
  return r;
}

DoubleFunctor identity_double_functor(const DoubleCategory& D) {
  return {&D, &D, FinFunctor::identity(D.X0), FinFunctor::identity(D.X1)};
}

DoubleFunctor compose_double_functors(const DoubleFunctor& G, const DoubleFunctor& F) {
  return {F.dom, G.cod, FinFunctor::compose(G.F0, F.F0),
          FinFunctor::compose(G.F1, F.F1)};
}

bool HorizontalTransformation::invertible(const DoubleCategory& E) const {
  for (int h : component) {
    // invertible horizontal arrow: iso in the horizontal-arrow category of E
    bool inv = false;
    for (int g = 0; g < E.X1->num_objects() && !inv; ++g) {
      auto gh = E.hcomp(g, h);
      auto hg = E.hcomp(h, g);
      if (gh && hg && *gh == E.hid(E.hsrc(h)) && *hg == E.hid(E.htgt(h))) inv = true;
    }
    if (!inv) return false;
  }
  return true;
}

CheckResult check_horizontal_transformation(const HorizontalTransformation& a) {
  CheckResult r;
  auto fail = [&r](const std::string& msg) {
    r.pass = false;
    if (r.failure.empty()) r.failure = msg;
  };
  const DoubleCategory& D = *a.G->dom;
  const DoubleCategory& E = *a.G->cod;
  for (int X = 0; X < D.X0->num_objects(); ++X) {
    int c = a.component[X];
    if (E.hsrc(c) != a.G->F0.obj(X) || E.htgt(c) != a.K->F0.obj(X))
      fail("component at " + D.X0->object(X) + " has wrong boundary");
  }
  for (int v = 0; v < D.X0->num_arrows(); ++v) {
    int cell = a.cell[v];
    if (E.ctop(cell) != a.component[D.X0->src(v)] ||
        E.cbot(cell) != a.component[D.X0->tgt(v)] ||
        E.cleft(cell) != a.G->F0.arr(v) || E.cright(cell) != a.K->F0.arr(v))
      fail("cell at vertical " + D.X0->arrow(v).id + " has wrong frame");
  }
  if (!r.pass) return r;
  // strict functoriality in the vertical direction
  for (int X = 0; X < D.X0->num_objects(); ++X)
    if (a.cell[D.vid(X)] != E.cid(a.component[X]))
      fail("a_{1_" + D.X0->object(X) + "} is not the identity cell");
  for (int v2 = 0; v2 < D.X0->num_arrows(); ++v2)
    for (int v1 = 0; v1 < D.X0->num_arrows(); ++v1) {
      if (!D.X0->composable(v2, v1)) continue;
      int lhs = a.cell[D.X0->compose(v2, v1)];
      auto rhs = E.vcomp(a.cell[v2], a.cell[v1]);
      if (!rhs || lhs != *rhs)
        fail("vertical functoriality fails on (" + D.X0->arrow(v2).id + "," +
             D.X0->arrow(v1).id + ")");
    }
  // horizontal naturality against every cell of D
  for (int z = 0; z < D.X1->num_arrows() && r.pass; ++z) {
    auto lhs = E.ccomp(a.cell[D.cright(z)], a.G->F1.arr(z));
    auto rhs = E.ccomp(a.K->F1.arr(z), a.cell[D.cleft(z)]);
    if (!lhs || !rhs || *lhs != *rhs)
      fail("horizontal naturality fails at cell " + D.X1->arrow(z).id);
  }
  return r;
}

CheckResult check_vertical_transformation(const VerticalTransformation& g) {
  CheckResult r;
  auto fail = [&r](const std::string& msg) {
    r.pass = false;
    if (r.failure.empty()) r.failure = msg;
  };
  const DoubleCategory& D = *g.F->dom;
  const DoubleCategory& E = *g.F->cod;
  for (int A = 0; A < D.X0->num_objects(); ++A) {
    int v = g.component[A];
    if (E.X0->src(v) != g.F->F0.obj(A) || E.X0->tgt(v) != g.G->F0.obj(A))
      fail("component at " + D.X0->object(A) + " has wrong boundary");
  }
  for (int h = 0; h < D.X1->num_objects(); ++h) {
    int cell = g.cell[h];
    if (E.ctop(cell) != g.F->F1.obj(h) || E.cbot(cell) != g.G->F1.obj(h) ||
        E.cleft(cell) != g.component[D.hsrc(h)] ||
        E.cright(cell) != g.component[D.htgt(h)])
      fail("cell at horizontal " + D.X1->object(h) + " has wrong frame");
  }
  if (!r.pass) return r;
  // strict functoriality in the horizontal direction
  for (int A = 0; A < D.X0->num_objects(); ++A)
    if (g.cell[D.hid(A)] != E.scell(g.component[A]))
      fail("gamma_{Id_" + D.X0->object(A) + "} is not id of the component");
  for (int i = 0; i < D.pairs.apex->num_objects(); ++i) {
    auto [h2, h1] = D.pairs.obj_components[i];
    auto rhs = E.ccomp(g.cell[h2], g.cell[h1]);
    if (!rhs || g.cell[D.m.obj(i)] != *rhs)
      fail("horizontal functoriality fails on (" + D.X1->object(h2) + "," +
           D.X1->object(h1) + ")");
  }
  // naturality in the vertical direction against every cell
  for (int z = 0; z < D.X1->num_arrows() && r.pass; ++z) {
    auto lhs = E.vcomp(g.cell[D.cbot(z)], g.F->F1.arr(z));
    auto rhs = E.vcomp(g.G->F1.arr(z), g.cell[D.ctop(z)]);
    if (!lhs || !rhs || *lhs != *rhs)
      fail("vertical naturality fails at cell " + D.X1->arrow(z).id);
  }
  return r;
}

CatPtr horizontal_category(const DoubleCategory& D) {
  CategoryPresentation p;
  p.objects = D.X0->objects();
  for (int h = 0; h < D.X1->num_objects(); ++h)
    p.arrows.push_back({D.X1->object(h), D.X0->object(D.hsrc(h)),
                        D.X0->object(D.htgt(h))});
  for (int o = 0; o < D.X0->num_objects(); ++o)
    p.identities[D.X0->object(o)] = D.X1->object(D.hid(o));
  for (int i = 0; i < D.pairs.apex->num_objects(); ++i) {
    auto [a, b] = D.pairs.obj_components[i];
    p.compose.push_back(
        {D.X1->object(a), D.X1->object(b), D.X1->object(D.m.obj(i))});
  }
  return FinCategory::validate_ptr(p);
}

FullSubcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects) {
  FullSubcategory out;
  std::set<int> keep(objects.begin(), objects.end());
  CategoryPresentation p;
  for (int o : keep) p.objects.push_back(c->object(o));
  std::vector<int> arrows;
  for (int f = 0; f < c->num_arrows(); ++f)
    if (keep.count(c->src(f)) && keep.count(c->tgt(f))) {
      arrows.push_back(f);
      p.arrows.push_back(c->arrow(f));
    }
  for (int o : keep) p.identities[c->object(o)] = c->arrow(c->identity(o)).id;
  for (int g : arrows)
    for (int f : arrows)
      if (c->composable(g, f))
        p.compose.push_back(
            {c->arrow(g).id, c->arrow(f).id, c->arrow(c->compose(g, f)).id});
  out.cat = FinCategory::validate_ptr(p);
  out.obj_to_parent.resize(out.cat->num_objects());
  out.arr_to_parent.resize(out.cat->num_arrows());
  std::vector<int> om(out.cat->num_objects()), am(out.cat->num_arrows());
  for (int o = 0; o < out.cat->num_objects(); ++o) {
    out.obj_to_parent[o] = c->object_index(out.cat->object(o));
    om[o] = out.obj_to_parent[o];
  }
  for (int f = 0; f < out.cat->num_arrows(); ++f) {
    out.arr_to_parent[f] = c->arrow_index(out.cat->arrow(f).id);
    am[f] = out.arr_to_parent[f];
  }
  out.inclusion = FinFunctor(out.cat, c, std::move(om), std::move(am), false);
  return out;
}

TwoEquivalenceVerdict check_2_equivalence(const DoubleCategory& X,
                                          const DoubleCategory& Y,
                                          const DoubleFunctor& F) {
  TwoEquivalenceVerdict out;
  WeakGlobularityReport wx = check_weak_globularity(X, 2);
  WeakGlobularityReport wy = check_weak_globularity(Y, 2);
  if (!wx.pass() || !wy.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "check_2_equivalence requires weakly globular inputs");

  const auto& px = X.X0->pi0();
  const auto& py = Y.X0->pi0();

  // hom-wise equivalences X_(a,b) -> Y_(Fa,Fb)
  for (size_t a = 0; a < px.classes.size() && out.detail.empty(); ++a)
    for (size_t b = 0; b < px.classes.size(); ++b) {
      std::vector<int> xobjs, yobjs;
      for (int h = 0; h < X.X1->num_objects(); ++h)
        if (px.class_of[X.hsrc(h)] == static_cast<int>(a) &&
            px.class_of[X.htgt(h)] == static_cast<int>(b))
          xobjs.push_back(h);
      int fa = py.class_of[F.F0.obj(px.representative[a])];
      int fb = py.class_of[F.F0.obj(px.representative[b])];
      for (int h = 0; h < Y.X1->num_objects(); ++h)
        if (py.class_of[Y.hsrc(h)] == fa && py.class_of[Y.htgt(h)] == fb)
          yobjs.push_back(h);
      FullSubcategory xs = full_subcategory(X.X1, xobjs);
      FullSubcategory ys = full_subcategory(Y.X1, yobjs);
      std::vector<int> om(xs.cat->num_objects()), am(xs.cat->num_arrows());
      for (int o = 0; o < xs.cat->num_objects(); ++o)
        om[o] = ys.cat->object_index(Y.X1->object(F.F1.obj(xs.obj_to_parent[o])));
      for (int f = 0; f < xs.cat->num_arrows(); ++f)
        am[f] = ys.cat->arrow_index(Y.X1->arrow(F.F1.arr(xs.arr_to_parent[f])).id);
      FinFunctor restricted(xs.cat, ys.cat, std::move(om), std::move(am), false);
      EquivalenceVerdict v = is_equivalence(restricted);
      if (!v.is_equivalence()) {
        out.failing_pair = {X.X0->object(px.representative[a]),
                            X.X0->object(px.representative[b])};
        out.detail = "hom-equivalence fails at (" + out.failing_pair->first + "," +
                     out.failing_pair->second + ")";
        break;
      }
    }

  // Pi0 F equivalence
  CatPtr p0x = pi0_double(X, wx);
  CatPtr p0y = pi0_double(Y, wy);
  std::vector<int> om(p0x->num_objects()), am(p0x->num_arrows());
  for (int o = 0; o < p0x->num_objects(); ++o) {
    int rep = X.X0->object_index(p0x->object(o));
    int img = F.F0.obj(rep);
    om[o] = p0y->object_index(Y.X0->object(py.representative[py.class_of[img]]));
  }
  const auto& p1y = Y.X1->pi0();
  for (int f = 0; f < p0x->num_arrows(); ++f) {
    int rep = X.X1->object_index(p0x->arrow(f).id);
    int img = F.F1.obj(rep);
    am[f] = p0y->arrow_index(Y.X1->object(p1y.representative[p1y.class_of[img]]));
  }
  FinFunctor pi0F(p0x, p0y, std::move(om), std::move(am));
  out.pi0_verdict = is_equivalence(pi0F);
  if (!out.pi0_verdict.is_equivalence() && out.detail.empty())
    out.detail = "Pi0 F is not an equivalence";
  out.pass = out.detail.empty();
  return out;
}

}  // namespace wgdbl
