#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wgdbl/fincat.hpp"

namespace wgdbl {

// Raw tables for a double category, mirroring the JSON input format.
// m entries are [later, earlier, composite]: the pair (a, b) is composable
// when the horizontal source of a equals the horizontal target of b, and
// m(a, b) is "a after b".
struct DoubleCategoryPresentation {
  CategoryPresentation X0, X1;
  std::map<std::string, std::string> d0_obj, d0_arr;
  std::map<std::string, std::string> d1_obj, d1_arr;
  std::map<std::string, std::string> s_obj, s_arr;
  std::vector<std::array<std::string, 3>> m_obj;
  std::vector<std::array<std::string, 3>> m_arr;
};

// An internal category in finite categories. X0 holds objects and vertical
// arrows, X1 holds horizontal arrows (objects) and double cells (arrows,
// composed vertically). `pairs` is the materialized X1 x_{X0} X1 and m the
// horizontal composition functor on it.
struct DoubleCategory {
  CatPtr X0, X1;
  FinFunctor d0, d1;  // X1 -> X0, horizontal source / target
  FinFunctor s;       // X0 -> X1, horizontal identities
  PullbackResult pairs;
  FinFunctor m;       // pairs.apex -> X1

  static DoubleCategory assemble(
      CatPtr X0, CatPtr X1, FinFunctor d0, FinFunctor d1, FinFunctor s,
      const std::function<std::optional<int>(int, int)>& hcomp_obj,
      const std::function<std::optional<int>(int, int)>& hcomp_cell);
  static DoubleCategory validate(const DoubleCategoryPresentation& raw);

  // X1 object -> X0 object
  int hsrc(int h) const { return d0.obj(h); }
  int htgt(int h) const { return d1.obj(h); }
  // cell boundaries: top/bottom are horizontal arrows, left/right vertical
  int ctop(int c) const { return X1->src(c); }
  int cbot(int c) const { return X1->tgt(c); }
  int cleft(int c) const { return d0.arr(c); }
  int cright(int c) const { return d1.arr(c); }

  int hid(int A) const { return s.obj(A); }    // Id_A
  int vid(int A) const { return X0->identity(A); }
  int cid(int h) const { return X1->identity(h); }  // 1_h
  int scell(int v) const { return s.arr(v); }       // id_v

  std::optional<int> hcomp(int a, int b) const;  // m on horizontal arrows
  std::optional<int> ccomp(int a, int b) const;  // m on cells
  std::optional<int> vcomp(int a, int b) const { return X1->try_compose(a, b); }

  bool cell_invertible(int c) const { return X1->is_iso(c); }

  DoubleCategoryPresentation presentation() const;
};

// The horizontal embedding H(C): arrows of C horizontally, trivial verticals.
DoubleCategory h_double(const CatPtr& C);
// The vertical embedding V(C): arrows of C vertically, trivial horizontals.
DoubleCategory v_double(const CatPtr& C);

// ---------------------------------------------------------------------------
// Nerve and weak globularity

struct NerveLevel {
  CatPtr cat;
  // tuples in diagram order (the composite is f_k . ... . f_1)
  std::vector<std::vector<int>> obj_tuples;  // entries are X1 objects
  std::vector<std::vector<int>> arr_tuples;  // entries are X1 arrows (cells)
  std::optional<int> find_obj(const std::vector<int>& t) const;
  std::optional<int> find_arr(const std::vector<int>& t) const;
  std::map<std::vector<int>, int> obj_lookup, arr_lookup;
};

// k = 0 gives X0, k = 1 gives X1 (with singleton tuples), k >= 2 the
// iterated pullback over X0 built via fincat pullbacks.
NerveLevel horizontal_nerve(const DoubleCategory& D, int k);

struct SegalVerdict {
  int n = 0;
  EquivalenceVerdict verdict;
};

struct WeakGlobularityReport {
  EquivalenceVerdict x0_verdict;
  std::vector<SegalVerdict> segal;
  bool isofibration_d0 = false, isofibration_d1 = false;
  bool pass() const {
    if (!x0_verdict.is_equivalence()) return false;
    for (const auto& s : segal)
      if (!s.verdict.is_equivalence()) return false;
    return true;
  }
};

WeakGlobularityReport check_weak_globularity(const DoubleCategory& D, int nmax = 3);

// pi0 classes of X0 with the canonical quotient/section pair.
DiscreteComparison object_classes(const DoubleCategory& D);

// ---------------------------------------------------------------------------
// Fillers (Lemma-4.5-style square completion)

enum class FillerSide { Left, Right };

struct Filler {
  int cell;          // vertically invertible, bottom = the given horizontal
  int through;       // Left: y1 with d0(cell) = x . y1; Right: x2 with d1(cell) = y . x2
};

// side = Left: vertical x into hsrc(f); side = Right: vertical y into htgt(f).
// Returns the least invertible cell over f, decomposed through the given
// vertical. Throws NotWeaklyGlobular when `wg` fails.
std::optional<Filler> find_filler(const DoubleCategory& D, FillerSide side,
                                  int vertical, int horizontal,
                                  const WeakGlobularityReport& wg);

// ---------------------------------------------------------------------------
// Discretization

struct TruncatedSimplicialCat {
  std::vector<NerveLevel> levels;  // 0..N
  // face[k][i] : level k -> level k-1, for 1 <= k <= N, 0 <= i <= k
  std::vector<std::vector<FinFunctor>> face;
  // degeneracy[k][i] : level k -> level k+1, for 0 <= k < N, 0 <= i <= k
  std::vector<std::vector<FinFunctor>> degeneracy;
};

struct DiscretizeResult {
  TruncatedSimplicialCat nerve;
  bool level0_discrete = false;
  std::vector<SegalVerdict> segal;
};

DiscretizeResult discretize(const DoubleCategory& D, int nmax,
                            const WeakGlobularityReport& wg);

// Levelwise pi0 of the horizontal nerve, as a finite category.
CatPtr pi0_double(const DoubleCategory& D, const WeakGlobularityReport& wg);

// ---------------------------------------------------------------------------
// Strict functors and transformations

struct DoubleFunctor {
  const DoubleCategory* dom = nullptr;
  const DoubleCategory* cod = nullptr;
  FinFunctor F0, F1;
};

struct CheckResult {
  bool pass = true;
  std::string failure;  // first violated equation, with the offending data
  explicit operator bool() const { return pass; }
};

// Verifies F0/F1 commute with d0, d1, s and m (pointwise table checks).
CheckResult check_strict_functor(const DoubleFunctor& F);

DoubleFunctor identity_double_functor(const DoubleCategory& D);
DoubleFunctor compose_double_functors(const DoubleFunctor& G, const DoubleFunctor& F);

// Horizontal transformation a : G => K between strict functors D -> E.
struct HorizontalTransformation {
  const DoubleFunctor* G = nullptr;
  const DoubleFunctor* K = nullptr;
  std::vector<int> component;  // D.X0 object -> E.X1 object (horizontal arrow)
  std::vector<int> cell;       // D.X0 arrow (vertical) -> E.X1 arrow (cell)
  bool invertible(const DoubleCategory& E) const;
};

CheckResult check_horizontal_transformation(const HorizontalTransformation& a);

// Vertical transformation g : F => G between strict functors D -> E.
struct VerticalTransformation {
  const DoubleFunctor* F = nullptr;
  const DoubleFunctor* G = nullptr;
  std::vector<int> component;  // D.X0 object -> E.X0 arrow (vertical)
  std::vector<int> cell;       // D.X1 object (horizontal) -> E.X1 arrow (cell)
};

CheckResult check_vertical_transformation(const VerticalTransformation& g);

struct TwoEquivalenceVerdict {
  bool pass = false;
  std::optional<std::pair<std::string, std::string>> failing_pair;  // (a, b) classes
  EquivalenceVerdict pi0_verdict;
  std::string detail;
};

TwoEquivalenceVerdict check_2_equivalence(const DoubleCategory& X,
                                          const DoubleCategory& Y,
                                          const DoubleFunctor& F);

// Full subcategory helper (objects given by indices into c).
struct FullSubcategory {
  CatPtr cat;
  std::vector<int> obj_to_parent, arr_to_parent;
  FinFunctor inclusion;
};
FullSubcategory full_subcategory(const CatPtr& c, const std::vector<int>& objects);

// Iso-classes of X1 objects (horizontal arrows up to vertically invertible cells).
struct HorizontalIsoClasses {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;
};
HorizontalIsoClasses horizontal_iso_classes(const DoubleCategory& D);

// The 1-category of objects and horizontal arrows (object names from X0,
// arrow names from X1 objects, composition from m).
CatPtr horizontal_category(const DoubleCategory& D);

}  // namespace wgdbl
