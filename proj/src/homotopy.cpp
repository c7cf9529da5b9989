#include "wgdbl/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace wgdbl {

GroupoidalVerdict check_groupoidal(const DoubleCategory& X,
                                   const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "check_groupoidal requires a weakly globular input");
  GroupoidalVerdict v;
  v.pass = true;
  // Each X_(a,b) is a full subcategory of X1; a cell between its objects is
  // invertible there iff it is invertible in X1.
  for (int c = 0; c < X.X1->num_arrows(); ++c)
    if (!X.X1->is_iso(c)) {
      v.pass = false;
      v.detail = "cell " + X.X1->arrow(c).id + " is not vertically invertible";
      return v;
    }
  CatPtr pi0 = pi0_double(X, wg);
  for (int f = 0; f < pi0->num_arrows(); ++f)
    if (!pi0->is_iso(f)) {
      v.pass = false;
      v.detail = "Pi0 X arrow " + pi0->arrow(f).id + " is not invertible";
      return v;
    }
  return v;
}

bool GroupTable::is_abelian() const {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

bool groups_isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.identity] != b.identity) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (perm[a.table[i][j]] != b.table[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

GroupTable hom_group(const FinCategory& c, int obj) {
  GroupTable g;
  const auto& arrows = c.hom(obj, obj);
  for (int f : arrows) g.elements.push_back(c.arrow(f).id);
  g.table.assign(arrows.size(), std::vector<int>(arrows.size(), -1));
  for (size_t i = 0; i < arrows.size(); ++i)
    for (size_t j = 0; j < arrows.size(); ++j) {
      int prod = c.compose(arrows[i], arrows[j]);
      auto it = std::find(arrows.begin(), arrows.end(), prod);
      if (it == arrows.end())
        throw ValidationError("NotGroupoidal", "endomorphisms not closed");
      g.table[i][j] = static_cast<int>(it - arrows.begin());
    }
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i] == c.identity(obj)) g.identity = static_cast<int>(i);
  for (int f : arrows)
    if (!c.is_iso(f))
      throw ValidationError("NotGroupoidal",
                            "endomorphism " + c.arrow(f).id + " not invertible");
  return g;
}

}  // namespace

HomotopyGroups homotopy_groups(const DoubleCategory& X,
                               const std::string& basepoint,
                               const WeakGlobularityReport& wg) {
  GroupoidalVerdict gv = check_groupoidal(X, wg);
  if (!gv.pass) throw ValidationError("NotGroupoidal", gv.detail);

  HomotopyGroups out;
  CatPtr pi0cat = pi0_double(X, wg);
  const auto& comps = pi0cat->pi0();
  out.pi0 = static_cast<int>(comps.classes.size());
  for (int rep : comps.representative)
    out.pi0_representatives.push_back(pi0cat->object(rep));

  const auto& classes = X.X0->pi0();
  int base_obj = X.X0->object_index(basepoint);
  int cls = classes.class_of[base_obj];
  int rep = classes.representative[cls];
  int pi0_obj = pi0cat->object_index(X.X0->object(rep));
  out.pi1 = hom_group(*pi0cat, pi0_obj);

  // pi2: endo-cells of id_x with id_x = s(gamma'(x))
  int idx = X.hid(rep);
  GroupTable& p2 = out.pi2;
  const auto& cells = X.X1->hom(idx, idx);
  for (int c : cells) p2.elements.push_back(X.X1->arrow(c).id);
  p2.table.assign(cells.size(), std::vector<int>(cells.size(), -1));
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = 0; j < cells.size(); ++j) {
      int prod = X.X1->compose(cells[i], cells[j]);
      auto it = std::find(cells.begin(), cells.end(), prod);
      p2.table[i][j] = static_cast<int>(it - cells.begin());
    }
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i] == X.cid(idx)) p2.identity = static_cast<int>(i);
  if (!p2.is_abelian())
    throw ValidationError("NotGroupoidal",
                          "pi2 table is not abelian; interchange violated");
  return out;
}

PostnikovResult postnikov_map(const DoubleCategory& X,
                              const WeakGlobularityReport& wg) {
  GroupoidalVerdict gv = check_groupoidal(X, wg);
  if (!gv.pass) throw ValidationError("NotGroupoidal", gv.detail);

  PostnikovResult out;
  CatPtr pi0cat = pi0_double(X, wg);
  out.target = std::make_shared<DoubleCategory>(h_double(pi0cat));
  const DoubleCategory& T = *out.target;

  const auto& p0 = X.X0->pi0();
  const auto& p1 = X.X1->pi0();
  std::vector<int> o0(X.X0->num_objects()), a0(X.X0->num_arrows());
  for (int o = 0; o < X.X0->num_objects(); ++o)
    o0[o] = T.X0->object_index(X.X0->object(p0.representative[p0.class_of[o]]));
  for (int v = 0; v < X.X0->num_arrows(); ++v)
    a0[v] = T.X0->identity(o0[X.X0->src(v)]);
  std::vector<int> o1(X.X1->num_objects()), a1(X.X1->num_arrows());
  for (int h = 0; h < X.X1->num_objects(); ++h)
    o1[h] = T.X1->object_index(X.X1->object(p1.representative[p1.class_of[h]]));
  for (int c = 0; c < X.X1->num_arrows(); ++c)
    a1[c] = T.X1->identity(o1[X.X1->src(c)]);
  out.map = {&X, out.target.get(), FinFunctor(X.X0, T.X0, o0, a0, false),
             FinFunctor(X.X1, T.X1, o1, a1, false)};
  out.functor_check = check_strict_functor(out.map);

  WeakGlobularityReport wt = check_weak_globularity(T, 2);
  out.pi0_iso = true;
  out.pi1_iso = true;
  HomotopyGroups src0 =
      homotopy_groups(X, X.X0->object(p0.representative[0]), wg);
  HomotopyGroups tgt0 =
      homotopy_groups(T, T.X0->object(o0[p0.representative[0]]), wt);
  if (src0.pi0 != tgt0.pi0) out.pi0_iso = false;
  for (size_t cls = 0; cls < p0.classes.size(); ++cls) {
    std::string bp = X.X0->object(p0.representative[cls]);
    HomotopyGroups hs = homotopy_groups(X, bp, wg);
    HomotopyGroups ht = homotopy_groups(T, T.X0->object(o0[p0.representative[cls]]), wt);
    if (!groups_isomorphic(hs.pi1, ht.pi1)) out.pi1_iso = false;
  }
  return out;
}

}  // namespace wgdbl
