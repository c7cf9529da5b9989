#include "wgdbl/bicat.hpp"

#include <algorithm>
#include <queue>

namespace wgdbl {

int Bicategory::object_index(const std::string& s) const {
  auto it = obj_lookup_.find(s);
  if (it == obj_lookup_.end())
    throw ValidationError("UnknownObject", "no bicategory object " + s);
  return it->second;
}
int Bicategory::one_index(const std::string& s) const {
  auto it = one_lookup_.find(s);
  if (it == one_lookup_.end())
    throw ValidationError("UnknownArrow", "no 1-cell " + s);
  return it->second;
}
int Bicategory::two_index(const std::string& s) const {
  auto it = two_lookup_.find(s);
  if (it == two_lookup_.end())
    throw ValidationError("UnknownArrow", "no 2-cell " + s);
  return it->second;
}

std::optional<int> Bicategory::vcomp2(int b, int a) const {
  auto it = vcomp2_table.find({b, a});
  if (it == vcomp2_table.end()) return std::nullopt;
  return it->second;
}
std::optional<int> Bicategory::hcomp1(int g, int f) const {
  auto it = hcomp1_table.find({g, f});
  if (it == hcomp1_table.end()) return std::nullopt;
  return it->second;
}
std::optional<int> Bicategory::hcomp2(int b, int a) const {
  auto it = hcomp2_table.find({b, a});
  if (it == hcomp2_table.end()) return std::nullopt;
  return it->second;
}
int Bicategory::inverse2(int a) const { return inverse2_[a]; }

const std::vector<int>& Bicategory::cells_between(int f, int g) const {
  auto it = cells_between_.find({f, g});
  return it == cells_between_.end() ? empty_ : it->second;
}

void Bicategory::build_indexes() {
  obj_lookup_.clear();
  one_lookup_.clear();
  two_lookup_.clear();
  cells_between_.clear();
  for (size_t i = 0; i < objects.size(); ++i)
    obj_lookup_[objects[i]] = static_cast<int>(i);
  for (size_t i = 0; i < ones.size(); ++i)
    one_lookup_[ones[i].id] = static_cast<int>(i);
  for (size_t i = 0; i < twos.size(); ++i)
    two_lookup_[twos[i].id] = static_cast<int>(i);
  for (size_t i = 0; i < twos.size(); ++i)
    cells_between_[{twos[i].src, twos[i].tgt}].push_back(static_cast<int>(i));
  inverse2_.assign(twos.size(), -1);
  for (size_t a = 0; a < twos.size(); ++a) {
    for (int b : cells_between(twos[a].tgt, twos[a].src)) {
      auto ba = vcomp2(b, static_cast<int>(a));
      auto ab = vcomp2(static_cast<int>(a), b);
      if (ba && ab && *ba == identity2[twos[a].src] &&
          *ab == identity2[twos[a].tgt]) {
        inverse2_[a] = b;
        break;
      }
    }
  }
}

Bicategory validate_bicategory(Bicategory B) {
  B.build_indexes();
  auto err = [](const std::string& code, const std::string& msg) {
    throw ValidationError(code, msg);
  };

  for (const auto& t : B.twos)
    if (B.ones[t.src].src != B.ones[t.tgt].src ||
        B.ones[t.src].tgt != B.ones[t.tgt].tgt)
      err("BicatBoundary", "2-cell " + t.id + " is not between parallel 1-cells");

  // hom-categories: identities and total associative vertical composition
  for (size_t f = 0; f < B.ones.size(); ++f) {
    int i = B.identity2[f];
    if (B.twos[i].src != static_cast<int>(f) || B.twos[i].tgt != static_cast<int>(f))
      err("BicatBoundary", "identity 2-cell of " + B.ones[f].id + " ill-typed");
  }
  for (size_t a = 0; a < B.twos.size(); ++a)
    for (size_t b = 0; b < B.twos.size(); ++b) {
      if (B.twos[b].src != B.twos[a].tgt) continue;
      auto ba = B.vcomp2(static_cast<int>(b), static_cast<int>(a));
      if (!ba)
        err("BicatVComp", "missing vertical composite (" + B.twos[b].id + "," +
                              B.twos[a].id + ")");
      if (B.twos[*ba].src != B.twos[a].src || B.twos[*ba].tgt != B.twos[b].tgt)
        err("BicatVComp", "ill-typed vertical composite");
    }
  for (size_t a = 0; a < B.twos.size(); ++a) {
    if (*B.vcomp2(static_cast<int>(a), B.identity2[B.twos[a].src]) !=
            static_cast<int>(a) ||
        *B.vcomp2(B.identity2[B.twos[a].tgt], static_cast<int>(a)) !=
            static_cast<int>(a))
      err("BicatVComp", "identity law fails at 2-cell " + B.twos[a].id);
  }
  for (size_t a = 0; a < B.twos.size(); ++a)
    for (size_t b = 0; b < B.twos.size(); ++b) {
      if (B.twos[b].src != B.twos[a].tgt) continue;
      for (size_t c = 0; c < B.twos.size(); ++c) {
        if (B.twos[c].src != B.twos[b].tgt) continue;
        int lhs = *B.vcomp2(static_cast<int>(c),
                            *B.vcomp2(static_cast<int>(b), static_cast<int>(a)));
        int rhs = *B.vcomp2(*B.vcomp2(static_cast<int>(c), static_cast<int>(b)),
                            static_cast<int>(a));
        if (lhs != rhs) err("BicatVComp", "vertical composition not associative");
      }
    }

  // horizontal composition of 1-cells
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      auto gf = B.hcomp1(static_cast<int>(g), static_cast<int>(f));
      if (!gf)
        err("BicatHComp", "missing horizontal composite (" + B.ones[g].id + "," +
                              B.ones[f].id + ")");
      if (B.ones[*gf].src != B.ones[f].src || B.ones[*gf].tgt != B.ones[g].tgt)
        err("BicatHComp", "ill-typed horizontal composite");
    }

  // horizontal composition of 2-cells: totality + functoriality
  for (size_t a = 0; a < B.twos.size(); ++a)
    for (size_t b = 0; b < B.twos.size(); ++b) {
      int f1 = B.twos[a].src, g1 = B.twos[b].src;
      if (B.ones[g1].src != B.ones[f1].tgt) continue;
      auto ba = B.hcomp2(static_cast<int>(b), static_cast<int>(a));
      if (!ba)
        err("BicatHComp", "missing horizontal composite of 2-cells (" +
                              B.twos[b].id + "," + B.twos[a].id + ")");
      if (B.twos[*ba].src != *B.hcomp1(g1, f1) ||
          B.twos[*ba].tgt != *B.hcomp1(B.twos[b].tgt, B.twos[a].tgt))
        err("BicatHComp", "ill-typed horizontal composite of 2-cells");
    }
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      if (*B.hcomp2(B.identity2[g], B.identity2[f]) !=
          B.identity2[*B.hcomp1(static_cast<int>(g), static_cast<int>(f))])
        err("InterchangeViolation", "1_g . 1_f differs from the identity on g.f");
    }
  for (size_t a1 = 0; a1 < B.twos.size(); ++a1)
    for (size_t a2 = 0; a2 < B.twos.size(); ++a2) {
      if (B.twos[a2].src != B.twos[a1].tgt) continue;
      for (size_t b1 = 0; b1 < B.twos.size(); ++b1) {
        if (B.ones[B.twos[b1].src].src != B.ones[B.twos[a1].src].tgt) continue;
        for (size_t b2 = 0; b2 < B.twos.size(); ++b2) {
          if (B.twos[b2].src != B.twos[b1].tgt) continue;
          int va = *B.vcomp2(static_cast<int>(a2), static_cast<int>(a1));
          int vb = *B.vcomp2(static_cast<int>(b2), static_cast<int>(b1));
          int lhs = *B.hcomp2(vb, va);
          int rhs = *B.vcomp2(
              *B.hcomp2(static_cast<int>(b2), static_cast<int>(a2)),
              *B.hcomp2(static_cast<int>(b1), static_cast<int>(a1)));
          if (lhs != rhs)
            err("InterchangeViolation",
                "interchange fails on (" + B.twos[b2].id + "," + B.twos[b1].id +
                    ") . (" + B.twos[a2].id + "," + B.twos[a1].id + ")");
        }
      }
    }

  // coherence data: default to strictness when omitted
  bool strict_units = B.lunitor.empty() && B.runitor.empty();
  if (strict_units) {
    B.lunitor.resize(B.ones.size());
    B.runitor.resize(B.ones.size());
    for (size_t f = 0; f < B.ones.size(); ++f) {
      int lf = *B.hcomp1(B.identity1[B.ones[f].tgt], static_cast<int>(f));
      int rf = *B.hcomp1(static_cast<int>(f), B.identity1[B.ones[f].src]);
      if (lf != static_cast<int>(f) || rf != static_cast<int>(f))
        err("TriangleViolation",
            "no unitors supplied and units are not strict at " + B.ones[f].id);
      B.lunitor[f] = B.identity2[f];
      B.runitor[f] = B.identity2[f];
    }
  }
  bool strict_assoc = B.associator.empty();
  if (strict_assoc) {
    for (size_t f = 0; f < B.ones.size(); ++f)
      for (size_t g = 0; g < B.ones.size(); ++g) {
        if (B.ones[g].src != B.ones[f].tgt) continue;
        for (size_t h = 0; h < B.ones.size(); ++h) {
          if (B.ones[h].src != B.ones[g].tgt) continue;
          int left = *B.hcomp1(*B.hcomp1(static_cast<int>(h), static_cast<int>(g)),
                               static_cast<int>(f));
          int right = *B.hcomp1(
              static_cast<int>(h),
              *B.hcomp1(static_cast<int>(g), static_cast<int>(f)));
          if (left != right)
            err("PentagonViolation",
                "no associator supplied and composition is not associative");
          B.associator[{static_cast<int>(h), static_cast<int>(g),
                        static_cast<int>(f)}] = B.identity2[left];
        }
      }
  }
  B.build_indexes();

  // boundaries + invertibility of the coherence cells
  for (size_t f = 0; f < B.ones.size(); ++f) {
    int lf = B.lunitor[f], rf = B.runitor[f];
    if (B.twos[lf].src != *B.hcomp1(B.identity1[B.ones[f].tgt], static_cast<int>(f)) ||
        B.twos[lf].tgt != static_cast<int>(f) || B.inverse2(lf) < 0)
      err("TriangleViolation", "left unitor ill-typed or not invertible at " +
                                   B.ones[f].id);
    if (B.twos[rf].src != *B.hcomp1(static_cast<int>(f), B.identity1[B.ones[f].src]) ||
        B.twos[rf].tgt != static_cast<int>(f) || B.inverse2(rf) < 0)
      err("TriangleViolation", "right unitor ill-typed or not invertible at " +
                                   B.ones[f].id);
  }
  for (const auto& [key, cell] : B.associator) {
    auto [h, g, f] = key;
    if (B.twos[cell].src != *B.hcomp1(*B.hcomp1(h, g), f) ||
        B.twos[cell].tgt != *B.hcomp1(h, *B.hcomp1(g, f)) || B.inverse2(cell) < 0)
      err("PentagonViolation", "associator ill-typed or not invertible at (" +
                                   B.ones[h].id + "," + B.ones[g].id + "," +
                                   B.ones[f].id + ")");
  }

  // pentagon
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      for (size_t h = 0; h < B.ones.size(); ++h) {
        if (B.ones[h].src != B.ones[g].tgt) continue;
        for (size_t k = 0; k < B.ones.size(); ++k) {
          if (B.ones[k].src != B.ones[h].tgt) continue;
          int ki = static_cast<int>(k), hi = static_cast<int>(h);
          int gi = static_cast<int>(g), fi = static_cast<int>(f);
          int hg = *B.hcomp1(hi, gi);
          int gf = *B.hcomp1(gi, fi);
          int kh = *B.hcomp1(ki, hi);
          int p1 = *B.hcomp2(B.associator.at({ki, hi, gi}), B.identity2[fi]);
          int p2 = B.associator.at({ki, hg, fi});
          int p3 = *B.hcomp2(B.identity2[ki], B.associator.at({hi, gi, fi}));
          int lhs = *B.vcomp2(p3, *B.vcomp2(p2, p1));
          int rhs = *B.vcomp2(B.associator.at({ki, hi, gf}),
                              B.associator.at({kh, gi, fi}));
          if (lhs != rhs)
            err("PentagonViolation", "pentagon fails on (" + B.ones[k].id + "," +
                                         B.ones[h].id + "," + B.ones[g].id + "," +
                                         B.ones[f].id + ")");
        }
      }
    }

  // triangle
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      int gi = static_cast<int>(g), fi = static_cast<int>(f);
      int one = B.identity1[B.ones[f].tgt];
      int lhs = *B.vcomp2(*B.hcomp2(B.identity2[gi], B.lunitor[fi]),
                          B.associator.at({gi, one, fi}));
      int rhs = *B.hcomp2(B.runitor[gi], B.identity2[fi]);
      if (lhs != rhs)
        err("TriangleViolation",
            "triangle fails on (" + B.ones[g].id + "," + B.ones[f].id + ")");
    }

  // flags
  B.locally_posetal = true;
  for (const auto& [key, cells] : B.cells_between_)
    if (cells.size() > 1) B.locally_posetal = false;

  // naturality of the coherence cells: automatic in the posetal case
  if (!B.locally_posetal) {
    for (size_t al = 0; al < B.twos.size(); ++al) {
      int f = B.twos[al].src, fp = B.twos[al].tgt;
      int oneT = B.identity1[B.ones[f].tgt];
      int lhs = *B.vcomp2(B.lunitor[fp],
                          *B.hcomp2(B.identity2[oneT], static_cast<int>(al)));
      int rhs = *B.vcomp2(static_cast<int>(al), B.lunitor[f]);
      if (lhs != rhs) err("TriangleViolation", "left unitor not natural");
      int oneS = B.identity1[B.ones[f].src];
      lhs = *B.vcomp2(B.runitor[fp],
                      *B.hcomp2(static_cast<int>(al), B.identity2[oneS]));
      rhs = *B.vcomp2(static_cast<int>(al), B.runitor[f]);
      if (lhs != rhs) err("TriangleViolation", "right unitor not natural");
    }
    for (size_t a = 0; a < B.twos.size(); ++a)
      for (size_t b = 0; b < B.twos.size(); ++b) {
        if (B.ones[B.twos[b].src].src != B.ones[B.twos[a].src].tgt) continue;
        for (size_t cc = 0; cc < B.twos.size(); ++cc) {
          if (B.ones[B.twos[cc].src].src != B.ones[B.twos[b].src].tgt) continue;
          int f = B.twos[a].src, g = B.twos[b].src, h = B.twos[cc].src;
          int fp = B.twos[a].tgt, gp = B.twos[b].tgt, hp = B.twos[cc].tgt;
          int lhs = *B.vcomp2(
              B.associator.at({hp, gp, fp}),
              *B.hcomp2(*B.hcomp2(static_cast<int>(cc), static_cast<int>(b)),
                        static_cast<int>(a)));
          int rhs = *B.vcomp2(
              *B.hcomp2(static_cast<int>(cc),
                        *B.hcomp2(static_cast<int>(b), static_cast<int>(a))),
              B.associator.at({h, g, f}));
          if (lhs != rhs) err("PentagonViolation", "associator not natural");
        }
      }
  }

  B.strict = true;
  for (size_t f = 0; f < B.ones.size() && B.strict; ++f)
    if (B.lunitor[f] != B.identity2[f] || B.runitor[f] != B.identity2[f])
      B.strict = false;
  for (const auto& [key, cell] : B.associator) {
    (void)key;
    if (cell != B.identity2[B.twos[cell].src] ||
        B.twos[cell].src != B.twos[cell].tgt)
      B.strict = false;
  }
  return B;
}

Bicategory locally_discrete_bicategory(const CatPtr& C) {
  Bicategory B;
  B.objects = C->objects();
  for (const auto& a : C->arrows())
    B.ones.push_back({a.id, C->object_index(a.src), C->object_index(a.tgt)});
  B.identity1.resize(B.objects.size());
  for (size_t o = 0; o < B.objects.size(); ++o)
    B.identity1[o] = static_cast<int>(
        std::find_if(B.ones.begin(), B.ones.end(),
                     [&](const Bicategory::OneCell& c) {
                       return c.id == C->arrow(C->identity(static_cast<int>(o))).id;
                     }) -
        B.ones.begin());
  B.identity2.resize(B.ones.size());
  for (size_t f = 0; f < B.ones.size(); ++f) {
    B.twos.push_back({"1[" + B.ones[f].id + "]", static_cast<int>(f),
                      static_cast<int>(f)});
    B.identity2[f] = static_cast<int>(f);
  }
  for (size_t f = 0; f < B.ones.size(); ++f)
    B.vcomp2_table[{static_cast<int>(f), static_cast<int>(f)}] =
        static_cast<int>(f);
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      int gf = C->compose(C->arrow_index(B.ones[g].id),
                          C->arrow_index(B.ones[f].id));
      int gfi = 0;
      for (size_t i = 0; i < B.ones.size(); ++i)
        if (B.ones[i].id == C->arrow(gf).id) gfi = static_cast<int>(i);
      B.hcomp1_table[{static_cast<int>(g), static_cast<int>(f)}] = gfi;
      B.hcomp2_table[{static_cast<int>(g), static_cast<int>(f)}] = gfi;
    }
  return validate_bicategory(std::move(B));
}

std::vector<int> quasi_units(const Bicategory& B) {
  std::vector<int> out;
  for (size_t f = 0; f < B.ones.size(); ++f) {
    if (B.ones[f].src != B.ones[f].tgt) continue;
    int one = B.identity1[B.ones[f].src];
    bool found = static_cast<int>(f) == one;
    for (int c : B.cells_between(static_cast<int>(f), one))
      if (B.inverse2(c) >= 0) found = true;
    if (found) out.push_back(static_cast<int>(f));
  }
  return out;
}

std::vector<int> equivalences(const Bicategory& B) {
  auto iso_to_identity = [&B](int f) {
    int one = B.identity1[B.ones[f].src];
    if (B.ones[f].src != B.ones[f].tgt) return false;
    if (f == one) return true;
    for (int c : B.cells_between(f, one))
      if (B.inverse2(c) >= 0) return true;
    return false;
  };
  std::vector<int> out;
  for (size_t f = 0; f < B.ones.size(); ++f) {
    bool ok = false;
    for (size_t g = 0; g < B.ones.size() && !ok; ++g) {
      if (B.ones[g].src != B.ones[f].tgt || B.ones[g].tgt != B.ones[f].src)
        continue;
      auto gf = B.hcomp1(static_cast<int>(g), static_cast<int>(f));
      auto fg = B.hcomp1(static_cast<int>(f), static_cast<int>(g));
      if (gf && fg && iso_to_identity(*gf) && iso_to_identity(*fg)) ok = true;
    }
    if (ok) out.push_back(static_cast<int>(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental bicategory

FundamentalBicat fundamental_bicategory(const DoubleCategory& X,
                                        const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "fundamental bicategory requires weak globularity");
  FundamentalBicat out;
  Bicategory& B = out.bic;
  const auto& p0 = X.X0->pi0();

  for (size_t c = 0; c < p0.classes.size(); ++c) {
    B.objects.push_back(X.X0->object(p0.representative[c]));
    out.object_class_rep.push_back(p0.representative[c]);
  }
  for (int h = 0; h < X.X1->num_objects(); ++h)
    B.ones.push_back({X.X1->object(h), p0.class_of[X.hsrc(h)],
                      p0.class_of[X.htgt(h)]});
  for (int a = 0; a < X.X1->num_arrows(); ++a)
    B.twos.push_back({X.X1->arrow(a).id, X.ctop(a), X.cbot(a)});
  B.identity1.resize(B.objects.size());
  for (size_t c = 0; c < p0.classes.size(); ++c)
    B.identity1[c] = X.hid(p0.representative[c]);
  B.identity2.resize(B.ones.size());
  for (int h = 0; h < X.X1->num_objects(); ++h) B.identity2[h] = X.cid(h);

  for (int a = 0; a < X.X1->num_arrows(); ++a)
    for (int b = 0; b < X.X1->num_arrows(); ++b)
      if (X.cbot(a) == X.ctop(b))
        B.vcomp2_table[{b, a}] = X.X1->compose(b, a);

  // chosen lifts: identity cells when strictly composable, else the least
  // pair of invertible cells with strictly composable sources
  auto choose_lift = [&X](int g, int f) -> std::optional<std::array<int, 2>> {
    if (X.hsrc(g) == X.htgt(f)) return std::array<int, 2>{X.cid(f), X.cid(g)};
    for (int a = 0; a < X.X1->num_arrows(); ++a) {
      if (X.cbot(a) != f || !X.cell_invertible(a)) continue;
      for (int b = 0; b < X.X1->num_arrows(); ++b) {
        if (X.cbot(b) != g || !X.cell_invertible(b)) continue;
        if (X.htgt(X.ctop(a)) == X.hsrc(X.ctop(b)))
          return std::array<int, 2>{a, b};
      }
    }
    return std::nullopt;
  };

  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      auto lift = choose_lift(static_cast<int>(g), static_cast<int>(f));
      if (!lift)
        throw ValidationError("CoherenceSearchFailed",
                              "no composition lift for (" + B.ones[g].id + "," +
                                  B.ones[f].id + ")");
      out.lifts[{static_cast<int>(g), static_cast<int>(f)}] = *lift;
      int f3 = X.ctop((*lift)[0]), g3 = X.ctop((*lift)[1]);
      B.hcomp1_table[{static_cast<int>(g), static_cast<int>(f)}] =
          *X.hcomp(g3, f3);
    }

  for (size_t a = 0; a < B.twos.size(); ++a)
    for (size_t b = 0; b < B.twos.size(); ++b) {
      int f1 = B.twos[a].src, f2 = B.twos[a].tgt;
      int g1 = B.twos[b].src, g2 = B.twos[b].tgt;
      if (B.ones[g1].src != B.ones[f1].tgt) continue;
      const auto& l1 = out.lifts.at({g1, f1});
      const auto& l2 = out.lifts.at({g2, f2});
      int a2inv = X.X1->inverse(l2[0]);
      int b2inv = X.X1->inverse(l2[1]);
      if (a2inv < 0 || b2inv < 0)
        throw ValidationError("CoherenceSearchFailed",
                              "composition lift cell is not invertible");
      int cl = X.X1->compose(a2inv,
                             X.X1->compose(static_cast<int>(a), l1[0]));
      int cr = X.X1->compose(b2inv,
                             X.X1->compose(static_cast<int>(b), l1[1]));
      auto comp = X.ccomp(cr, cl);
      if (!comp)
        throw ValidationError("CoherenceSearchFailed",
                              "lifted 2-cells fail to compose horizontally");
      B.hcomp2_table[{static_cast<int>(b), static_cast<int>(a)}] = *comp;
    }

  // coherence cells: prefer identities, else the least invertible cell
  auto comparison = [&X](int from, int to) -> std::optional<int> {
    if (from == to) return X.cid(from);
    for (int c : X.X1->hom(from, to))
      if (X.cell_invertible(c)) return c;
    return std::nullopt;
  };
  B.lunitor.resize(B.ones.size());
  B.runitor.resize(B.ones.size());
  for (size_t f = 0; f < B.ones.size(); ++f) {
    int lf = *B.hcomp1(B.identity1[B.ones[f].tgt], static_cast<int>(f));
    int rf = *B.hcomp1(static_cast<int>(f), B.identity1[B.ones[f].src]);
    auto lc = comparison(lf, static_cast<int>(f));
    auto rc = comparison(rf, static_cast<int>(f));
    if (!lc || !rc)
      throw ValidationError("CoherenceSearchFailed",
                            "no unitor cell for " + B.ones[f].id);
    B.lunitor[f] = *lc;
    B.runitor[f] = *rc;
  }
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      for (size_t h = 0; h < B.ones.size(); ++h) {
        if (B.ones[h].src != B.ones[g].tgt) continue;
        int hi = static_cast<int>(h), gi = static_cast<int>(g),
            fi = static_cast<int>(f);
        int left = *B.hcomp1(*B.hcomp1(hi, gi), fi);
        int right = *B.hcomp1(hi, *B.hcomp1(gi, fi));
        auto cell = comparison(left, right);
        if (!cell)
          throw ValidationError("CoherenceSearchFailed",
                                "no associator cell for (" + B.ones[h].id + "," +
                                    B.ones[g].id + "," + B.ones[f].id + ")");
        B.associator[{hi, gi, fi}] = *cell;
      }
    }

  B = validate_bicategory(std::move(B));
  return out;
}

// ---------------------------------------------------------------------------
// Marked paths

MarkedDouble marked_paths_double(const Bicategory& B, int max_len) {
  MarkedDouble out;
  if (max_len < 1)
    throw ValidationError("UnsupportedBicategory", "max path length must be >= 1");

  // resolve comparisons either strictly or through posetal uniqueness
  if (!B.strict && !B.locally_posetal)
    throw ValidationError("UnsupportedBicategory",
                          "marked paths need a strict or locally posetal input");

  struct Path {
    int start;
    std::vector<int> cells;
  };
  std::vector<Path> paths;
  for (size_t o = 0; o < B.objects.size(); ++o)
    paths.push_back({static_cast<int>(o), {}});
  size_t frontier_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t frontier_end = paths.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      if (static_cast<int>(paths[i].cells.size()) != len - 1) continue;
      int end = paths[i].cells.empty() ? paths[i].start
                                       : B.ones[paths[i].cells.back()].tgt;
      for (size_t f = 0; f < B.ones.size(); ++f)
        if (B.ones[f].src == end) {
          Path p = paths[i];
          p.cells.push_back(static_cast<int>(f));
          paths.push_back(p);
        }
    }
    frontier_begin = frontier_end;
  }

  auto path_code = [&B](const Path& p) {
    std::string e = B.objects[p.start];
    for (int c : p.cells) e = pair_id(e, B.ones[c].id);
    return e;
  };
  auto vertex = [&B](const Path& p, int i) {
    return i == 0 ? p.start : B.ones[p.cells[i - 1]].tgt;
  };
  // chosen composite of the marked segment, folded front to back
  auto segment = [&B](const Path& p, int i0, int i1) {
    if (i0 == i1) return B.identity1[i0 == 0 ? p.start : B.ones[p.cells[i0 - 1]].tgt];
    int acc = p.cells[i0];
    for (int j = i0 + 1; j < i1; ++j) acc = *B.hcomp1(p.cells[j], acc);
    return acc;
  };
  (void)vertex;

  CategoryPresentation x0;
  std::vector<MarkedDouble::PathObj> objs;
  std::vector<std::string> obj_names;
  for (const auto& p : paths)
    for (int i = 0; i <= static_cast<int>(p.cells.size()); ++i) {
      objs.push_back({p.start, p.cells, i});
      obj_names.push_back("P" + pair_id(path_code(p), std::to_string(i)));
      x0.objects.push_back(obj_names.back());
    }
  auto marked = [&B](const MarkedDouble::PathObj& o) {
    return o.mark == 0 ? o.start : B.ones[o.cells[o.mark - 1]].tgt;
  };
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j)
      if (marked(objs[i]) == marked(objs[j]))
        x0.arrows.push_back({"V" + pair_id(obj_names[i], obj_names[j]),
                             obj_names[i], obj_names[j]});
  for (size_t i = 0; i < objs.size(); ++i)
    x0.identities[obj_names[i]] = "V" + pair_id(obj_names[i], obj_names[i]);
  {
    std::map<int, std::vector<int>> by_marked;
    for (size_t i = 0; i < objs.size(); ++i)
      by_marked[marked(objs[i])].push_back(static_cast<int>(i));
    for (const auto& [m, members] : by_marked)
      for (int i : members)
        for (int j : members)
          for (int k : members)
            x0.compose.push_back({"V" + pair_id(obj_names[j], obj_names[k]),
                                  "V" + pair_id(obj_names[i], obj_names[j]),
                                  "V" + pair_id(obj_names[i], obj_names[k])});
  }
  CatPtr X0 = FinCategory::validate_ptr(x0);

  std::vector<MarkedDouble::PathArrow> hors;
  std::vector<std::string> hor_names;
  CategoryPresentation x1;
  for (const auto& p : paths) {
    int n = static_cast<int>(p.cells.size());
    for (int i0 = 0; i0 <= n; ++i0)
      for (int i1 = i0; i1 <= n; ++i1) {
        hors.push_back({p.start, p.cells, i0, i1});
        hor_names.push_back("H" + pair_id(path_code(p), std::to_string(i0) + "." +
                                                            std::to_string(i1)));
        x1.objects.push_back(hor_names.back());
      }
  }
  auto hmarked0 = [&B](const MarkedDouble::PathArrow& h) {
    return h.mark0 == 0 ? h.start : B.ones[h.cells[h.mark0 - 1]].tgt;
  };
  auto hmarked1 = [&B](const MarkedDouble::PathArrow& h) {
    return h.mark1 == 0 ? h.start : B.ones[h.cells[h.mark1 - 1]].tgt;
  };
  auto hsegment = [&B, &segment](const MarkedDouble::PathArrow& h) {
    return segment({h.start, h.cells}, h.mark0, h.mark1);
  };

  struct MCell {
    int top, bot, two;
  };
  std::vector<MCell> cells;
  {
    std::map<std::pair<int, int>, std::vector<int>> hor_by_marks;
    for (size_t i = 0; i < hors.size(); ++i)
      hor_by_marks[{hmarked0(hors[i]), hmarked1(hors[i])}].push_back(
          static_cast<int>(i));
    for (const auto& [mk, members] : hor_by_marks)
      for (int i : members)
        for (int j : members)
          for (int two : B.cells_between(hsegment(hors[i]), hsegment(hors[j])))
            cells.push_back({i, j, two});
  }
  auto cell_name = [&](const MCell& c) {
    return "C" + pair_id(hor_names[c.top],
                         pair_id(hor_names[c.bot], B.twos[c.two].id));
  };
  std::map<std::tuple<int, int, int>, int> cell_index;
  for (size_t i = 0; i < cells.size(); ++i) {
    x1.arrows.push_back(
        {cell_name(cells[i]), hor_names[cells[i].top], hor_names[cells[i].bot]});
    cell_index[{cells[i].top, cells[i].bot, cells[i].two}] = static_cast<int>(i);
  }
  for (size_t i = 0; i < hors.size(); ++i)
    x1.identities[hor_names[i]] = cell_name(
        {static_cast<int>(i), static_cast<int>(i), B.identity2[hsegment(hors[i])]});
  {
    std::map<int, std::vector<int>> cells_by_top;
    for (size_t i = 0; i < cells.size(); ++i)
      cells_by_top[cells[i].top].push_back(static_cast<int>(i));
    for (size_t c1 = 0; c1 < cells.size(); ++c1) {
      auto it = cells_by_top.find(cells[c1].bot);
      if (it == cells_by_top.end()) continue;
      for (int c2 : it->second) {
        int two = *B.vcomp2(cells[c2].two, cells[c1].two);
        x1.compose.push_back(
            {cell_name(cells[c2]), cell_name(cells[c1]),
             cell_name({cells[c1].top, cells[c2].bot, two})});
      }
    }
  }
  CatPtr X1 = FinCategory::validate_ptr(x1);

  // index translation: our local vectors are in pre-sort order
  std::map<std::string, int> obj_local, hor_local, cell_local;
  for (size_t i = 0; i < objs.size(); ++i) obj_local[obj_names[i]] = static_cast<int>(i);
  for (size_t i = 0; i < hors.size(); ++i) hor_local[hor_names[i]] = static_cast<int>(i);
  for (size_t i = 0; i < cells.size(); ++i)
    cell_local[cell_name(cells[i])] = static_cast<int>(i);

  auto obj_name_of = [&](int local) { return obj_names[local]; };
  std::vector<int> d0o(X1->num_objects()), d1o(X1->num_objects());
  std::vector<int> d0a(X1->num_arrows()), d1a(X1->num_arrows());
  for (int h = 0; h < X1->num_objects(); ++h) {
    const auto& hh = hors[hor_local.at(X1->object(h))];
    Path p{hh.start, hh.cells};
    d0o[h] = X0->object_index(
        "P" + pair_id(path_code(p), std::to_string(hh.mark0)));
    d1o[h] = X0->object_index(
        "P" + pair_id(path_code(p), std::to_string(hh.mark1)));
  }
  for (int a = 0; a < X1->num_arrows(); ++a) {
    const auto& c = cells[cell_local.at(X1->arrow(a).id)];
    const auto& th = hors[c.top];
    const auto& bh = hors[c.bot];
    Path tp{th.start, th.cells}, bp{bh.start, bh.cells};
    std::string t0 = "P" + pair_id(path_code(tp), std::to_string(th.mark0));
    std::string b0 = "P" + pair_id(path_code(bp), std::to_string(bh.mark0));
    std::string t1 = "P" + pair_id(path_code(tp), std::to_string(th.mark1));
    std::string b1 = "P" + pair_id(path_code(bp), std::to_string(bh.mark1));
    d0a[a] = X0->arrow_index("V" + pair_id(t0, b0));
    d1a[a] = X0->arrow_index("V" + pair_id(t1, b1));
  }
  FinFunctor d0(X1, X0, d0o, d0a, false), d1(X1, X0, d1o, d1a, false);

  std::vector<int> so(X0->num_objects()), sa(X0->num_arrows());
  for (int o = 0; o < X0->num_objects(); ++o) {
    const auto& oo = objs[obj_local.at(X0->object(o))];
    Path p{oo.start, oo.cells};
    so[o] = X1->object_index("H" + pair_id(path_code(p),
                                           std::to_string(oo.mark) + "." +
                                               std::to_string(oo.mark)));
  }
  for (int v = 0; v < X0->num_arrows(); ++v) {
    int i = X0->src(v), j = X0->tgt(v);
    const auto& oi = objs[obj_local.at(X0->object(i))];
    int m = marked(oi);
    std::string top = X1->object(so[i]);
    std::string bot = X1->object(so[j]);
    sa[v] = X1->arrow_index(
        "C" + pair_id(top, pair_id(bot, B.twos[B.identity2[B.identity1[m]]].id)));
  }
  FinFunctor s(X0, X1, so, sa, false);

  auto ho = [&](int a, int b) -> std::optional<int> {
    const auto& ha = hors[hor_local.at(X1->object(a))];
    const auto& hb = hors[hor_local.at(X1->object(b))];
    if (ha.start != hb.start || ha.cells != hb.cells) return std::nullopt;
    if (hb.mark1 != ha.mark0) return std::nullopt;
    Path p{ha.start, ha.cells};
    return X1->object_index("H" + pair_id(path_code(p),
                                          std::to_string(hb.mark0) + "." +
                                              std::to_string(ha.mark1)));
  };
  auto hc = [&](int a, int b) -> std::optional<int> {
    const auto& ca = cells[cell_local.at(X1->arrow(a).id)];
    const auto& cb = cells[cell_local.at(X1->arrow(b).id)];
    auto top = ho(X1->object_index(hor_names[ca.top]),
                  X1->object_index(hor_names[cb.top]));
    auto bot = ho(X1->object_index(hor_names[ca.bot]),
                  X1->object_index(hor_names[cb.bot]));
    if (!top || !bot) return std::nullopt;
    int source1 = hsegment(hors[hor_local.at(X1->object(*top))]);
    int target1 = hsegment(hors[hor_local.at(X1->object(*bot))]);
    int two = -1;
    if (B.strict) {
      two = *B.hcomp2(ca.two, cb.two);
    } else {
      // locally posetal: the unique comparison cell
      for (int c : B.cells_between(source1, target1)) two = c;
      if (two < 0)
        throw ValidationError("UnsupportedBicategory",
                              "no comparison 2-cell for a marked-path composite");
    }
    auto idx = cell_index.find({hor_local.at(X1->object(*top)),
                                hor_local.at(X1->object(*bot)), two});
    if (idx == cell_index.end())
      throw ValidationError("UnsupportedBicategory",
                            "marked-path composite cell escapes");
    return X1->arrow_index(
        cell_name(cells[idx->second]));
  };

  out.dbl = DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc);
  (void)obj_name_of;

  out.objects.resize(X0->num_objects());
  for (int o = 0; o < X0->num_objects(); ++o)
    out.objects[o] = objs[obj_local.at(X0->object(o))];
  out.horizontals.resize(X1->num_objects());
  for (int h = 0; h < X1->num_objects(); ++h)
    out.horizontals[h] = hors[hor_local.at(X1->object(h))];
  out.cell_two.resize(X1->num_arrows());
  for (int a = 0; a < X1->num_arrows(); ++a)
    out.cell_two[a] = cells[cell_local.at(X1->arrow(a).id)].two;
  return out;
}

// ---------------------------------------------------------------------------
// Bicategory of fractions

BicatFractions bicat_of_fractions(const FractionsPresentation& P) {
  FractionsReport rep = check_fractions_conditions(P);
  if (!rep.cf1 || !rep.cf2 || !rep.cf3)
    throw ValidationError("ConditionsFailed", rep.failures.empty()
                                                  ? "CF conditions fail"
                                                  : rep.failures.front());
  const FinCategory& C = *P.base;
  BicatFractions out;
  Bicategory& B = out.bic;
  B.objects = C.objects();

  for (int w : P.w)
    for (int f = 0; f < C.num_arrows(); ++f) {
      if (C.src(f) != C.src(w)) continue;
      out.span_lookup[{w, f}] = static_cast<int>(B.ones.size());
      out.span.push_back({w, f});
      B.ones.push_back({"s" + pair_id(C.arrow(w).id, C.arrow(f).id), C.tgt(w),
                        C.tgt(f)});
    }
  B.identity1.resize(B.objects.size());
  for (int o = 0; o < C.num_objects(); ++o)
    B.identity1[o] = out.span_lookup.at({C.identity(o), C.identity(o)});

  // 2-cell existence: a connecting span equalizing both legs
  auto two_exists = [&](int s1, int s2) {
    auto [w1, f1] = out.span[s1];
    auto [w2, f2] = out.span[s2];
    for (int t = 0; t < C.num_objects(); ++t)
      for (int u1 : C.hom(t, C.src(w1)))
        for (int u2 : C.hom(t, C.src(w2))) {
          if (C.compose(w1, u1) != C.compose(w2, u2)) continue;
          if (!P.in_w[C.compose(w1, u1)]) continue;
          if (C.compose(f1, u1) != C.compose(f2, u2)) continue;
          return true;
        }
    return false;
  };
  B.identity2.resize(B.ones.size());
  std::map<std::pair<int, int>, int> two_of;
  for (size_t s1 = 0; s1 < B.ones.size(); ++s1)
    for (size_t s2 = 0; s2 < B.ones.size(); ++s2) {
      if (B.ones[s1].src != B.ones[s2].src || B.ones[s1].tgt != B.ones[s2].tgt)
        continue;
      if (!two_exists(static_cast<int>(s1), static_cast<int>(s2))) continue;
      two_of[{static_cast<int>(s1), static_cast<int>(s2)}] =
          static_cast<int>(B.twos.size());
      B.twos.push_back({"t" + pair_id(B.ones[s1].id, B.ones[s2].id),
                        static_cast<int>(s1), static_cast<int>(s2)});
    }
  for (size_t s = 0; s < B.ones.size(); ++s) {
    auto it = two_of.find({static_cast<int>(s), static_cast<int>(s)});
    if (it == two_of.end())
      throw ValidationError("ConditionsFailed",
                            "identity 2-cell missing in the localization");
    B.identity2[s] = it->second;
  }
  for (const auto& [k1, c1] : two_of)
    for (const auto& [k2, c2] : two_of) {
      if (k2.first != k1.second) continue;
      auto it = two_of.find({k1.first, k2.second});
      if (it == two_of.end())
        throw ValidationError("ConditionsFailed",
                              "2-cells of the localization do not compose");
      B.vcomp2_table[{c2, c1}] = it->second;
    }

  // horizontal composition by least chosen squares
  auto chosen_square = [&](int f1, int w2) -> std::pair<int, int> {
    // cospan f1 : S1 -> B <- w2 : S2, needs (wbar2 in W, fbar1)
    for (int u = 0; u < C.num_objects(); ++u)
      for (int wbar : C.hom(u, C.src(f1)))
        for (int fbar : C.hom(u, C.src(w2))) {
          if (!P.in_w[wbar]) continue;
          if (C.compose(f1, wbar) == C.compose(w2, fbar)) return {wbar, fbar};
        }
    throw ValidationError("ConditionsFailed", "CF2 square vanished");
  };
  for (size_t sf = 0; sf < B.ones.size(); ++sf)
    for (size_t sg = 0; sg < B.ones.size(); ++sg) {
      if (B.ones[sg].src != B.ones[sf].tgt) continue;
      auto [w1, f1] = out.span[sf];
      auto [w2, f2] = out.span[sg];
      auto [wbar, fbar] = chosen_square(f1, w2);
      int w = C.compose(w1, wbar);
      int f = C.compose(f2, fbar);
      B.hcomp1_table[{static_cast<int>(sg), static_cast<int>(sf)}] =
          out.span_lookup.at({w, f});
    }
  for (const auto& [k1, c1] : two_of) {
    (void)c1;
  }
  for (size_t a = 0; a < B.twos.size(); ++a)
    for (size_t b = 0; b < B.twos.size(); ++b) {
      int f1 = B.twos[a].src, g1 = B.twos[b].src;
      if (B.ones[g1].src != B.ones[f1].tgt) continue;
      int src = *B.hcomp1(g1, f1);
      int tgt = *B.hcomp1(B.twos[b].tgt, B.twos[a].tgt);
      auto it = two_of.find({src, tgt});
      if (it == two_of.end())
        throw ValidationError("ConditionsFailed",
                              "horizontal composite 2-cell missing");
      B.hcomp2_table[{static_cast<int>(b), static_cast<int>(a)}] = it->second;
    }

  // unitors and associators are the unique cells between the composites
  auto unique_cell = [&](int from, int to) {
    auto it = two_of.find({from, to});
    if (it == two_of.end())
      throw ValidationError("ConditionsFailed",
                            "coherence 2-cell missing in the localization");
    return it->second;
  };
  B.lunitor.resize(B.ones.size());
  B.runitor.resize(B.ones.size());
  for (size_t f = 0; f < B.ones.size(); ++f) {
    B.lunitor[f] = unique_cell(
        *B.hcomp1(B.identity1[B.ones[f].tgt], static_cast<int>(f)),
        static_cast<int>(f));
    B.runitor[f] = unique_cell(
        *B.hcomp1(static_cast<int>(f), B.identity1[B.ones[f].src]),
        static_cast<int>(f));
  }
  for (size_t f = 0; f < B.ones.size(); ++f)
    for (size_t g = 0; g < B.ones.size(); ++g) {
      if (B.ones[g].src != B.ones[f].tgt) continue;
      for (size_t h = 0; h < B.ones.size(); ++h) {
        if (B.ones[h].src != B.ones[g].tgt) continue;
        int hi = static_cast<int>(h), gi = static_cast<int>(g),
            fi = static_cast<int>(f);
        B.associator[{hi, gi, fi}] =
            unique_cell(*B.hcomp1(*B.hcomp1(hi, gi), fi),
                        *B.hcomp1(hi, *B.hcomp1(gi, fi)));
      }
    }

  B = validate_bicategory(std::move(B));
  return out;
}

// ---------------------------------------------------------------------------
// omega comparison

OmegaReport omega_comparison(const FractionsPresentation& P,
                             const FractionsDouble& F,
                             const FundamentalBicat& bic,
                             const BicatFractions& cw) {
  OmegaReport r;
  const FinCategory& C = *P.base;
  const Bicategory& BB = bic.bic;
  const Bicategory& BW = cw.bic;

  // omega_0 : classes of verticals -> codomains
  std::vector<int> omega0(BB.objects.size());
  {
    std::vector<char> hit(C.num_objects(), 0);
    bool bij = true;
    for (size_t c = 0; c < BB.objects.size(); ++c) {
      int w = C.arrow_index(BB.objects[c]);
      omega0[c] = C.tgt(w);
      if (hit[omega0[c]]) bij = false;
      hit[omega0[c]] = 1;
    }
    for (int o = 0; o < C.num_objects(); ++o)
      if (!hit[o]) bij = false;
    r.object_bijective = bij;
    if (!bij) r.detail = "omega_0 is not a bijection";
  }

  // omega_1 on 1-cells of Bic (= horizontals of C{W})
  auto omega1 = [&](int one) {
    const auto& t = F.horiz[one];
    return cw.span_lookup.at({t.w, C.compose(t.wp, t.f)});
  };

  // hom-wise equivalences
  for (size_t a = 0; a < BB.objects.size(); ++a)
    for (size_t b = 0; b < BB.objects.size(); ++b) {
      std::vector<int> dom_cells, cod_cells;
      for (size_t f = 0; f < BB.ones.size(); ++f)
        if (BB.ones[f].src == static_cast<int>(a) &&
            BB.ones[f].tgt == static_cast<int>(b))
          dom_cells.push_back(static_cast<int>(f));
      for (size_t f = 0; f < BW.ones.size(); ++f)
        if (BW.ones[f].src == omega0[a] && BW.ones[f].tgt == omega0[b])
          cod_cells.push_back(static_cast<int>(f));

      CategoryPresentation dp, cp;
      for (int f : dom_cells) dp.objects.push_back(BB.ones[f].id);
      for (int f : cod_cells) cp.objects.push_back(BW.ones[f].id);
      for (size_t t = 0; t < BB.twos.size(); ++t) {
        int sf = BB.twos[t].src;
        if (BB.ones[sf].src != static_cast<int>(a) ||
            BB.ones[sf].tgt != static_cast<int>(b))
          continue;
        dp.arrows.push_back(
            {BB.twos[t].id, BB.ones[sf].id, BB.ones[BB.twos[t].tgt].id});
      }
      for (size_t t = 0; t < BW.twos.size(); ++t) {
        int sf = BW.twos[t].src;
        if (BW.ones[sf].src != omega0[a] || BW.ones[sf].tgt != omega0[b])
          continue;
        cp.arrows.push_back(
            {BW.twos[t].id, BW.ones[sf].id, BW.ones[BW.twos[t].tgt].id});
      }
      for (int f : dom_cells)
        dp.identities[BB.ones[f].id] = BB.twos[BB.identity2[f]].id;
      for (int f : cod_cells)
        cp.identities[BW.ones[f].id] = BW.twos[BW.identity2[f]].id;
      for (const auto& a2 : dp.arrows)
        for (const auto& a1 : dp.arrows)
          if (a1.tgt == a2.src)
            dp.compose.push_back(
                {a2.id, a1.id,
                 BB.twos[*BB.vcomp2(BB.two_index(a2.id), BB.two_index(a1.id))]
                     .id});
      for (const auto& a2 : cp.arrows)
        for (const auto& a1 : cp.arrows)
          if (a1.tgt == a2.src)
            cp.compose.push_back(
                {a2.id, a1.id,
                 BW.twos[*BW.vcomp2(BW.two_index(a2.id), BW.two_index(a1.id))]
                     .id});
      if (dp.objects.empty() && cp.objects.empty()) continue;
      CatPtr dhc = FinCategory::validate_ptr(dp);
      CatPtr chc = FinCategory::validate_ptr(cp);
      std::vector<int> om(dhc->num_objects()), am(dhc->num_arrows());
      bool mapped = true;
      for (int o = 0; o < dhc->num_objects(); ++o)
        om[o] = chc->object_index(BW.ones[omega1(BB.one_index(dhc->object(o)))].id);
      for (int f = 0; f < dhc->num_arrows(); ++f) {
        int t = BB.two_index(dhc->arrow(f).id);
        int s1 = omega1(BB.twos[t].src), s2 = omega1(BB.twos[t].tgt);
        // omega_2: the unique cell between the images, if present
        bool found = false;
        for (int c : BW.cells_between(s1, s2)) {
          am[f] = chc->arrow_index(BW.twos[c].id);
          found = true;
        }
        if (!found) {
          mapped = false;
          break;
        }
      }
      std::string key = BB.objects[a] + "->" + BB.objects[b];
      if (!mapped) {
        EquivalenceVerdict v;
        r.hom_verdicts.push_back({key, v});
        if (r.detail.empty()) r.detail = "omega_2 undefined on " + key;
        continue;
      }
      FinFunctor hom_functor(dhc, chc, om, am);
      r.hom_verdicts.push_back({key, is_equivalence(hom_functor)});
    }

  // unit comparison
  r.units_strict = true;
  r.units_comparison = true;
  for (size_t a = 0; a < BB.objects.size(); ++a) {
    int img = omega1(BB.identity1[a]);
    int strict_unit = BW.identity1[omega0[a]];
    if (img != strict_unit) r.units_strict = false;
    bool fwd = false, bwd = false;
    for (int c : BW.cells_between(img, strict_unit)) {
      (void)c;
      fwd = true;
    }
    for (int c : BW.cells_between(strict_unit, img)) {
      (void)c;
      bwd = true;
    }
    if (!(fwd && bwd)) {
      r.units_comparison = false;
      if (r.detail.empty())
        r.detail = "no unit comparison cell at " + BB.objects[a];
    }
  }

  // composition comparison cells
  r.composition_comparison = true;
  for (const auto& [key, comp] : BB.hcomp1_table) {
    auto [g, f] = key;
    int lhs = omega1(comp);
    int rhs = *BW.hcomp1(omega1(g), omega1(f));
    bool fwd = !BW.cells_between(lhs, rhs).empty();
    bool bwd = !BW.cells_between(rhs, lhs).empty();
    if (!(fwd && bwd)) {
      r.composition_comparison = false;
      if (r.detail.empty())
        r.detail = "no composition comparison cell at (" + BB.ones[g].id + "," +
                   BB.ones[f].id + ")";
    }
  }
  return r;
}

}  // namespace wgdbl
