#include "wgdbl/fractions.hpp"

#include <algorithm>

namespace wgdbl {

namespace {

std::string triple_id(const FinCategory& base, int w, int f, int wp) {
  return "h" + pair_id(base.arrow(w).id,
                       pair_id(base.arrow(f).id, base.arrow(wp).id));
}

std::string vert_id(const FinCategory& base, int w1, int w2) {
  return "v" + pair_id(base.arrow(w1).id, base.arrow(w2).id);
}

std::string nabla_arrow_id(const FinCategory& base, int v, int wp) {
  return "t" + pair_id(base.arrow(v).id, base.arrow(wp).id);
}

}  // namespace

FractionsPresentation FractionsPresentation::make(
    CatPtr base, const std::vector<std::string>& w_ids, bool two_out_of_three) {
  FractionsPresentation p;
  p.base = std::move(base);
  p.require_two_out_of_three = two_out_of_three;
  p.in_w.assign(p.base->num_arrows(), 0);
  for (const auto& id : w_ids) {
    int i = p.base->arrow_index(id);
    if (!p.in_w[i]) {
      p.in_w[i] = 1;
      p.w.push_back(i);
    }
  }
  std::sort(p.w.begin(), p.w.end());
  return p;
}

FractionsPresentation FractionsPresentation::all_arrows(CatPtr base,
                                                        bool two_out_of_three) {
  std::vector<std::string> ids;
  for (const auto& a : base->arrows()) ids.push_back(a.id);
  return make(std::move(base), ids, two_out_of_three);
}

FractionsPresentation FractionsPresentation::identities_only(
    CatPtr base, bool two_out_of_three) {
  std::vector<std::string> ids;
  for (int o = 0; o < base->num_objects(); ++o)
    ids.push_back(base->arrow(base->identity(o)).id);
  return make(std::move(base), ids, two_out_of_three);
}

FractionsReport check_fractions_conditions(const FractionsPresentation& P) {
  FractionsReport r;
  const FinCategory& C = *P.base;

  // CF1: isomorphisms and closure under composition.
  r.cf1 = true;
  for (int f = 0; f < C.num_arrows(); ++f)
    if (C.is_iso(f) && !P.in_w[f]) {
      r.cf1 = false;
      r.failures.push_back("CF1: isomorphism " + C.arrow(f).id + " is not in W");
    }
  for (int g : P.w)
    for (int f : P.w)
      if (C.composable(g, f) && !P.in_w[C.compose(g, f)]) {
        r.cf1 = false;
        r.failures.push_back("CF1: composite " + C.arrow(C.compose(g, f)).id +
                             " = " + C.arrow(g).id + "." + C.arrow(f).id +
                             " escapes W");
      }

  // CF2: every cospan (f, w) with w in W completes to a square with wbar in W.
  r.cf2 = true;
  for (int f = 0; f < C.num_arrows(); ++f)
    for (int w : P.w) {
      if (C.tgt(w) != C.tgt(f)) continue;
      bool found = false;
      for (int d = 0; d < C.num_objects() && !found; ++d)
        for (int fbar : C.hom(d, C.src(w))) {
          for (int wbar : C.hom(d, C.src(f)))
            if (P.in_w[wbar] && C.compose(w, fbar) == C.compose(f, wbar)) {
              found = true;
              break;
            }
          if (found) break;
        }
      if (!found) {
        r.cf2 = false;
        r.failures.push_back("CF2: no span completes the cospan (" +
                             C.arrow(f).id + ", " + C.arrow(w).id + ")");
      }
    }

  // CF3: parallel pairs equalized by postcomposition with some w in W are
  // equalized by precomposition with some member of W.
  r.cf3 = true;
  for (int w : P.w)
    for (int f = 0; f < C.num_arrows(); ++f) {
      if (C.tgt(f) != C.src(w)) continue;
      for (int g = 0; g < C.num_arrows(); ++g) {
        if (C.src(g) != C.src(f) || C.tgt(g) != C.tgt(f) || f == g) continue;
        if (C.compose(w, f) != C.compose(w, g)) continue;
        bool found = false;
        for (int wt : P.w)
          if (C.tgt(wt) == C.src(f) && C.compose(f, wt) == C.compose(g, wt)) {
            found = true;
            break;
          }
        if (!found) {
          r.cf3 = false;
          r.failures.push_back("CF3: no equalizing arrow for (" + C.arrow(f).id +
                               ", " + C.arrow(g).id + ") under " + C.arrow(w).id);
        }
      }
    }

  if (P.require_two_out_of_three) {
    r.two_out_of_three_checked = true;
    r.two_out_of_three = true;
    for (int g = 0; g < C.num_arrows(); ++g)
      for (int f = 0; f < C.num_arrows(); ++f) {
        if (!C.composable(g, f)) continue;
        int gf = C.compose(g, f);
        int count =
            (P.in_w[g] ? 1 : 0) + (P.in_w[f] ? 1 : 0) + (P.in_w[gf] ? 1 : 0);
        if (count == 2) {
          r.two_out_of_three = false;
          r.failures.push_back("2oo3 fails on (" + C.arrow(g).id + ", " +
                               C.arrow(f).id + ")");
        }
      }
  }
  return r;
}

std::optional<CellWitness> cell_exists(const FractionsPresentation& P,
                                       const Frame& fr) {
  const FinCategory& C = *P.base;
  if (!P.in_w[fr.w1] || !P.in_w[fr.w2] || !P.in_w[fr.w1p] || !P.in_w[fr.w2p])
    throw ValidationError("InconsistentFrame", "frame names arrows outside W");
  if (C.tgt(fr.w1) != C.tgt(fr.w2) || C.tgt(fr.w1p) != C.tgt(fr.w2p))
    throw ValidationError("InconsistentFrame",
                          "frame verticals do not exist (codomain mismatch)");
  if (C.src(fr.f1) != C.src(fr.w1) || C.tgt(fr.f1) != C.src(fr.w1p) ||
      C.src(fr.f2) != C.src(fr.w2) || C.tgt(fr.f2) != C.src(fr.w2p))
    throw ValidationError("InconsistentFrame",
                          "frame horizontals have wrong endpoints");

  for (int cl = 0; cl < C.num_objects(); ++cl)
    for (int u1 : C.hom(cl, C.src(fr.w1)))
      for (int u2 : C.hom(cl, C.src(fr.w2))) {
        int z = C.compose(fr.w1, u1);
        if (z != C.compose(fr.w2, u2) || !P.in_w[z]) continue;
        for (int cr = 0; cr < C.num_objects(); ++cr)
          for (int v1 : C.hom(cr, C.src(fr.w1p)))
            for (int v2 : C.hom(cr, C.src(fr.w2p))) {
              int zp = C.compose(fr.w1p, v1);
              if (zp != C.compose(fr.w2p, v2) || !P.in_w[zp]) continue;
              for (int phi : C.hom(cl, cr))
                if (C.compose(v1, phi) == C.compose(fr.f1, u1) &&
                    C.compose(v2, phi) == C.compose(fr.f2, u2))
                  return CellWitness{cl, u1, u2, cr, v1, v2, phi};
            }
      }
  return std::nullopt;
}

int FractionsDouble::object_of_w(int w) const { return w_to_obj_.at(w); }

std::optional<int> FractionsDouble::vertical(int w1, int w2) const {
  auto it = vert_lookup_.find({w1, w2});
  if (it == vert_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FractionsDouble::horizontal(int w, int f, int wp) const {
  auto it = horiz_lookup_.find({w, f, wp});
  if (it == horiz_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FractionsDouble::cell_on(int topH, int botH) const {
  auto it = cell_lookup_.find({topH, botH});
  if (it == cell_lookup_.end()) return std::nullopt;
  return it->second;
}

FractionsDouble build_fractions(const FractionsPresentation& P) {
  FractionsReport rep = check_fractions_conditions(P);
  if (!rep.cf1 || !rep.cf2 || !rep.cf3)
    throw ValidationError("ConditionsFailed",
                          rep.failures.empty() ? "CF conditions fail"
                                               : rep.failures.front());
  const FinCategory& C = *P.base;
  FractionsDouble out;
  out.pres = P;

  // X0: objects are the arrows of W, one vertical arrow per equal-codomain
  // pair, composed within each codomain class.
  CategoryPresentation x0;
  for (int w : P.w) x0.objects.push_back(C.arrow(w).id);
  for (int w1 : P.w)
    for (int w2 : P.w)
      if (C.tgt(w1) == C.tgt(w2))
        x0.arrows.push_back({vert_id(C, w1, w2), C.arrow(w1).id, C.arrow(w2).id});
  for (int w : P.w) x0.identities[C.arrow(w).id] = vert_id(C, w, w);
  for (int w1 : P.w)
    for (int w2 : P.w) {
      if (C.tgt(w1) != C.tgt(w2)) continue;
      for (int w3 : P.w)
        if (C.tgt(w2) == C.tgt(w3))
          x0.compose.push_back(
              {vert_id(C, w2, w3), vert_id(C, w1, w2), vert_id(C, w1, w3)});
    }
  CatPtr X0 = FinCategory::validate_ptr(x0);

  // Horizontal arrows: triples (w, f, w') with f : dom w -> dom w'.
  std::vector<std::array<int, 3>> triples;
  CategoryPresentation x1;
  for (int w : P.w)
    for (int wp : P.w)
      for (int f : C.hom(C.src(w), C.src(wp))) {
        triples.push_back({w, f, wp});
        x1.objects.push_back(triple_id(C, w, f, wp));
      }

  struct CellData {
    CellWitness wit;
    Frame frame;
  };
  std::vector<CellData> cells;
  for (const auto& t : triples)
    for (const auto& b : triples) {
      if (C.tgt(t[0]) != C.tgt(b[0]) || C.tgt(t[2]) != C.tgt(b[2])) continue;
      Frame fr{t[0], t[1], t[2], b[0], b[1], b[2]};
      auto wit = cell_exists(P, fr);
      if (wit) cells.push_back({*wit, fr});
    }
  auto hname = [&C](const Frame& fr, bool top) {
    return top ? triple_id(C, fr.w1, fr.f1, fr.w1p)
               : triple_id(C, fr.w2, fr.f2, fr.w2p);
  };
  auto cell_name = [](const std::string& a, const std::string& b) {
    return "c" + pair_id(a, b);
  };
  std::map<std::pair<std::string, std::string>, int> cell_by_names;
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    x1.arrows.push_back({cell_name(hname(c.frame, true), hname(c.frame, false)),
                         hname(c.frame, true), hname(c.frame, false)});
    cell_by_names[{hname(c.frame, true), hname(c.frame, false)}] =
        static_cast<int>(i);
  }
  for (const auto& t : triples) {
    std::string n = triple_id(C, t[0], t[1], t[2]);
    if (!cell_by_names.count({n, n}))
      throw ValidationError("FractionsCellComposition",
                            "identity frame has no cell at " + n);
    x1.identities[n] = cell_name(n, n);
  }
  for (const auto& c2 : cells)
    for (const auto& c1 : cells) {
      std::string mid = hname(c1.frame, false);
      if (hname(c2.frame, true) != mid) continue;
      std::string top = hname(c1.frame, true), bot = hname(c2.frame, false);
      if (!cell_by_names.count({top, bot}))
        throw ValidationError("FractionsCellComposition",
                              "vertical composite frame " + top + " => " + bot +
                                  " has no cell");
      x1.compose.push_back(
          {cell_name(mid, bot), cell_name(top, mid), cell_name(top, bot)});
    }
  CatPtr X1 = FinCategory::validate_ptr(x1);

  std::map<std::string, const CellData*> cell_by_arrow;
  for (const auto& c : cells)
    cell_by_arrow[cell_name(hname(c.frame, true), hname(c.frame, false))] = &c;
  std::map<std::string, std::array<int, 3>> triple_by_name;
  for (const auto& t : triples) triple_by_name[triple_id(C, t[0], t[1], t[2])] = t;

  std::vector<int> d0o(X1->num_objects()), d1o(X1->num_objects());
  std::vector<int> d0a(X1->num_arrows()), d1a(X1->num_arrows());
  for (int h = 0; h < X1->num_objects(); ++h) {
    const auto& t = triple_by_name.at(X1->object(h));
    d0o[h] = X0->object_index(C.arrow(t[0]).id);
    d1o[h] = X0->object_index(C.arrow(t[2]).id);
  }
  for (int a = 0; a < X1->num_arrows(); ++a) {
    const CellData& c = *cell_by_arrow.at(X1->arrow(a).id);
    d0a[a] = X0->arrow_index(vert_id(C, c.frame.w1, c.frame.w2));
    d1a[a] = X0->arrow_index(vert_id(C, c.frame.w1p, c.frame.w2p));
  }
  FinFunctor d0(X1, X0, d0o, d0a, false), d1(X1, X0, d1o, d1a, false);

  std::vector<int> so(X0->num_objects()), sa(X0->num_arrows());
  for (int o = 0; o < X0->num_objects(); ++o) {
    int w = C.arrow_index(X0->object(o));
    so[o] = X1->object_index(triple_id(C, w, C.identity(C.src(w)), w));
  }
  for (int v = 0; v < X0->num_arrows(); ++v) {
    int w1 = C.arrow_index(X0->object(X0->src(v)));
    int w2 = C.arrow_index(X0->object(X0->tgt(v)));
    std::string top = triple_id(C, w1, C.identity(C.src(w1)), w1);
    std::string bot = triple_id(C, w2, C.identity(C.src(w2)), w2);
    if (!cell_by_names.count({top, bot}))
      throw ValidationError("FractionsCellComposition",
                            "horizontal identity cell missing at " +
                                X0->arrow(v).id);
    sa[v] = X1->arrow_index(cell_name(top, bot));
  }
  FinFunctor s(X0, X1, so, sa, false);

  auto ho = [&C, X1, &triple_by_name](int a, int b) -> std::optional<int> {
    const auto& ta = triple_by_name.at(X1->object(a));
    const auto& tb = triple_by_name.at(X1->object(b));
    if (tb[2] != ta[0]) return std::nullopt;
    return X1->object_index(triple_id(C, tb[0], C.compose(ta[1], tb[1]), ta[2]));
  };
  auto hc_comp = [X1, &cell_by_arrow, &cell_by_names, &cell_name, &hname,
                  ho](int a, int b) -> std::optional<int> {
    const CellData& ca = *cell_by_arrow.at(X1->arrow(a).id);
    const CellData& cb = *cell_by_arrow.at(X1->arrow(b).id);
    auto top = ho(X1->object_index(hname(ca.frame, true)),
                  X1->object_index(hname(cb.frame, true)));
    auto bot = ho(X1->object_index(hname(ca.frame, false)),
                  X1->object_index(hname(cb.frame, false)));
    if (!top || !bot) return std::nullopt;
    if (!cell_by_names.count({X1->object(*top), X1->object(*bot)}))
      throw ValidationError("FractionsCellComposition",
                            "horizontal composite frame has no cell");
    return X1->arrow_index(cell_name(X1->object(*top), X1->object(*bot)));
  };

  out.dbl = DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc_comp);

  out.obj_to_w.resize(X0->num_objects());
  for (int o = 0; o < X0->num_objects(); ++o) {
    out.obj_to_w[o] = C.arrow_index(X0->object(o));
    out.w_to_obj_[out.obj_to_w[o]] = o;
  }
  out.vert_to_pair.resize(X0->num_arrows());
  out.vert_span.resize(X0->num_arrows());
  for (int v = 0; v < X0->num_arrows(); ++v) {
    int w1 = C.arrow_index(X0->object(X0->src(v)));
    int w2 = C.arrow_index(X0->object(X0->tgt(v)));
    out.vert_to_pair[v] = {w1, w2};
    out.vert_lookup_[{w1, w2}] = v;
    bool found = false;
    for (int cl = 0; cl < C.num_objects() && !found; ++cl)
      for (int u1 : C.hom(cl, C.src(w1))) {
        for (int u2 : C.hom(cl, C.src(w2)))
          if (C.compose(w1, u1) == C.compose(w2, u2) &&
              P.in_w[C.compose(w1, u1)]) {
            out.vert_span[v] = {cl, u1, u2};
            found = true;
            break;
          }
        if (found) break;
      }
    if (!found)
      throw ValidationError("FractionsCellComposition",
                            "no representative span for " + X0->arrow(v).id);
  }
  out.horiz.resize(X1->num_objects());
  for (int h = 0; h < X1->num_objects(); ++h) {
    const auto& t = triple_by_name.at(X1->object(h));
    out.horiz[h] = {t[0], t[1], t[2]};
    out.horiz_lookup_[{t[0], t[1], t[2]}] = h;
  }
  out.cell_witness.resize(X1->num_arrows());
  out.cell_frame.resize(X1->num_arrows());
  for (int a = 0; a < X1->num_arrows(); ++a) {
    const CellData& c = *cell_by_arrow.at(X1->arrow(a).id);
    out.cell_witness[a] = c.wit;
    out.cell_frame[a] = c.frame;
    out.cell_lookup_[{X1->object_index(hname(c.frame, true)),
                      X1->object_index(hname(c.frame, false))}] = a;
  }
  return out;
}

DoubleFunctor inclusion_JC(const FractionsDouble& F, const DoubleCategory& hc) {
  const FinCategory& C = *F.pres.base;
  const DoubleCategory& D = F.dbl;
  std::vector<int> o0(hc.X0->num_objects()), a0(hc.X0->num_arrows());
  for (int o = 0; o < hc.X0->num_objects(); ++o) {
    int A = C.object_index(hc.X0->object(o));
    o0[o] = F.object_of_w(C.identity(A));
  }
  for (int v = 0; v < hc.X0->num_arrows(); ++v)
    a0[v] = D.vid(o0[hc.X0->src(v)]);
  std::vector<int> o1(hc.X1->num_objects()), a1(hc.X1->num_arrows());
  for (int h = 0; h < hc.X1->num_objects(); ++h) {
    int f = C.arrow_index(hc.X1->object(h));
    o1[h] = *F.horizontal(C.identity(C.src(f)), f, C.identity(C.tgt(f)));
  }
  for (int c = 0; c < hc.X1->num_arrows(); ++c)
    a1[c] = D.cid(o1[hc.X1->src(c)]);
  return {&hc, &D, FinFunctor(hc.X0, D.X0, o0, a0, false),
          FinFunctor(hc.X1, D.X1, o1, a1, false)};
}

CompanionClassification classify_for_companions(const FractionsDouble& F) {
  CompanionClassification out;
  const FinCategory& C = *F.pres.base;
  const DoubleCategory& D = F.dbl;

  for (int v = 0; v < D.X0->num_arrows(); ++v) {
    auto [w1, w2] = F.vert_to_pair[v];
    CompanionClassification::VerticalEntry e;
    e.vertical = D.X0->arrow(v).id;
    for (int u : C.hom(C.src(w1), C.src(w2)))
      if (C.compose(w2, u) == w1) e.companion_form = true;
    for (int u : C.hom(C.src(w2), C.src(w1)))
      if (C.compose(w1, u) == w2) e.conjoint_form = true;
    for (int f = 0; f < D.X1->num_objects() && !e.companion_found; ++f) {
      if (D.hsrc(f) != D.X0->src(v) || D.htgt(f) != D.X0->tgt(v)) continue;
      if (find_binding_cells(D, f, v)) e.companion_found = true;
    }
    for (int g = 0; g < D.X1->num_objects() && !e.conjoint_found; ++g) {
      if (D.hsrc(g) != D.X0->tgt(v) || D.htgt(g) != D.X0->src(v)) continue;
      if (find_conjoint_binding_cells(D, g, v)) e.conjoint_found = true;
    }
    if (e.companion_form != e.companion_found ||
        e.conjoint_form != e.conjoint_found)
      out.biconditional_holds = false;
    out.verticals.push_back(e);
  }

  for (int h = 0; h < D.X1->num_objects(); ++h) {
    const auto& t = F.horiz[h];
    CompanionClassification::HorizontalEntry e;
    e.horizontal = D.X1->object(h);
    e.normal_form = (C.compose(t.wp, t.f) == t.w);
    e.companion_found = find_companion(D, h).has_value();
    e.conjoint_found = find_conjoint(D, h).has_value();
    if (e.normal_form != (e.companion_found && e.conjoint_found))
      out.biconditional_holds = false;
    out.horizontals.push_back(e);
  }
  return out;
}

FactorPlan factor_cell(const FractionsDouble& F, int cell) {
  const FinCategory& C = *F.pres.base;
  const DoubleCategory& D = F.dbl;
  const Frame& fr = F.cell_frame.at(cell);
  const CellWitness& wit = F.cell_witness.at(cell);

  int z = C.compose(fr.w1, wit.u1);
  int zp = C.compose(fr.w1p, wit.v1);

  auto h = [&](int w, int f, int wp) {
    auto r = F.horizontal(w, f, wp);
    if (!r)
      throw ValidationError("FractionsCellComposition",
                            "factor horizontal missing");
    return *r;
  };
  int idw1 = D.hid(F.object_of_w(fr.w1));
  int idw2 = D.hid(F.object_of_w(fr.w2));
  int idzp = D.hid(F.object_of_w(zp));
  int uh1 = h(z, wit.u1, fr.w1);
  int uh2 = h(z, wit.u2, fr.w2);
  int vh1 = h(zp, wit.v1, fr.w1p);
  int vh2 = h(zp, wit.v2, fr.w2p);
  int xih = h(z, wit.phi, zp);
  int f1h = h(fr.w1, fr.f1, fr.w1p);
  int f2h = h(fr.w2, fr.f2, fr.w2p);

  FactorPlan plan;
  auto set = [&](int row, int col, int top, int bot, const std::string& kind) {
    auto c = F.cell_on(top, bot);
    if (!c)
      throw ValidationError("FractionsCellComposition",
                            "factor frame has no cell: " + D.X1->object(top) +
                                " => " + D.X1->object(bot));
    plan.factors[row][col] = {top, bot, *c, kind};
  };
  set(0, 0, idw1, uh1, "binding-chi-inverse");
  set(0, 1, f1h, f1h, "identity");
  set(1, 0, xih, xih, "identity");
  set(1, 1, vh1, idzp, "binding-psi-inverse");
  set(2, 0, xih, xih, "identity");
  set(2, 1, idzp, vh2, "binding-psi");
  set(3, 0, uh2, idw2, "binding-chi");
  set(3, 1, f2h, f2h, "identity");

  for (int r = 0; r < 4; ++r) {
    auto row = D.ccomp(plan.factors[r][1].cell, plan.factors[r][0].cell);
    if (!row)
      throw ValidationError("FractionsCellComposition",
                            "factor row " + std::to_string(r) +
                                " does not compose horizontally");
    plan.row_cells[r] = *row;
  }
  int acc = plan.row_cells[0];
  for (int r = 1; r < 4; ++r) {
    auto next = D.vcomp(plan.row_cells[r], acc);
    if (!next)
      throw ValidationError("FractionsCellComposition",
                            "factor rows do not stack at row " +
                                std::to_string(r));
    acc = *next;
  }
  plan.total_cell = acc;
  plan.verified = (acc == cell);
  return plan;
}

NablaW nabla_W(const FractionsPresentation& P) {
  FractionsPresentation Q = P;
  Q.require_two_out_of_three = true;
  FractionsReport rep = check_fractions_conditions(Q);
  if (!rep.pass())
    throw ValidationError("ConditionsFailed",
                          rep.failures.empty() ? "conditions fail for nabla W"
                                               : rep.failures.front());
  const FinCategory& C = *P.base;
  NablaW out;
  CategoryPresentation p;
  for (int w : P.w) p.objects.push_back(C.arrow(w).id);
  struct Tri {
    int w = -1, v = -1, wp = -1;
  };
  std::vector<Tri> tris;
  for (int w : P.w)
    for (int wp : P.w) {
      if (C.tgt(w) != C.tgt(wp)) continue;
      for (int v : C.hom(C.src(w), C.src(wp)))
        if (C.compose(wp, v) == w) {
          tris.push_back({w, v, wp});
          p.arrows.push_back(
              {nabla_arrow_id(C, v, wp), C.arrow(w).id, C.arrow(wp).id});
        }
    }
  for (int w : P.w)
    p.identities[C.arrow(w).id] = nabla_arrow_id(C, C.identity(C.src(w)), w);
  for (const auto& t2 : tris)
    for (const auto& t1 : tris) {
      if (t1.wp != t2.w) continue;
      p.compose.push_back({nabla_arrow_id(C, t2.v, t2.wp),
                           nabla_arrow_id(C, t1.v, t1.wp),
                           nabla_arrow_id(C, C.compose(t2.v, t1.v), t2.wp)});
    }
  out.cat = FinCategory::validate_ptr(p);

  out.obj_to_w.resize(out.cat->num_objects());
  std::vector<int> d0obj(out.cat->num_objects()), d0arr(out.cat->num_arrows());
  for (int o = 0; o < out.cat->num_objects(); ++o) {
    out.obj_to_w[o] = C.arrow_index(out.cat->object(o));
    d0obj[o] = C.src(out.obj_to_w[o]);
  }
  out.arr_to_triangle.resize(out.cat->num_arrows());
  std::map<std::string, Tri> tri_by_name;
  for (const auto& t : tris) tri_by_name[nabla_arrow_id(C, t.v, t.wp)] = t;
  for (int a = 0; a < out.cat->num_arrows(); ++a) {
    const Tri& t = tri_by_name.at(out.cat->arrow(a).id);
    out.arr_to_triangle[a] = {t.v, t.wp};
    d0arr[a] = t.v;
  }
  out.D0 = FinFunctor(out.cat, P.base, d0obj, d0arr);
  return out;
}

PhiFunctorResult phi_functor(const FractionsPresentation& P,
                             const FractionsDouble& F, const NablaW& nabla,
                             const CompDouble& comp) {
  const FinCategory& C = *P.base;
  const DoubleCategory& D = F.dbl;
  PhiFunctorResult out;
  out.v_nabla = v_double(nabla.cat);
  out.hcat = horizontal_category(D);

  const CatPtr& N = nabla.cat;
  const CatPtr& CX0 = comp.dbl.X0;
  const CatPtr& CX1 = comp.dbl.X1;

  auto quad_of_triangle = [&](int a) {
    auto [v, wp] = nabla.arr_to_triangle[a];
    int w = C.compose(wp, v);
    CompQuadruple q;
    q.h = *F.horizontal(w, v, wp);
    q.v = *F.vertical(w, wp);
    q.psi = *F.cell_on(D.hid(F.object_of_w(w)), q.h);
    q.chi = *F.cell_on(q.h, D.hid(F.object_of_w(wp)));
    auto idx = comp.find_quadruple(q);
    if (!idx)
      throw ValidationError("ConditionsFailed",
                            "canonical quadruple not found in Comp(C{W}) for " +
                                N->arrow(a).id);
    return *idx;
  };

  std::vector<int> o0(N->num_objects()), a0(N->num_arrows());
  for (int o = 0; o < N->num_objects(); ++o)
    o0[o] = CX0->object_index(C.arrow(nabla.obj_to_w[o]).id);
  for (int a = 0; a < N->num_arrows(); ++a) a0[a] = quad_of_triangle(a);

  std::vector<int> o1(N->num_objects()), a1(N->num_arrows());
  for (int o = 0; o < N->num_objects(); ++o) {
    int w = nabla.obj_to_w[o];
    o1[o] = CX1->object_index(D.X1->object(D.hid(F.object_of_w(w))));
  }
  for (int a = 0; a < N->num_arrows(); ++a) a1[a] = comp.dbl.scell(a0[a]);

  out.Phi = {&out.v_nabla, &comp.dbl, FinFunctor(N, CX0, o0, a0, false),
             FinFunctor(N, CX1, o1, a1, false)};

  // phi : h . vPhi => h J_C . D0 with components (w) -> (1_{dom w}).
  std::vector<int> src_o(N->num_objects()), src_a(N->num_arrows());
  std::vector<int> tgt_o(N->num_objects()), tgt_a(N->num_arrows());
  std::vector<int> comps(N->num_objects());
  for (int o = 0; o < N->num_objects(); ++o) {
    int w = nabla.obj_to_w[o];
    src_o[o] = out.hcat->object_index(C.arrow(w).id);
    int one = C.identity(C.src(w));
    tgt_o[o] = out.hcat->object_index(C.arrow(one).id);
    comps[o] = out.hcat->arrow_index(D.X1->object(*F.horizontal(w, one, one)));
  }
  for (int a = 0; a < N->num_arrows(); ++a) {
    auto [v, wp] = nabla.arr_to_triangle[a];
    int w = C.compose(wp, v);
    src_a[a] = out.hcat->arrow_index(D.X1->object(*F.horizontal(w, v, wp)));
    tgt_a[a] = out.hcat->arrow_index(D.X1->object(
        *F.horizontal(C.identity(C.src(w)), v, C.identity(C.src(wp)))));
  }
  FinFunctor hs(N, out.hcat, src_o, src_a);
  FinFunctor ht(N, out.hcat, tgt_o, tgt_a);
  out.phi = FinNatTrans(hs, ht, comps);
  return out;
}

CheckResult check_w_friendly_structure(const WFriendlyStructure& S) {
  CheckResult r;
  auto fail = [&r](const std::string& m) {
    r.pass = false;
    if (r.failure.empty()) r.failure = m;
  };
  CheckResult g = check_strict_functor(S.G);
  if (!g.pass) fail("G: " + g.failure);
  CheckResult gm = check_strict_functor(S.Gamma);
  if (!gm.pass) fail("Gamma: " + gm.failure);
  if (!r.pass) return r;

  const FinCategory& N = *S.nabla->cat;
  const FinCategory& C = *S.nabla->D0.cod();
  const DoubleCategory& D = *S.target;
  for (int o = 0; o < N.num_objects(); ++o) {
    int gw = S.gamma[o];
    int src = S.hcat->object_index(
        D.X0->object(S.compD->object_underlying[S.Gamma.F0.obj(o)]));
    int dw = S.nabla->D0.obj(o);
    int tgt = S.hcat->object_index(
        D.X0->object(S.G.F0.obj(S.G.dom->X0->object_index(C.object(dw)))));
    if (S.hcat->src(gw) != src || S.hcat->tgt(gw) != tgt)
      fail("gamma component at " + N.object(o) + " has wrong endpoints");
    else if (!S.hcat->is_iso(gw))
      fail("gamma component at " + N.object(o) + " is not invertible");
  }
  if (!r.pass) return r;
  // naturality: gamma_{w'} . h(Gamma t) = G(D0 t) . gamma_w
  for (int a = 0; a < N.num_arrows(); ++a) {
    int q = S.Gamma.F0.arr(a);
    int hpart =
        S.hcat->arrow_index(D.X1->object(S.compD->vertical_data[q].h));
    int lhs = S.hcat->compose(S.gamma[N.tgt(a)], hpart);
    int v = S.nabla->D0.arr(a);
    int gv = S.hcat->arrow_index(
        D.X1->object(S.G.F1.obj(S.G.dom->X1->object_index(C.arrow(v).id))));
    int rhs = S.hcat->compose(gv, S.gamma[N.src(a)]);
    if (lhs != rhs) {
      fail("gamma naturality fails at triangle " + N.arrow(a).id);
      break;
    }
  }
  return r;
}

LiftResult lift_w_friendly(const WFriendlyStructure& S, const FractionsDouble& F,
                           const DoubleCategory& hc) {
  CheckResult pre = check_w_friendly_structure(S);
  if (!pre.pass)
    throw ValidationError("PastingUndefined",
                          "W-friendly structure invalid: " + pre.failure);
  const FinCategory& C = *F.pres.base;
  const DoubleCategory& D = F.dbl;
  const DoubleCategory& T = *S.target;
  const FinCategory& N = *S.nabla->cat;
  const FinCategory& H = *S.hcat;

  auto nabla_obj = [&](int w) { return N.object_index(C.arrow(w).id); };
  auto nabla_tri = [&](int v, int wp) {
    return N.arrow_index(nabla_arrow_id(C, v, wp));
  };
  auto quad_of = [&](int v, int wp) -> const CompQuadruple& {
    return S.compD->vertical_data[S.Gamma.F0.arr(nabla_tri(v, wp))];
  };

  std::vector<int> o0(D.X0->num_objects());
  for (int o = 0; o < D.X0->num_objects(); ++o)
    o0[o] =
        S.compD->object_underlying[S.Gamma.F0.obj(nabla_obj(F.obj_to_w[o]))];

  std::vector<int> a0(D.X0->num_arrows());
  for (int v = 0; v < D.X0->num_arrows(); ++v) {
    auto [w1, w2] = F.vert_to_pair[v];
    auto [apex, u1, u2] = F.vert_span[v];
    (void)apex;
    const CompQuadruple& q1 = quad_of(u1, w1);
    const CompQuadruple& q2 = quad_of(u2, w2);
    int inv = T.X0->inverse(q1.v);
    if (inv < 0)
      throw ValidationError("PastingUndefined",
                            "vertical of Gamma-quadruple not invertible at " +
                                D.X0->arrow(v).id);
    a0[v] = T.X0->compose(q2.v, inv);
  }

  auto g_of_base_arrow = [&](int f) {
    return H.arrow_index(
        T.X1->object(S.G.F1.obj(S.G.dom->X1->object_index(C.arrow(f).id))));
  };
  std::vector<int> o1(D.X1->num_objects());
  for (int h = 0; h < D.X1->num_objects(); ++h) {
    const auto& t = F.horiz[h];
    int gw = S.gamma[nabla_obj(t.w)];
    int gwp_inv = H.inverse(S.gamma[nabla_obj(t.wp)]);
    if (gwp_inv < 0)
      throw ValidationError("PastingUndefined", "gamma component not invertible");
    o1[h] = T.X1->object_index(
        H.arrow(H.compose(gwp_inv, H.compose(g_of_base_arrow(t.f), gw))).id);
  }

  std::vector<int> a1(D.X1->num_arrows());
  for (int c = 0; c < D.X1->num_arrows(); ++c) {
    FactorPlan plan = factor_cell(F, c);
    if (!plan.verified)
      throw ValidationError("PastingUndefined",
                            "factorization failed for cell " + D.X1->arrow(c).id);
    auto image_of_factor = [&](const FactorPlan::Factor& fac) -> int {
      if (fac.kind == "identity") return T.cid(o1[fac.top]);
      const auto& top = F.horiz[fac.top];
      const auto& bot = F.horiz[fac.bottom];
      if (fac.kind == "binding-chi-inverse") {
        const CompQuadruple& q = quad_of(bot.f, bot.wp);
        int inv = T.X1->inverse(q.chi);
        if (inv < 0)
          throw ValidationError("PastingUndefined", "chi not invertible");
        return inv;
      }
      if (fac.kind == "binding-psi-inverse") {
        const CompQuadruple& q = quad_of(top.f, top.wp);
        int inv = T.X1->inverse(q.psi);
        if (inv < 0)
          throw ValidationError("PastingUndefined", "psi not invertible");
        return inv;
      }
      if (fac.kind == "binding-psi") {
        const CompQuadruple& q = quad_of(bot.f, bot.wp);
        return q.psi;
      }
      const CompQuadruple& q = quad_of(top.f, top.wp);
      return q.chi;
    };
    int acc = -1;
    for (int r = 0; r < 4; ++r) {
      int left = image_of_factor(plan.factors[r][0]);
      int right = image_of_factor(plan.factors[r][1]);
      auto row = T.ccomp(right, left);
      if (!row)
        throw ValidationError("PastingUndefined",
                              "image row " + std::to_string(r) +
                                  " does not compose for cell " +
                                  D.X1->arrow(c).id);
      if (r == 0) {
        acc = *row;
      } else {
        auto next = T.vcomp(*row, acc);
        if (!next)
          throw ValidationError("PastingUndefined",
                                "image rows do not stack at row " +
                                    std::to_string(r) + " for cell " +
                                    D.X1->arrow(c).id);
        acc = *next;
      }
    }
    a1[c] = acc;
  }

  LiftResult out;
  out.lifted = {&D, &T, FinFunctor(D.X0, T.X0, o0, a0, false),
                FinFunctor(D.X1, T.X1, o1, a1, false)};
  out.functor_check = check_strict_functor(out.lifted);

  out.lifted_after_J = compose_double_functors(out.lifted, inclusion_JC(F, hc));
  out.comparison_component.resize(hc.X0->num_objects());
  out.comparison_cell.resize(hc.X0->num_arrows());
  for (int o = 0; o < hc.X0->num_objects(); ++o) {
    int A = C.object_index(hc.X0->object(o));
    int gw = S.gamma[nabla_obj(C.identity(A))];
    out.comparison_component[o] = T.X1->object_index(H.arrow(gw).id);
  }
  for (int v = 0; v < hc.X0->num_arrows(); ++v)
    out.comparison_cell[v] = T.cid(out.comparison_component[hc.X0->src(v)]);

  HorizontalTransformation cmp;
  cmp.G = &out.lifted_after_J;
  cmp.K = &S.G;
  cmp.component = out.comparison_component;
  cmp.cell = out.comparison_cell;
  out.comparison_check = check_horizontal_transformation(cmp);
  out.comparison_invertible = cmp.invertible(T);
  return out;
}

CheckResult check_w_friendly_transformation(const WFriendlyStructure& S1,
                                            const WFriendlyStructure& S2,
                                            const WFriendlyTransformation& t) {
  CheckResult r;
  auto fail = [&r](const std::string& m) {
    r.pass = false;
    if (r.failure.empty()) r.failure = m;
  };
  CheckResult ca = check_horizontal_transformation(t.a);
  if (!ca.pass) fail("a: " + ca.failure);
  CheckResult cal = check_horizontal_transformation(t.alpha);
  if (!cal.pass) fail("alpha: " + cal.failure);
  if (!r.pass) return r;

  const FinCategory& N = *S1.nabla->cat;
  const FinCategory& H = *S1.hcat;
  const DoubleCategory& T = *S1.target;
  const FinCategory& C = *S1.nabla->D0.cod();
  for (int o = 0; o < N.num_objects(); ++o) {
    int aw = t.alpha.component[o];
    int h_alpha =
        H.arrow_index(T.X1->object(S1.compD->horizontal_underlying[aw]));
    int lhs = H.compose(S2.gamma[o], h_alpha);
    int A = C.src(S1.nabla->obj_to_w[o]);
    int ha = H.arrow_index(T.X1->object(
        t.a.component[t.a.G->dom->X0->object_index(C.object(A))]));
    int rhs = H.compose(ha, S1.gamma[o]);
    if (lhs != rhs) {
      fail("W-friendly square fails at " + N.object(o));
      break;
    }
  }
  return r;
}

}  // namespace wgdbl
