#include "wgdbl/companion.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace wgdbl {

bool verify_companion(const DoubleCategory& D, const CompanionPair& p) {
  int f = p.horizontal, v = p.vertical;
  if (f < 0 || v < 0 || p.psi < 0 || p.chi < 0) return false;
  int A = D.hsrc(f), B = D.htgt(f);
  if (D.X0->src(v) != A || D.X0->tgt(v) != B) return false;
  if (D.ctop(p.psi) != D.hid(A) || D.cbot(p.psi) != f) return false;
  if (D.cleft(p.psi) != D.vid(A) || D.cright(p.psi) != v) return false;
  if (D.ctop(p.chi) != f || D.cbot(p.chi) != D.hid(B)) return false;
  if (D.cleft(p.chi) != v || D.cright(p.chi) != D.vid(B)) return false;
  auto horiz = D.ccomp(p.chi, p.psi);
  if (!horiz || *horiz != D.cid(f)) return false;
  auto vert = D.vcomp(p.chi, p.psi);
  return vert && *vert == D.scell(v);
}

bool verify_conjoint(const DoubleCategory& D, const ConjointPair& p) {
  int u = p.horizontal, v = p.vertical;
  if (u < 0 || v < 0 || p.alpha < 0 || p.beta < 0) return false;
  int B = D.hsrc(u), A = D.htgt(u);  // u : B -> A, v : A -> B
  if (D.X0->src(v) != A || D.X0->tgt(v) != B) return false;
  if (D.ctop(p.alpha) != D.hid(A) || D.cbot(p.alpha) != u) return false;
  if (D.cleft(p.alpha) != v || D.cright(p.alpha) != D.vid(A)) return false;
  if (D.ctop(p.beta) != u || D.cbot(p.beta) != D.hid(B)) return false;
  if (D.cleft(p.beta) != D.vid(B) || D.cright(p.beta) != v) return false;
  auto horiz = D.ccomp(p.alpha, p.beta);
  if (!horiz || *horiz != D.cid(u)) return false;
  auto vert = D.vcomp(p.beta, p.alpha);
  return vert && *vert == D.scell(v);
}

std::optional<CompanionPair> find_binding_cells(const DoubleCategory& D, int f,
                                                int v) {
  int A = D.hsrc(f), B = D.htgt(f);
  if (D.X0->src(v) != A || D.X0->tgt(v) != B) return std::nullopt;
  for (int psi : D.X1->hom(D.hid(A), f)) {
    if (D.cleft(psi) != D.vid(A) || D.cright(psi) != v) continue;
    for (int chi : D.X1->hom(f, D.hid(B))) {
      if (D.cleft(chi) != v || D.cright(chi) != D.vid(B)) continue;
      CompanionPair p{f, v, psi, chi};
      if (verify_companion(D, p)) return p;
    }
  }
  return std::nullopt;
}

std::optional<CompanionPair> find_companion(const DoubleCategory& D, int f) {
  for (int v : D.X0->hom(D.hsrc(f), D.htgt(f))) {
    auto p = find_binding_cells(D, f, v);
    if (p) return p;
  }
  return std::nullopt;
}

std::optional<ConjointPair> find_conjoint_binding_cells(const DoubleCategory& D,
                                                        int u, int v) {
  int B = D.hsrc(u), A = D.htgt(u);
  if (D.X0->src(v) != A || D.X0->tgt(v) != B) return std::nullopt;
  for (int alpha : D.X1->hom(D.hid(A), u)) {
    if (D.cleft(alpha) != v || D.cright(alpha) != D.vid(A)) continue;
    for (int beta : D.X1->hom(u, D.hid(B))) {
      if (D.cleft(beta) != D.vid(B) || D.cright(beta) != v) continue;
      ConjointPair p{u, v, alpha, beta};
      if (verify_conjoint(D, p)) return p;
    }
  }
  return std::nullopt;
}

std::optional<ConjointPair> find_conjoint(const DoubleCategory& D, int u) {
  for (int v : D.X0->hom(D.htgt(u), D.hsrc(u))) {
    auto p = find_conjoint_binding_cells(D, u, v);
    if (p) return p;
  }
  return std::nullopt;
}

ConjointPair conjoint_from_companion(const DoubleCategory& D,
                                     const CompanionPair& p) {
  int vinv = D.X0->inverse(p.vertical);
  if (vinv < 0)
    throw ValidationError("VerticalNotInvertible",
                          "companion vertical " + D.X0->arrow(p.vertical).id +
                              " has no inverse");
  int alpha = D.X1->inverse(p.chi);
  int beta = D.X1->inverse(p.psi);
  if (alpha < 0 || beta < 0)
    throw ValidationError("VerticalNotInvertible",
                          "binding cells of " + D.X1->object(p.horizontal) +
                              " are not vertically invertible");
  ConjointPair c{p.horizontal, vinv, alpha, beta};
  if (!verify_conjoint(D, c))
    throw ValidationError("VerticalNotInvertible",
                          "inverted binding cells fail the conjoint equations");
  return c;
}

std::optional<PreCompanionWitness> is_precompanion(const DoubleCategory& D, int f,
                                                   const WeakGlobularityReport& wg) {
  if (!wg.pass())
    throw ValidationError("NotWeaklyGlobular",
                          "is_precompanion requires a weakly globular input");
  PreCompanionWitness w;
  bool left_found = false, right_found = false;

  for (int phi = 0; phi < D.X1->num_arrows() && !left_found; ++phi) {
    if (D.ctop(phi) != f || !D.cell_invertible(phi)) continue;
    int fp = D.cbot(phi);
    for (int r = 0; r < D.X1->num_objects() && !left_found; ++r) {
      if (D.hsrc(r) != D.htgt(fp)) continue;
      auto pair = find_companion(D, *D.hcomp(r, fp));
      if (pair) {
        w.phi = phi;
        w.f_prime = fp;
        w.r_f = r;
        w.left_pair = *pair;
        left_found = true;
      }
    }
  }
  if (!left_found) return std::nullopt;

  for (int phi = 0; phi < D.X1->num_arrows() && !right_found; ++phi) {
    if (D.ctop(phi) != f || !D.cell_invertible(phi)) continue;
    int fpp = D.cbot(phi);
    for (int l = 0; l < D.X1->num_objects() && !right_found; ++l) {
      if (D.htgt(l) != D.hsrc(fpp)) continue;
      auto pair = find_companion(D, *D.hcomp(fpp, l));
      if (pair) {
        w.phi_prime = phi;
        w.f_dprime = fpp;
        w.l_f = l;
        w.right_pair = *pair;
        right_found = true;
      }
    }
  }
  if (!right_found) return std::nullopt;

  // Linking cell nu : r_f => l_f. On the double categories in scope the cell
  // category is posetal and groupoidal, so the searched cell coincides with
  // the pasted one by uniqueness.
  for (int nu : D.X1->hom(w.r_f, w.l_f))
    if (D.cell_invertible(nu)) {
      w.nu = nu;
      return w;
    }
  throw ValidationError("LinkingCellMissing",
                        "pre-companion data found but no invertible cell " +
                            D.X1->object(w.r_f) + " => " + D.X1->object(w.l_f));
}

std::string quadruple_id(const DoubleCategory& D, const CompQuadruple& q) {
  return "q" + pair_id(pair_id(D.X1->object(q.h), D.X0->arrow(q.v).id),
                       pair_id(D.X1->arrow(q.psi).id, D.X1->arrow(q.chi).id));
}

std::optional<int> CompDouble::find_quadruple(const CompQuadruple& q) const {
  auto it = quad_lookup.find({q.h, q.v, q.psi, q.chi});
  if (it == quad_lookup.end()) return std::nullopt;
  return it->second;
}

CompDouble comp_double_category(const DoubleCategory& D) {
  CompDouble out;

  std::vector<CompQuadruple> quads;
  for (int h = 0; h < D.X1->num_objects(); ++h) {
    int A = D.hsrc(h), B = D.htgt(h);
    for (int v : D.X0->hom(A, B))
      for (int psi : D.X1->hom(D.hid(A), h)) {
        if (D.cleft(psi) != D.vid(A) || D.cright(psi) != v) continue;
        for (int chi : D.X1->hom(h, D.hid(B))) {
          if (D.cleft(chi) != v || D.cright(chi) != D.vid(B)) continue;
          if (verify_companion(D, CompanionPair{h, v, psi, chi}))
            quads.push_back({h, v, psi, chi});
        }
      }
  }
  std::map<std::string, int> quad_index_by_id;
  for (size_t i = 0; i < quads.size(); ++i)
    quad_index_by_id[quadruple_id(D, quads[i])] = static_cast<int>(i);

  auto id_quad = [&D](int A) {
    return CompQuadruple{D.hid(A), D.vid(A), D.cid(D.hid(A)), D.cid(D.hid(A))};
  };
  auto compose_quads = [&D](const CompQuadruple& later,
                            const CompQuadruple& earlier) {
    CompQuadruple r;
    r.h = *D.hcomp(later.h, earlier.h);
    r.v = D.X0->compose(later.v, earlier.v);
    int step = *D.ccomp(later.psi, D.cid(earlier.h));
    r.psi = *D.vcomp(step, earlier.psi);
    int step2 = *D.ccomp(D.cid(later.h), earlier.chi);
    r.chi = *D.vcomp(later.chi, step2);
    return r;
  };

  CategoryPresentation x0;
  x0.objects = D.X0->objects();
  for (const auto& q : quads)
    x0.arrows.push_back({quadruple_id(D, q), D.X0->object(D.hsrc(q.h)),
                         D.X0->object(D.htgt(q.h))});
  for (int A = 0; A < D.X0->num_objects(); ++A)
    x0.identities[D.X0->object(A)] = quadruple_id(D, id_quad(A));
  for (const auto& a : quads)
    for (const auto& b : quads) {
      if (D.hsrc(a.h) != D.htgt(b.h)) continue;
      CompQuadruple c = compose_quads(a, b);
      if (!quad_index_by_id.count(quadruple_id(D, c)))
        throw ValidationError("CompCompositionEscapes",
                              "composite of companion quadruples fails the "
                              "companion equations");
      x0.compose.push_back(
          {quadruple_id(D, a), quadruple_id(D, b), quadruple_id(D, c)});
    }
  CatPtr X0 = FinCategory::validate_ptr(x0);

  // Cells: (theta, theta', Theta) with the three compatibility conditions.
  auto cond = [&D](const CompQuadruple& t, const CompQuadruple& tp, int Theta) {
    if (D.cleft(Theta) != t.v || D.cright(Theta) != tp.v) return false;
    int f = D.ctop(Theta), g = D.cbot(Theta);
    auto sq1 = D.hcomp(tp.h, f);
    auto sq2 = D.hcomp(g, t.h);
    if (!sq1 || !sq2 || *sq1 != *sq2) return false;
    auto lhs2 = D.ccomp(tp.chi, Theta);
    auto rhs2 = D.ccomp(D.cid(g), t.chi);
    if (!lhs2 || !rhs2 || *lhs2 != *rhs2) return false;
    auto lhs3 = D.ccomp(Theta, t.psi);
    auto rhs3 = D.ccomp(tp.psi, D.cid(f));
    return lhs3 && rhs3 && *lhs3 == *rhs3;
  };

  struct CompCell {
    int t = -1, tp = -1, Theta = -1;
  };
  std::vector<CompCell> cells;
  for (int Theta = 0; Theta < D.X1->num_arrows(); ++Theta)
    for (size_t t = 0; t < quads.size(); ++t) {
      if (quads[t].v != D.cleft(Theta)) continue;
      for (size_t tp = 0; tp < quads.size(); ++tp) {
        if (quads[tp].v != D.cright(Theta)) continue;
        if (cond(quads[t], quads[tp], Theta))
          cells.push_back({static_cast<int>(t), static_cast<int>(tp), Theta});
      }
    }

  auto cell_id = [&](const CompCell& c) {
    return "t" + pair_id(D.X1->arrow(c.Theta).id,
                         pair_id(quadruple_id(D, quads[c.t]),
                                 quadruple_id(D, quads[c.tp])));
  };
  std::map<std::tuple<int, int, int>, std::string> cell_name;
  CategoryPresentation x1;
  x1.objects = D.X1->objects();
  for (const auto& c : cells) {
    x1.arrows.push_back({cell_id(c), D.X1->object(D.ctop(c.Theta)),
                         D.X1->object(D.cbot(c.Theta))});
    cell_name[{c.t, c.tp, c.Theta}] = cell_id(c);
  }
  for (int h = 0; h < D.X1->num_objects(); ++h) {
    int ta = quad_index_by_id.at(quadruple_id(D, id_quad(D.hsrc(h))));
    int tb = quad_index_by_id.at(quadruple_id(D, id_quad(D.htgt(h))));
    auto key = std::make_tuple(ta, tb, D.cid(h));
    if (!cell_name.count(key))
      throw ValidationError("CompCompositionEscapes",
                            "identity cell of " + D.X1->object(h) + " escapes");
    x1.identities[D.X1->object(h)] = cell_name.at(key);
  }
  for (const auto& c2 : cells)
    for (const auto& c1 : cells) {
      if (D.cbot(c1.Theta) != D.ctop(c2.Theta)) continue;
      CompQuadruple vt = compose_quads(quads[c2.t], quads[c1.t]);
      CompQuadruple vp = compose_quads(quads[c2.tp], quads[c1.tp]);
      auto theta = D.vcomp(c2.Theta, c1.Theta);
      int it = quad_index_by_id.at(quadruple_id(D, vt));
      int ip = quad_index_by_id.at(quadruple_id(D, vp));
      auto key = std::make_tuple(it, ip, *theta);
      if (!cell_name.count(key))
        throw ValidationError("CompCompositionEscapes",
                              "vertical composite of Comp cells escapes");
      x1.compose.push_back({cell_id(c2), cell_id(c1), cell_name.at(key)});
    }
  CatPtr X1 = FinCategory::validate_ptr(x1);

  std::map<std::string, CompCell> cell_by_name;
  for (const auto& c : cells) cell_by_name[cell_id(c)] = c;

  std::vector<int> d0o(X1->num_objects()), d1o(X1->num_objects());
  std::vector<int> d0a(X1->num_arrows()), d1a(X1->num_arrows());
  for (int h = 0; h < X1->num_objects(); ++h) {
    int dh = D.X1->object_index(X1->object(h));
    d0o[h] = X0->object_index(D.X0->object(D.hsrc(dh)));
    d1o[h] = X0->object_index(D.X0->object(D.htgt(dh)));
  }
  for (int a = 0; a < X1->num_arrows(); ++a) {
    const CompCell& c = cell_by_name.at(X1->arrow(a).id);
    d0a[a] = X0->arrow_index(quadruple_id(D, quads[c.t]));
    d1a[a] = X0->arrow_index(quadruple_id(D, quads[c.tp]));
  }
  FinFunctor d0(X1, X0, d0o, d0a, false), d1(X1, X0, d1o, d1a, false);

  std::vector<int> so(X0->num_objects()), sa(X0->num_arrows());
  for (int o = 0; o < X0->num_objects(); ++o)
    so[o] =
        X1->object_index(D.X1->object(D.hid(D.X0->object_index(X0->object(o)))));
  for (int q = 0; q < X0->num_arrows(); ++q) {
    int qi = quad_index_by_id.at(X0->arrow(q).id);
    auto key = std::make_tuple(qi, qi, D.scell(quads[qi].v));
    if (!cell_name.count(key))
      throw ValidationError("CompCompositionEscapes",
                            "horizontal identity cell escapes at " +
                                X0->arrow(q).id);
    sa[q] = X1->arrow_index(cell_name.at(key));
  }
  FinFunctor s(X0, X1, so, sa, false);

  auto ho = [&D, X1](int a, int b) -> std::optional<int> {
    auto c = D.hcomp(D.X1->object_index(X1->object(a)),
                     D.X1->object_index(X1->object(b)));
    if (!c) return std::nullopt;
    return X1->object_index(D.X1->object(*c));
  };
  auto hc = [&D, X1, &cell_by_name, &cell_name](int a, int b) -> std::optional<int> {
    const CompCell& ca = cell_by_name.at(X1->arrow(a).id);
    const CompCell& cb = cell_by_name.at(X1->arrow(b).id);
    if (ca.t != cb.tp) return std::nullopt;  // shared middle quadruple
    auto theta = D.ccomp(ca.Theta, cb.Theta);
    if (!theta) return std::nullopt;
    auto it = cell_name.find(std::make_tuple(cb.t, ca.tp, *theta));
    if (it == cell_name.end())
      throw ValidationError("CompCompositionEscapes",
                            "horizontal composite of Comp cells escapes");
    return X1->arrow_index(it->second);
  };

  out.dbl = DoubleCategory::assemble(X0, X1, d0, d1, s, ho, hc);

  out.object_underlying.resize(X0->num_objects());
  for (int o = 0; o < X0->num_objects(); ++o)
    out.object_underlying[o] = D.X0->object_index(X0->object(o));
  out.horizontal_underlying.resize(X1->num_objects());
  for (int h = 0; h < X1->num_objects(); ++h)
    out.horizontal_underlying[h] = D.X1->object_index(X1->object(h));
  out.vertical_data.resize(X0->num_arrows());
  for (int q = 0; q < X0->num_arrows(); ++q) {
    const auto& quad = quads[quad_index_by_id.at(X0->arrow(q).id)];
    out.vertical_data[q] = quad;
    out.quad_lookup[{quad.h, quad.v, quad.psi, quad.chi}] = q;
  }
  out.cell_underlying.resize(X1->num_arrows());
  for (int a = 0; a < X1->num_arrows(); ++a)
    out.cell_underlying[a] = cell_by_name.at(X1->arrow(a).id).Theta;
  return out;
}

}  // namespace wgdbl
