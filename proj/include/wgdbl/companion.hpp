#pragma once

#include <optional>
#include <vector>

#include "wgdbl/dblcat.hpp"

namespace wgdbl {

// A companion pair (f, v) with binding cells
//   psi : Id_A => f  (left 1_A, right v)   chi : f => Id_B  (left v, right 1_B)
// satisfying chi . psi = id_f horizontally and chi . psi = id_v vertically.
struct CompanionPair {
  int horizontal = -1;  // X1 object
  int vertical = -1;    // X0 arrow
  int psi = -1, chi = -1;  // X1 arrows
};

// A conjoint pair (u, v) with u : B -> A horizontal, v : B -> A ... the
// vertical runs htgt(u) -> hsrc(u); binding cells
//   alpha : Id_{htgt u} => u  (left v, right 1)   beta : u => Id_{hsrc u}  (left 1, right v)
struct ConjointPair {
  int horizontal = -1;
  int vertical = -1;
  int alpha = -1, beta = -1;
};

bool verify_companion(const DoubleCategory& D, const CompanionPair& p);
bool verify_conjoint(const DoubleCategory& D, const ConjointPair& p);

// Exhaustive searches returning the least witness in (vertical, psi, chi)
// identifier order; the result is re-verified before being returned.
std::optional<CompanionPair> find_companion(const DoubleCategory& D, int horizontal);
std::optional<ConjointPair> find_conjoint(const DoubleCategory& D, int horizontal);

// Binding cells for a prescribed (horizontal, vertical) pair, when they exist.
std::optional<CompanionPair> find_binding_cells(const DoubleCategory& D,
                                                int horizontal, int vertical);
std::optional<ConjointPair> find_conjoint_binding_cells(const DoubleCategory& D,
                                                        int horizontal, int vertical);

// Vertical inverses of the binding cells turn a companion of f into a
// conjoint of f along v^{-1}. Throws VerticalNotInvertible.
ConjointPair conjoint_from_companion(const DoubleCategory& D, const CompanionPair& p);

struct PreCompanionWitness {
  // left pre-companion data: phi : f => f' vertically invertible and
  // r_f with r_f . f' a companion
  int phi = -1, f_prime = -1, r_f = -1;
  CompanionPair left_pair;
  // right pre-companion data: phi' : f => f'' and l_f with f'' . l_f a companion
  int phi_prime = -1, f_dprime = -1, l_f = -1;
  CompanionPair right_pair;
  // linking cell r_f => l_f, vertically invertible
  int nu = -1;
};

std::optional<PreCompanionWitness> is_precompanion(const DoubleCategory& D,
                                                   int horizontal,
                                                   const WeakGlobularityReport& wg);

// The double category of companions Comp(D): same objects and horizontal
// arrows, vertical arrows are companion quadruples, cells are cells of D
// compatible with the binding data.
struct CompQuadruple {
  int h = -1, v = -1, psi = -1, chi = -1;  // indices into D
};

struct CompDouble {
  DoubleCategory dbl;
  // decode tables into D
  std::vector<CompQuadruple> vertical_data;  // dbl.X0 arrow -> quadruple
  std::vector<int> cell_underlying;          // dbl.X1 arrow -> D.X1 arrow
  std::vector<int> object_underlying;        // dbl.X0 object -> D.X0 object
  std::vector<int> horizontal_underlying;    // dbl.X1 object -> D.X1 object
  std::optional<int> find_quadruple(const CompQuadruple& q) const;
  std::map<std::tuple<int, int, int, int>, int> quad_lookup;
};

CompDouble comp_double_category(const DoubleCategory& D);

// Canonical name of a quadruple vertical arrow in Comp(D).
std::string quadruple_id(const DoubleCategory& D, const CompQuadruple& q);

}  // namespace wgdbl
