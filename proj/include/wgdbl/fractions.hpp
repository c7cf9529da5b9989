#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgdbl/companion.hpp"
#include "wgdbl/dblcat.hpp"

namespace wgdbl {

struct FractionsPresentation {
  CatPtr base;
  std::vector<int> w;          // sorted arrow indices
  std::vector<char> in_w;      // indicator over base arrows
  bool require_two_out_of_three = false;

  static FractionsPresentation make(CatPtr base,
                                    const std::vector<std::string>& w_ids,
                                    bool two_out_of_three = false);
  static FractionsPresentation all_arrows(CatPtr base,
                                          bool two_out_of_three = false);
  static FractionsPresentation identities_only(CatPtr base,
                                               bool two_out_of_three = false);
};

struct FractionsReport {
  bool cf1 = false, cf2 = false, cf3 = false;
  bool two_out_of_three_checked = false;
  bool two_out_of_three = false;
  std::vector<std::string> failures;  // human-readable, with witnesses
  bool pass() const {
    return cf1 && cf2 && cf3 && (!two_out_of_three_checked || two_out_of_three);
  }
};

FractionsReport check_fractions_conditions(const FractionsPresentation& P);

// Witness for a double cell of C{W}: spans (u1, C, u2) and (v1, D, v2) with
// w1.u1 = w2.u2 in W (resp. primed on the right) and phi : C -> D satisfying
// v1.phi = f1.u1 and v2.phi = f2.u2. All fields are indices into base.
struct CellWitness {
  int apexL = -1, u1 = -1, u2 = -1;
  int apexR = -1, v1 = -1, v2 = -1;
  int phi = -1;
};

// A frame in C{W}: horizontals f1 : (w1) -> (w1p) and f2 : (w2) -> (w2p).
struct Frame {
  int w1 = -1, f1 = -1, w1p = -1;
  int w2 = -1, f2 = -1, w2p = -1;
};

std::optional<CellWitness> cell_exists(const FractionsPresentation& P,
                                       const Frame& frame);

class FractionsDouble {
 public:
  FractionsPresentation pres;
  DoubleCategory dbl;

  // provenance
  std::vector<int> obj_to_w;                       // X0 object -> base arrow
  std::vector<std::pair<int, int>> vert_to_pair;   // X0 arrow -> (w1, w2)
  std::vector<std::array<int, 3>> vert_span;       // (apex, u1, u2) per vertical
  struct HData {
    int w = -1, f = -1, wp = -1;
  };
  std::vector<HData> horiz;                        // X1 object -> triple
  std::vector<CellWitness> cell_witness;           // X1 arrow -> witness
  std::vector<Frame> cell_frame;                   // X1 arrow -> frame

  int object_of_w(int w) const;
  std::optional<int> vertical(int w1, int w2) const;
  std::optional<int> horizontal(int w, int f, int wp) const;
  std::optional<int> cell_on(int topH, int botH) const;

  std::map<int, int> w_to_obj_;
  std::map<std::tuple<int, int, int>, int> horiz_lookup_;
  std::map<std::pair<int, int>, int> vert_lookup_, cell_lookup_;
};

FractionsDouble build_fractions(const FractionsPresentation& P);

// The strict inclusion H(C) -> C{W}: A |-> (1_A), f |-> f, cells to the
// unique fillers. `hc` must be h_double(P.base).
DoubleFunctor inclusion_JC(const FractionsDouble& F, const DoubleCategory& hc);

// Companion/conjoint normal-form classification, cross-checked against the
// searches (the normal form: a vertical (w1) -> (w2) has a companion iff
// w1 = w2 . u for some u, dually for conjoints; a horizontal u : (w1) -> (w2)
// has both iff w1 = w2 . u).
struct CompanionClassification {
  struct VerticalEntry {
    std::string vertical;
    bool companion_form = false, companion_found = false;
    bool conjoint_form = false, conjoint_found = false;
  };
  struct HorizontalEntry {
    std::string horizontal;
    bool normal_form = false, companion_found = false, conjoint_found = false;
  };
  std::vector<VerticalEntry> verticals;
  std::vector<HorizontalEntry> horizontals;
  bool biconditional_holds = true;
};

CompanionClassification classify_for_companions(const FractionsDouble& F);

// Factorization of a double cell into binding cells and identity cells
// (four rows of two factors each).
struct FactorPlan {
  struct Factor {
    int top = -1, bottom = -1;  // X1 objects
    int cell = -1;              // the unique filling cell
    std::string kind;           // identity | binding-psi | binding-chi |
                                // binding-psi-inverse | binding-chi-inverse
  };
  std::array<std::array<Factor, 2>, 4> factors;
  std::array<int, 4> row_cells{-1, -1, -1, -1};
  int total_cell = -1;  // pasted result; equals the input cell
  bool verified = false;
};

FactorPlan factor_cell(const FractionsDouble& F, int cell);

// nabla(W): objects are the arrows of W, arrows the commuting triangles.
struct NablaW {
  CatPtr cat;
  FinFunctor D0;                                  // into base
  std::vector<int> obj_to_w;                      // object -> base arrow
  std::vector<std::pair<int, int>> arr_to_triangle;  // arrow -> (v, w')
};

NablaW nabla_W(const FractionsPresentation& P);

// The canonical W-friendly structure for J_C: Phi : V(nabla W) -> Comp(C{W})
// plus the invertible natural transformation phi with components
// (w) -> (1_{dom w}).
struct PhiFunctorResult {
  DoubleCategory v_nabla;
  DoubleFunctor Phi;        // v_nabla -> comp.dbl
  FinNatTrans phi;          // h . vPhi => h J_C . D0 in the horizontal category
  CatPtr hcat;              // horizontal category of C{W}
};

PhiFunctorResult phi_functor(const FractionsPresentation& P,
                             const FractionsDouble& F, const NablaW& nabla,
                             const CompDouble& comp);

// A W-friendly structure (G, Gamma, gamma) on a target double category.
struct WFriendlyStructure {
  const DoubleCategory* hc = nullptr;     // H(base)
  const DoubleCategory* target = nullptr; // D
  DoubleFunctor G;                        // H(base) -> D
  const NablaW* nabla = nullptr;
  const CompDouble* compD = nullptr;      // Comp(D)
  const DoubleCategory* v_nabla = nullptr;
  DoubleFunctor Gamma;                    // V(nabla W) -> Comp(D)
  CatPtr hcat;                            // horizontal category of D
  std::vector<int> gamma;                 // nabla object -> hcat arrow
};

CheckResult check_w_friendly_structure(const WFriendlyStructure& S);

struct LiftResult {
  DoubleFunctor lifted;                // C{W} -> D
  CheckResult functor_check;
  HorizontalTransformation comparison; // lifted . J_C => G
  CheckResult comparison_check;
  bool comparison_invertible = false;
};

LiftResult lift_w_friendly(const WFriendlyStructure& S, const FractionsDouble& F,
                           const DoubleCategory& hc);

// W-friendly transformation (a, alpha) between two structures over the same
// base, W and target.
struct WFriendlyTransformation {
  HorizontalTransformation a;      // G => L
  HorizontalTransformation alpha;  // Gamma => Lambda (in Comp(D))
};

CheckResult check_w_friendly_transformation(const WFriendlyStructure& S1,
                                            const WFriendlyStructure& S2,
                                            const WFriendlyTransformation& t);

}  // namespace wgdbl
