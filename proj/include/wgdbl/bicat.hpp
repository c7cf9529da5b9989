#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wgdbl/dblcat.hpp"
#include "wgdbl/fractions.hpp"

namespace wgdbl {

// A finite bicategory with tabulated composition and coherence data.
// Vertical composition of 2-cells is `vcomp2(later, earlier)`; horizontal
// composition `hcomp1/hcomp2(later, earlier)` follows the same convention
// as m in DoubleCategory.
class Bicategory {
 public:
  struct OneCell {
    std::string id;
    int src = -1, tgt = -1;  // object indices
  };
  struct TwoCell {
    std::string id;
    int src = -1, tgt = -1;  // parallel 1-cell indices
  };

  std::vector<std::string> objects;
  std::vector<OneCell> ones;
  std::vector<TwoCell> twos;
  std::vector<int> identity1;  // object -> 1-cell
  std::vector<int> identity2;  // 1-cell -> 2-cell
  std::map<std::pair<int, int>, int> vcomp2_table;
  std::map<std::pair<int, int>, int> hcomp1_table;
  std::map<std::pair<int, int>, int> hcomp2_table;
  std::map<std::tuple<int, int, int>, int> associator;  // (h,g,f) -> 2-cell
  std::vector<int> lunitor, runitor;                    // 1-cell -> 2-cell

  bool locally_posetal = false;
  bool strict = false;

  int object_index(const std::string& s) const;
  int one_index(const std::string& s) const;
  int two_index(const std::string& s) const;
  std::map<std::string, int> obj_lookup_, one_lookup_, two_lookup_;

  std::optional<int> vcomp2(int b, int a) const;
  std::optional<int> hcomp1(int g, int f) const;
  std::optional<int> hcomp2(int b, int a) const;
  // inverse with respect to vertical composition, -1 if none
  int inverse2(int a) const;
  std::vector<int> inverse2_;

  // all 2-cells from f to g
  const std::vector<int>& cells_between(int f, int g) const;
  std::map<std::pair<int, int>, std::vector<int>> cells_between_;
  std::vector<int> empty_;

  void build_indexes();
};

// Validates every bicategory axiom on the tables: hom-categories, the
// functoriality of horizontal composition (interchange), naturality of the
// coherence cells (skipped when hom-categories are posetal, where it is
// automatic), pentagon and triangle. Infers `locally_posetal` and `strict`.
Bicategory validate_bicategory(Bicategory raw);

// C as a bicategory with only identity 2-cells.
Bicategory locally_discrete_bicategory(const CatPtr& C);

std::vector<int> quasi_units(const Bicategory& B);
std::vector<int> equivalences(const Bicategory& B);

// ---------------------------------------------------------------------------
// Fundamental bicategory

struct FundamentalBicat {
  Bicategory bic;
  // 1-cells are exactly the X1 objects and 2-cells the X1 arrows, in order.
  std::vector<int> object_class_rep;  // bic object -> X0 object (least rep)
  // chosen composition lifts: for a class-composable pair (g, f) of 1-cells,
  // the invertible cells a : f3 => f, b : g3 => g with f3, g3 strictly
  // composable; the composite 1-cell is m(g3, f3)
  std::map<std::pair<int, int>, std::array<int, 2>> lifts;  // (g,f) -> (a, b)
};

FundamentalBicat fundamental_bicategory(const DoubleCategory& X,
                                        const WeakGlobularityReport& wg);

// ---------------------------------------------------------------------------
// Marked paths

struct MarkedDouble {
  DoubleCategory dbl;
  struct PathObj {
    int start = -1;          // object of B
    std::vector<int> cells;  // composable 1-cells of B
    int mark = 0;
  };
  std::vector<PathObj> objects;        // dbl.X0 object -> marked path
  struct PathArrow {
    int start = -1;
    std::vector<int> cells;
    int mark0 = 0, mark1 = 0;
  };
  std::vector<PathArrow> horizontals;  // dbl.X1 object -> marked pair
  std::vector<int> cell_two;           // dbl.X1 arrow -> 2-cell of B
};

// Marked-path double category of B, truncated to paths of length <= L.
// Requires B strict or locally posetal.
MarkedDouble marked_paths_double(const Bicategory& B, int max_len);

// ---------------------------------------------------------------------------
// Bicategory of fractions

struct BicatFractions {
  Bicategory bic;
  std::vector<std::pair<int, int>> span;  // 1-cell -> (w, f) in base
  std::map<std::pair<int, int>, int> span_lookup;
};

BicatFractions bicat_of_fractions(const FractionsPresentation& P);

// ---------------------------------------------------------------------------
// The omega comparison Bic(C{W}) -> C(W^-1)

struct OmegaReport {
  bool object_bijective = false;
  std::vector<std::pair<std::string, EquivalenceVerdict>> hom_verdicts;
  bool units_strict = false;
  bool units_comparison = false;       // invertible comparison cell exists
  bool composition_comparison = false; // comparison cells exist for all pairs
  std::string detail;
  bool pass() const {
    if (!object_bijective || !units_comparison || !composition_comparison)
      return false;
    for (const auto& [k, v] : hom_verdicts)
      if (!v.is_equivalence()) return false;
    return true;
  }
};

OmegaReport omega_comparison(const FractionsPresentation& P,
                             const FractionsDouble& F,
                             const FundamentalBicat& bic,
                             const BicatFractions& cw);

}  // namespace wgdbl
