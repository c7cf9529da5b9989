#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wgdbl/dblcat.hpp"

namespace wgdbl {

struct GroupoidalVerdict {
  bool pass = false;
  std::string detail;
};

// Every hom-block X_(a,b) of X1 must be a groupoid, and Pi0 X must be one.
GroupoidalVerdict check_groupoidal(const DoubleCategory& X,
                                   const WeakGlobularityReport& wg);

struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;  // table[i][j] = product i.j
  int identity = 0;
  int order() const { return static_cast<int>(elements.size()); }
  bool is_abelian() const;
};

bool groups_isomorphic(const GroupTable& a, const GroupTable& b);

struct HomotopyGroups {
  int pi0 = 0;
  std::vector<std::string> pi0_representatives;
  GroupTable pi1;  // automorphisms of the basepoint in Pi0 X
  GroupTable pi2;  // endo-cells of id_x under vertical composition
};

// Basepoint names any object of X0; its pi0 class is used.
HomotopyGroups homotopy_groups(const DoubleCategory& X,
                               const std::string& basepoint,
                               const WeakGlobularityReport& wg);

struct PostnikovResult {
  std::shared_ptr<DoubleCategory> target;  // H(Pi0 X)
  DoubleFunctor map;                       // X -> *target
  CheckResult functor_check;
  bool pi0_iso = false;
  bool pi1_iso = false;  // at every basepoint class
};

PostnikovResult postnikov_map(const DoubleCategory& X,
                              const WeakGlobularityReport& wg);

}  // namespace wgdbl
