#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wgdbl {

// Thrown by the validators; `code` is a stable machine-readable tag
// (MissingComposite, AssociativityViolation, ...).
struct ValidationError : std::runtime_error {
  std::string code;
  ValidationError(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

struct ArrowDecl {
  std::string id, src, tgt;
};

// Raw presentation as it appears in the JSON input. Every composable pair
// must be listed in `compose`; nothing is inferred.
struct CategoryPresentation {
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::map<std::string, std::string> identities;       // object -> arrow id
  std::vector<std::array<std::string, 3>> compose;     // [g, f, g.f]
};

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

// A finite category with a total, explicitly tabulated composition.
// Objects and arrows are kept sorted by identifier so that every search
// in the library iterates in a fixed order.
class FinCategory {
 public:
  static FinCategory validate(const CategoryPresentation& raw);
  static CatPtr validate_ptr(const CategoryPresentation& raw);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  const std::string& object(int i) const { return objects_[i]; }
  const ArrowDecl& arrow(int i) const { return arrows_[i]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<ArrowDecl>& arrows() const { return arrows_; }

  int object_index(const std::string& id) const;
  int arrow_index(const std::string& id) const;
  std::optional<int> find_object(const std::string& id) const;
  std::optional<int> find_arrow(const std::string& id) const;

  int src(int f) const { return src_[f]; }
  int tgt(int f) const { return tgt_[f]; }
  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int f) const;

  bool composable(int g, int f) const { return src_[g] == tgt_[f]; }
  int compose(int g, int f) const;  // precondition: composable(g, f)
  std::optional<int> try_compose(int g, int f) const;

  // Arrows a -> b, sorted by identifier.
  const std::vector<int>& hom(int a, int b) const;

  bool is_iso(int f) const { return inverse_[f] >= 0; }
  // -1 when f is not invertible.
  int inverse(int f) const { return inverse_[f]; }

  // Connected components under the zig-zag relation.
  struct Pi0 {
    std::vector<int> class_of;             // object index -> class index
    std::vector<std::vector<int>> classes; // sorted members per class
    std::vector<int> representative;       // least member per class
  };
  const Pi0& pi0() const { return pi0_; }

  CategoryPresentation presentation() const;

 private:
  FinCategory() = default;
  void build_indexes();

  std::vector<std::string> objects_;
  std::vector<ArrowDecl> arrows_;
  std::vector<int> src_, tgt_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int> obj_index_, arrow_index_;
  std::unordered_map<long long, int> compose_;
  std::map<std::pair<int, int>, std::vector<int>> hom_;
  std::vector<int> empty_hom_;
  Pi0 pi0_;
};

// A functor between validated finite categories. Stores index-based maps.
class FinFunctor {
 public:
  FinFunctor() = default;
  FinFunctor(CatPtr dom, CatPtr cod, std::vector<int> obj_map,
             std::vector<int> arr_map, bool check = true);

  static FinFunctor identity(CatPtr c);
  static FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

  const CatPtr& dom() const { return dom_; }
  const CatPtr& cod() const { return cod_; }
  int obj(int i) const { return obj_map_[i]; }
  int arr(int i) const { return arr_map_[i]; }
  const std::vector<int>& obj_map() const { return obj_map_; }
  const std::vector<int>& arr_map() const { return arr_map_; }

  bool same_tables(const FinFunctor& other) const;

  // Lifts isomorphisms: for every object e and iso w with src w = F(e)
  // there is an iso in dom over w starting at e.
  bool is_isofibration() const;

 private:
  void check_functoriality() const;
  CatPtr dom_, cod_;
  std::vector<int> obj_map_, arr_map_;
};

struct EquivalenceVerdict {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  // On failure: the offending hom-pair (dom objects) / codomain object.
  std::optional<std::pair<std::string, std::string>> ff_witness;
  std::optional<std::string> es_witness;
  bool is_equivalence() const { return fully_faithful && essentially_surjective; }
};

// Natural transformation between parallel functors.
class FinNatTrans {
 public:
  FinNatTrans(FinFunctor source, FinFunctor target,
              std::vector<int> components, bool check = true);

  const FinFunctor& source() const { return source_; }
  const FinFunctor& target() const { return target_; }
  int component(int obj) const { return components_[obj]; }
  bool is_invertible() const;

 private:
  void check_naturality() const;
  FinFunctor source_, target_;
  std::vector<int> components_;  // dom object -> cod arrow
};

// Verdict plus the comparison data gamma : C -> C_d, gamma' : C_d -> C
// with gamma.gamma' = id (gamma' picks the least identifier per class).
struct DiscreteComparison {
  EquivalenceVerdict verdict;
  CatPtr discrete;        // discrete category on the pi0 classes
  FinFunctor gamma;       // quotient
  FinFunctor gamma_prime; // least-representative section
};

DiscreteComparison is_equivalent_to_discrete(const CatPtr& c);

EquivalenceVerdict is_equivalence(const FinFunctor& f);

struct PullbackResult {
  CatPtr apex;
  FinFunctor proj1, proj2;        // proj1 -> dom(F), proj2 -> dom(G)
  // apex object/arrow index -> (index in dom F side, index in dom G side)
  std::vector<std::pair<int, int>> obj_components;
  std::vector<std::pair<int, int>> arr_components;
  std::optional<int> find_obj(int a, int b) const;
  std::optional<int> find_arr(int f, int g) const;
  std::map<std::pair<int, int>, int> obj_lookup;
  std::map<std::pair<int, int>, int> arr_lookup;
};

// Pullback of F : A -> C against G : B -> C in Cat.
PullbackResult pullback(const FinFunctor& F, const FinFunctor& G);

// Encodes a pair id "(a,b)" with backslash escaping of '(' ')' ',' '\'.
std::string pair_id(const std::string& a, const std::string& b);

CatPtr discrete_category(const std::vector<std::string>& objects);

// Brute-force isomorphism-closure helper: objects isomorphic to `obj`.
std::vector<int> iso_class_of_object(const FinCategory& c, int obj);

}  // namespace wgdbl
