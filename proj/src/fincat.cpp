#include "wgdbl/fincat.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace wgdbl {

namespace {
long long pair_key(int g, int f) {
  return (static_cast<long long>(g) << 32) | static_cast<unsigned>(f);
}
}  // namespace

std::string pair_id(const std::string& a, const std::string& b) {
  auto esc = [](const std::string& s) {
    std::string out;
    for (char ch : s) {
      if (ch == '(' || ch == ')' || ch == ',' || ch == '\\') out.push_back('\\');
      out.push_back(ch);
    }
    return out;
  };
  return "(" + esc(a) + "," + esc(b) + ")";
}

FinCategory FinCategory::validate(const CategoryPresentation& raw) {
  FinCategory c;
  c.objects_ = raw.objects;
  std::sort(c.objects_.begin(), c.objects_.end());
  if (std::adjacent_find(c.objects_.begin(), c.objects_.end()) != c.objects_.end())
    throw ValidationError("DuplicateObject", "duplicate object identifier");
  c.arrows_ = raw.arrows;
  std::sort(c.arrows_.begin(), c.arrows_.end(),
            [](const ArrowDecl& a, const ArrowDecl& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < c.arrows_.size(); ++i)
    if (c.arrows_[i].id == c.arrows_[i + 1].id)
      throw ValidationError("DuplicateArrow", "duplicate arrow id " + c.arrows_[i].id);

  for (int i = 0; i < c.num_objects(); ++i) c.obj_index_[c.objects_[i]] = i;
  for (int i = 0; i < c.num_arrows(); ++i) c.arrow_index_[c.arrows_[i].id] = i;

  c.src_.resize(c.num_arrows());
  c.tgt_.resize(c.num_arrows());
  for (int i = 0; i < c.num_arrows(); ++i) {
    auto s = c.obj_index_.find(c.arrows_[i].src);
    auto t = c.obj_index_.find(c.arrows_[i].tgt);
    if (s == c.obj_index_.end() || t == c.obj_index_.end())
      throw ValidationError("UnknownObject",
                            "arrow " + c.arrows_[i].id + " has unknown endpoint");
    c.src_[i] = s->second;
    c.tgt_[i] = t->second;
  }

  c.identity_.assign(c.num_objects(), -1);
  for (const auto& [obj, arr] : raw.identities) {
    auto o = c.obj_index_.find(obj);
    auto a = c.arrow_index_.find(arr);
    if (o == c.obj_index_.end())
      throw ValidationError("UnknownObject", "identity for unknown object " + obj);
    if (a == c.arrow_index_.end())
      throw ValidationError("UnknownArrow", "identity arrow " + arr + " not declared");
    if (c.src_[a->second] != o->second || c.tgt_[a->second] != o->second)
      throw ValidationError("IdentityViolation",
                            "identity of " + obj + " is not an endomorphism");
    c.identity_[o->second] = a->second;
  }
  for (int i = 0; i < c.num_objects(); ++i)
    if (c.identity_[i] < 0)
      throw ValidationError("IdentityViolation",
                            "object " + c.objects_[i] + " has no identity");

  for (const auto& entry : raw.compose) {
    auto g = c.arrow_index_.find(entry[0]);
    auto f = c.arrow_index_.find(entry[1]);
    auto gf = c.arrow_index_.find(entry[2]);
    if (g == c.arrow_index_.end() || f == c.arrow_index_.end() ||
        gf == c.arrow_index_.end())
      throw ValidationError("UnknownArrow", "compose entry names unknown arrow (" +
                                                entry[0] + "," + entry[1] + ")");
    if (c.src_[g->second] != c.tgt_[f->second])
      throw ValidationError("NotComposable",
                            "compose entry (" + entry[0] + "," + entry[1] +
                                ") is not a composable pair");
    long long key = pair_key(g->second, f->second);
    auto [it, fresh] = c.compose_.emplace(key, gf->second);
    if (!fresh && it->second != gf->second)
      throw ValidationError("CompositionConflict",
                            "two values for composite (" + entry[0] + "," + entry[1] + ")");
  }

  // Index arrows by endpoint for the table scans below.
  std::vector<std::vector<int>> by_src(c.num_objects()), by_tgt(c.num_objects());
  for (int f = 0; f < c.num_arrows(); ++f) {
    by_src[c.src_[f]].push_back(f);
    by_tgt[c.tgt_[f]].push_back(f);
  }

  // Totality on composable pairs plus boundary compatibility.
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int f : by_tgt[c.src_[g]]) {
      auto it = c.compose_.find(pair_key(g, f));
      if (it == c.compose_.end())
        throw ValidationError("MissingComposite",
                              "no composite listed for (" + c.arrows_[g].id + "," +
                                  c.arrows_[f].id + ")");
      int gf = it->second;
      if (c.src_[gf] != c.src_[f] || c.tgt_[gf] != c.tgt_[g])
        throw ValidationError("CompositionBoundary",
                              "composite (" + c.arrows_[g].id + "," + c.arrows_[f].id +
                                  ") has wrong endpoints");
    }

  // Identity laws.
  for (int f = 0; f < c.num_arrows(); ++f) {
    if (c.compose_.at(pair_key(f, c.identity_[c.src_[f]])) != f ||
        c.compose_.at(pair_key(c.identity_[c.tgt_[f]], f)) != f)
      throw ValidationError("IdentityViolation",
                            "identity law fails at arrow " + c.arrows_[f].id);
  }

  // Associativity on all composable triples.
  for (int g = 0; g < c.num_arrows(); ++g)
    for (int h : by_tgt[c.src_[g]]) {
      int gh = c.compose_.at(pair_key(g, h));
      for (int f : by_src[c.tgt_[g]]) {
        int fg = c.compose_.at(pair_key(f, g));
        if (c.compose_.at(pair_key(f, gh)) != c.compose_.at(pair_key(fg, h)))
          throw ValidationError("AssociativityViolation",
                                "associativity fails on (" + c.arrows_[f].id + "," +
                                    c.arrows_[g].id + "," + c.arrows_[h].id + ")");
      }
    }

  c.build_indexes();
  return c;
}

CatPtr FinCategory::validate_ptr(const CategoryPresentation& raw) {
  return std::make_shared<const FinCategory>(validate(raw));
}

void FinCategory::build_indexes() {
  for (int i = 0; i < num_arrows(); ++i)
    hom_[{src_[i], tgt_[i]}].push_back(i);

  inverse_.assign(num_arrows(), -1);
  for (int f = 0; f < num_arrows(); ++f) {
    for (int g : hom(tgt_[f], src_[f])) {
      if (compose_.at(pair_key(g, f)) == identity_[src_[f]] &&
          compose_.at(pair_key(f, g)) == identity_[tgt_[f]]) {
        inverse_[f] = g;
        break;
      }
    }
  }

  // pi0 via union-find over arrows.
  std::vector<int> parent(num_objects());
  for (int i = 0; i < num_objects(); ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < num_arrows(); ++f) {
    int a = find(src_[f]), b = find(tgt_[f]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  pi0_.class_of.assign(num_objects(), -1);
  for (int i = 0; i < num_objects(); ++i) {
    int root = find(i);
    if (pi0_.class_of[root] < 0) {
      pi0_.class_of[root] = static_cast<int>(pi0_.classes.size());
      pi0_.classes.emplace_back();
      pi0_.representative.push_back(root);
    }
    pi0_.class_of[i] = pi0_.class_of[root];
    pi0_.classes[pi0_.class_of[i]].push_back(i);
  }
}

int FinCategory::object_index(const std::string& id) const {
  auto it = obj_index_.find(id);
  if (it == obj_index_.end())
    throw ValidationError("UnknownObject", "no object " + id);
  return it->second;
}

int FinCategory::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end())
    throw ValidationError("UnknownArrow", "no arrow " + id);
  return it->second;
}

std::optional<int> FinCategory::find_object(const std::string& id) const {
  auto it = obj_index_.find(id);
  if (it == obj_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_arrow(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool FinCategory::is_identity(int f) const {
  return identity_[src_[f]] == f;
}

int FinCategory::compose(int g, int f) const {
  return compose_.at(pair_key(g, f));
}

std::optional<int> FinCategory::try_compose(int g, int f) const {
  if (!composable(g, f)) return std::nullopt;
  return compose_.at(pair_key(g, f));
}

const std::vector<int>& FinCategory::hom(int a, int b) const {
  auto it = hom_.find({a, b});
  return it == hom_.end() ? empty_hom_ : it->second;
}

CategoryPresentation FinCategory::presentation() const {
  CategoryPresentation p;
  p.objects = objects_;
  p.arrows = arrows_;
  for (int i = 0; i < num_objects(); ++i)
    p.identities[objects_[i]] = arrows_[identity_[i]].id;
  for (int g = 0; g < num_arrows(); ++g)
    for (int f = 0; f < num_arrows(); ++f)
      if (composable(g, f))
        p.compose.push_back({arrows_[g].id, arrows_[f].id, arrows_[compose(g, f)].id});
  return p;
}

FinFunctor::FinFunctor(CatPtr dom, CatPtr cod, std::vector<int> obj_map,
                       std::vector<int> arr_map, bool check)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      obj_map_(std::move(obj_map)),
      arr_map_(std::move(arr_map)) {
  if (check) check_functoriality();
}

void FinFunctor::check_functoriality() const {
  if (static_cast<int>(obj_map_.size()) != dom_->num_objects() ||
      static_cast<int>(arr_map_.size()) != dom_->num_arrows())
    throw ValidationError("FunctorTable", "functor tables have wrong size");
  for (int f = 0; f < dom_->num_arrows(); ++f) {
    int ff = arr_map_[f];
    if (cod_->src(ff) != obj_map_[dom_->src(f)] ||
        cod_->tgt(ff) != obj_map_[dom_->tgt(f)])
      throw ValidationError("FunctorBoundary",
                            "image of " + dom_->arrow(f).id + " has wrong endpoints");
  }
  for (int o = 0; o < dom_->num_objects(); ++o)
    if (arr_map_[dom_->identity(o)] != cod_->identity(obj_map_[o]))
      throw ValidationError("FunctorIdentity",
                            "identity of " + dom_->object(o) + " not preserved");
  std::vector<std::vector<int>> by_tgt(dom_->num_objects());
  for (int f = 0; f < dom_->num_arrows(); ++f) by_tgt[dom_->tgt(f)].push_back(f);
  for (int g = 0; g < dom_->num_arrows(); ++g)
    for (int f : by_tgt[dom_->src(g)]) {
      if (arr_map_[dom_->compose(g, f)] != cod_->compose(arr_map_[g], arr_map_[f]))
        throw ValidationError("FunctorComposition",
                              "composition not preserved on (" + dom_->arrow(g).id +
                                  "," + dom_->arrow(f).id + ")");
    }
}

FinFunctor FinFunctor::identity(CatPtr c) {
  std::vector<int> om(c->num_objects()), am(c->num_arrows());
  for (int i = 0; i < c->num_objects(); ++i) om[i] = i;
  for (int i = 0; i < c->num_arrows(); ++i) am[i] = i;
  return FinFunctor(c, c, std::move(om), std::move(am), false);
}

FinFunctor FinFunctor::compose(const FinFunctor& g, const FinFunctor& f) {
  std::vector<int> om(f.dom()->num_objects()), am(f.dom()->num_arrows());
  for (size_t i = 0; i < om.size(); ++i) om[i] = g.obj(f.obj(static_cast<int>(i)));
  for (size_t i = 0; i < am.size(); ++i) am[i] = g.arr(f.arr(static_cast<int>(i)));
  return FinFunctor(f.dom(), g.cod(), std::move(om), std::move(am), false);
}

bool FinFunctor::same_tables(const FinFunctor& other) const {
  return obj_map_ == other.obj_map_ && arr_map_ == other.arr_map_;
}

bool FinFunctor::is_isofibration() const {
  for (int e = 0; e < dom_->num_objects(); ++e) {
    int base = obj_map_[e];
    for (int w = 0; w < cod_->num_arrows(); ++w) {
      if (!cod_->is_iso(w) || cod_->src(w) != base) continue;
      bool lifted = false;
      for (int psi = 0; psi < dom_->num_arrows() && !lifted; ++psi)
        if (dom_->is_iso(psi) && dom_->src(psi) == e && arr_map_[psi] == w)
          lifted = true;
      if (!lifted) return false;
    }
  }
  return true;
}

FinNatTrans::FinNatTrans(FinFunctor source, FinFunctor target,
                         std::vector<int> components, bool check)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  if (check) check_naturality();
}

void FinNatTrans::check_naturality() const {
  if (source_.dom().get() != target_.dom().get() ||
      source_.cod().get() != target_.cod().get())
    throw ValidationError("NatTransParallel", "functors are not parallel");
  const auto& dom = *source_.dom();
  const auto& cod = *source_.cod();
  for (int o = 0; o < dom.num_objects(); ++o) {
    int comp = components_[o];
    if (cod.src(comp) != source_.obj(o) || cod.tgt(comp) != target_.obj(o))
      throw ValidationError("NatTransComponent",
                            "component at " + dom.object(o) + " has wrong endpoints");
  }
  for (int f = 0; f < dom.num_arrows(); ++f) {
    int left = cod.compose(components_[dom.tgt(f)], source_.arr(f));
    int right = cod.compose(target_.arr(f), components_[dom.src(f)]);
    if (left != right)
      throw ValidationError("NaturalityViolation",
                            "naturality square fails at " + dom.arrow(f).id);
  }
}

bool FinNatTrans::is_invertible() const {
  const auto& cod = *source_.cod();
  for (int c : components_)
    if (!cod.is_iso(c)) return false;
  return true;
}

CatPtr discrete_category(const std::vector<std::string>& objects) {
  CategoryPresentation p;
  p.objects = objects;
  for (const auto& o : objects) {
    p.arrows.push_back({"1(" + o + ")", o, o});
    p.identities[o] = "1(" + o + ")";
  }
  for (const auto& o : objects)
    p.compose.push_back({"1(" + o + ")", "1(" + o + ")", "1(" + o + ")"});
  return FinCategory::validate_ptr(p);
}

DiscreteComparison is_equivalent_to_discrete(const CatPtr& c) {
  DiscreteComparison out;
  const auto& pi0 = c->pi0();

  std::vector<std::string> class_names;
  class_names.reserve(pi0.classes.size());
  for (int rep : pi0.representative) class_names.push_back(c->object(rep));
  out.discrete = discrete_category(class_names);

  // gamma : C -> C_d collapses each component to its class.
  std::vector<int> gom(c->num_objects()), gam(c->num_arrows());
  for (int o = 0; o < c->num_objects(); ++o)
    gom[o] = out.discrete->object_index(class_names[pi0.class_of[o]]);
  for (int f = 0; f < c->num_arrows(); ++f)
    gam[f] = out.discrete->identity(gom[c->src(f)]);
  out.gamma = FinFunctor(c, out.discrete, std::move(gom), std::move(gam), false);

  // gamma' : C_d -> C picks the least representative; gamma.gamma' = id.
  std::vector<int> pom(out.discrete->num_objects()), pam(out.discrete->num_arrows());
  for (int d = 0; d < out.discrete->num_objects(); ++d) {
    int rep = c->object_index(out.discrete->object(d));
    pom[d] = rep;
    pam[out.discrete->identity(d)] = c->identity(rep);
  }
  out.gamma_prime =
      FinFunctor(out.discrete, c, std::move(pom), std::move(pam), false);

  // gamma is an equivalence iff every component is a chaotic groupoid:
  // each same-component hom-set must be a singleton.
  out.verdict.essentially_surjective = true;  // gamma is surjective on objects
  out.verdict.fully_faithful = true;
  for (int a = 0; a < c->num_objects() && out.verdict.fully_faithful; ++a)
    for (int b = 0; b < c->num_objects(); ++b) {
      if (pi0.class_of[a] != pi0.class_of[b]) continue;
      if (c->hom(a, b).size() != 1) {
        out.verdict.fully_faithful = false;
        out.verdict.ff_witness = {c->object(a), c->object(b)};
        break;
      }
    }
  return out;
}

std::vector<int> iso_class_of_object(const FinCategory& c, int obj) {
  std::vector<char> seen(c.num_objects(), 0);
  std::vector<int> out;
  std::queue<int> q;
  q.push(obj);
  seen[obj] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    out.push_back(x);
    for (int f = 0; f < c.num_arrows(); ++f) {
      if (!c.is_iso(f)) continue;
      int other = -1;
      if (c.src(f) == x) other = c.tgt(f);
      else if (c.tgt(f) == x) other = c.src(f);
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        q.push(other);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EquivalenceVerdict is_equivalence(const FinFunctor& F) {
  EquivalenceVerdict v;
  const auto& dom = *F.dom();
  const auto& cod = *F.cod();

  v.fully_faithful = true;
  // Injectivity per hom-set: two dom arrows with equal boundaries and image.
  {
    std::map<std::tuple<int, int, int>, int> seen;  // (src, tgt, image) -> arrow
    for (int f = 0; f < dom.num_arrows() && v.fully_faithful; ++f) {
      auto key = std::make_tuple(dom.src(f), dom.tgt(f), F.arr(f));
      auto [it, fresh] = seen.emplace(key, f);
      if (!fresh) {
        v.fully_faithful = false;
        v.ff_witness = {dom.object(dom.src(f)), dom.object(dom.tgt(f))};
      }
    }
  }
  // Fullness: every cod arrow between image objects has a preimage in every
  // hom-set sitting above it.
  if (v.fully_faithful) {
    std::vector<std::vector<int>> preimage(cod.num_objects());
    for (int o = 0; o < dom.num_objects(); ++o) preimage[F.obj(o)].push_back(o);
    for (int psi = 0; psi < cod.num_arrows() && v.fully_faithful; ++psi) {
      for (int a : preimage[cod.src(psi)]) {
        bool done = false;
        for (int b : preimage[cod.tgt(psi)]) {
          bool found = false;
          for (int f : dom.hom(a, b))
            if (F.arr(f) == psi) {
              found = true;
              break;
            }
          if (!found) {
            v.fully_faithful = false;
            v.ff_witness = {dom.object(a), dom.object(b)};
            done = true;
            break;
          }
        }
        if (done) break;
      }
    }
  }

  // Essential surjectivity via iso-closure of the object image.
  std::vector<char> reachable(cod.num_objects(), 0);
  for (int o = 0; o < dom.num_objects(); ++o) reachable[F.obj(o)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int f = 0; f < cod.num_arrows(); ++f) {
      if (!cod.is_iso(f)) continue;
      if (reachable[cod.src(f)] && !reachable[cod.tgt(f)]) {
        reachable[cod.tgt(f)] = 1;
        grew = true;
      }
      if (reachable[cod.tgt(f)] && !reachable[cod.src(f)]) {
        reachable[cod.src(f)] = 1;
        grew = true;
      }
    }
  }
  v.essentially_surjective = true;
  for (int o = 0; o < cod.num_objects(); ++o)
    if (!reachable[o]) {
      v.essentially_surjective = false;
      v.es_witness = cod.object(o);
      break;
    }
  return v;
}

PullbackResult pullback(const FinFunctor& F, const FinFunctor& G) {
  if (F.cod().get() != G.cod().get())
    throw ValidationError("PullbackCodomain", "functors do not share a codomain");
  const auto& A = *F.dom();
  const auto& B = *G.dom();
  PullbackResult out;

  // Bucket the B side by image so the scan is proportional to the output.
  const auto& Ccod = *F.cod();
  std::vector<std::vector<int>> b_obj_by_image(Ccod.num_objects());
  std::vector<std::vector<int>> b_arr_by_image(Ccod.num_arrows());
  for (int b = 0; b < B.num_objects(); ++b) b_obj_by_image[G.obj(b)].push_back(b);
  for (int g = 0; g < B.num_arrows(); ++g) b_arr_by_image[G.arr(g)].push_back(g);

  CategoryPresentation p;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b : b_obj_by_image[F.obj(a)]) {
      out.obj_lookup[{a, b}] = static_cast<int>(out.obj_components.size());
      out.obj_components.push_back({a, b});
      p.objects.push_back(pair_id(A.object(a), B.object(b)));
    }
  for (int f = 0; f < A.num_arrows(); ++f)
    for (int g : b_arr_by_image[F.arr(f)]) {
      out.arr_components.push_back({f, g});
      p.arrows.push_back({pair_id(A.arrow(f).id, B.arrow(g).id),
                          pair_id(A.object(A.src(f)), B.object(B.src(g))),
                          pair_id(A.object(A.tgt(f)), B.object(B.tgt(g)))});
    }
  for (const auto& [a, b] : out.obj_components)
    p.identities[pair_id(A.object(a), B.object(b))] =
        pair_id(A.arrow(A.identity(a)).id, B.arrow(B.identity(b)).id);
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_src_pair;
  for (const auto& fg : out.arr_components)
    by_src_pair[{A.src(fg.first), B.src(fg.second)}].push_back(fg);
  for (const auto& [f2, g2] : out.arr_components) {
    auto it = by_src_pair.find({A.tgt(f2), B.tgt(g2)});
    if (it == by_src_pair.end()) continue;
    for (const auto& [f1, g1] : it->second)
      p.compose.push_back({pair_id(A.arrow(f1).id, B.arrow(g1).id),
                           pair_id(A.arrow(f2).id, B.arrow(g2).id),
                           pair_id(A.arrow(A.compose(f1, f2)).id,
                                   B.arrow(B.compose(g1, g2)).id)});
  }
  out.apex = FinCategory::validate_ptr(p);

  // Rebuild component tables in the apex's sorted order.
  std::vector<std::pair<int, int>> objc(out.apex->num_objects());
  std::vector<std::pair<int, int>> arrc(out.apex->num_arrows());
  out.obj_lookup.clear();
  {
    size_t i = 0;
    for (int a = 0; a < A.num_objects(); ++a)
      for (int b = 0; b < B.num_objects(); ++b)
        if (F.obj(a) == G.obj(b)) {
          int idx = out.apex->object_index(pair_id(A.object(a), B.object(b)));
          objc[idx] = {a, b};
          out.obj_lookup[{a, b}] = idx;
          ++i;
        }
  }
  for (const auto& [f, g] : out.arr_components) {
    int idx = out.apex->arrow_index(pair_id(A.arrow(f).id, B.arrow(g).id));
    arrc[idx] = {f, g};
    out.arr_lookup[{f, g}] = idx;
  }
  out.obj_components = std::move(objc);
  out.arr_components = std::move(arrc);

  std::vector<int> p1o(out.apex->num_objects()), p1a(out.apex->num_arrows());
  std::vector<int> p2o(out.apex->num_objects()), p2a(out.apex->num_arrows());
  for (int i = 0; i < out.apex->num_objects(); ++i) {
    p1o[i] = out.obj_components[i].first;
    p2o[i] = out.obj_components[i].second;
  }
  for (int i = 0; i < out.apex->num_arrows(); ++i) {
    p1a[i] = out.arr_components[i].first;
    p2a[i] = out.arr_components[i].second;
  }
  out.proj1 = FinFunctor(out.apex, F.dom(), std::move(p1o), std::move(p1a), false);
  out.proj2 = FinFunctor(out.apex, G.dom(), std::move(p2o), std::move(p2a), false);
  return out;
}

std::optional<int> PullbackResult::find_obj(int a, int b) const {
  auto it = obj_lookup.find({a, b});
  if (it == obj_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<int> PullbackResult::find_arr(int f, int g) const {
  auto it = arr_lookup.find({f, g});
  if (it == arr_lookup.end()) return std::nullopt;
  return it->second;
}

}  // namespace wgdbl
