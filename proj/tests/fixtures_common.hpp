#pragma once

#include <string>
#include <vector>

#include "wgdbl/fincat.hpp"

// Shared fixture builders. Composition tables are written out in full;
// nothing is inferred by the validator.
namespace fixtures {

using wgdbl::CategoryPresentation;
using wgdbl::CatPtr;
using wgdbl::FinCategory;

// Free category on one arrow f : a -> b.
inline CategoryPresentation fix_arrow_raw() {
  CategoryPresentation p;
  p.objects = {"a", "b"};
  p.arrows = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"f", "a", "b"}};
  p.identities = {{"a", "1a"}, {"b", "1b"}};
  p.compose = {{"1a", "1a", "1a"}, {"1b", "1b", "1b"},
               {"f", "1a", "f"},  {"1b", "f", "f"}};
  return p;
}
inline CatPtr fix_arrow() { return FinCategory::validate_ptr(fix_arrow_raw()); }

// Walking isomorphism f : a -> b, g = f^{-1}.
inline CategoryPresentation fix_iso_raw() {
  CategoryPresentation p;
  p.objects = {"a", "b"};
  p.arrows = {{"1a", "a", "a"}, {"1b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}};
  p.identities = {{"a", "1a"}, {"b", "1b"}};
  p.compose = {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"f", "1a", "f"},
               {"1b", "f", "f"},   {"g", "1b", "g"},   {"1a", "g", "g"},
               {"g", "f", "1a"},   {"f", "g", "1b"}};
  return p;
}
inline CatPtr fix_iso() { return FinCategory::validate_ptr(fix_iso_raw()); }

// Split retraction: f : a -> b, g : b -> a with g.f = 1a and e = f.g
// idempotent. The walking-iso shape without the second inverse law.
inline CategoryPresentation fix_retract_raw() {
  CategoryPresentation p;
  p.objects = {"a", "b"};
  p.arrows = {{"1a", "a", "a"},
              {"1b", "b", "b"},
              {"f", "a", "b"},
              {"g", "b", "a"},
              {"e", "b", "b"}};
  p.identities = {{"a", "1a"}, {"b", "1b"}};
  p.compose = {{"1a", "1a", "1a"}, {"1b", "1b", "1b"}, {"f", "1a", "f"},
               {"1b", "f", "f"},   {"g", "1b", "g"},   {"1a", "g", "g"},
               {"g", "f", "1a"},   {"f", "g", "e"},    {"e", "1b", "e"},
               {"1b", "e", "e"},   {"e", "e", "e"},    {"e", "f", "f"},
               {"g", "e", "g"}};
  return p;
}
inline CatPtr fix_retract() { return FinCategory::validate_ptr(fix_retract_raw()); }

// The poset bot <= x <= top, bot <= y <= top as a category (9 arrows).
inline CategoryPresentation fix_posb_raw() {
  CategoryPresentation p;
  p.objects = {"bot", "x", "y", "top"};
  p.arrows = {{"1bot", "bot", "bot"}, {"1x", "x", "x"},     {"1y", "y", "y"},
              {"1top", "top", "top"}, {"bx", "bot", "x"},   {"by", "bot", "y"},
              {"bt", "bot", "top"},   {"xt", "x", "top"},   {"yt", "y", "top"}};
  p.identities = {{"bot", "1bot"}, {"x", "1x"}, {"y", "1y"}, {"top", "1top"}};
  auto le = [](const std::string& u, const std::string& v) {
    if (u == v) return true;
    if (u == "bot") return true;
    if (v == "top") return true;
    return false;
  };
  std::vector<std::string> objs = {"bot", "x", "y", "top"};
  auto arrow_of = [&](const std::string& u, const std::string& v) -> std::string {
    if (u == v) return "1" + u;
    if (u == "bot" && v == "x") return "bx";
    if (u == "bot" && v == "y") return "by";
    if (u == "bot" && v == "top") return "bt";
    if (u == "x" && v == "top") return "xt";
    return "yt";
  };
  for (const auto& w : objs)
    for (const auto& v : objs)
      for (const auto& u : objs)
        if (le(u, v) && le(v, w))
          p.compose.push_back({arrow_of(v, w), arrow_of(u, v), arrow_of(u, w)});
  // duplicates collapse to the same value; keep the list unique
  std::sort(p.compose.begin(), p.compose.end());
  p.compose.erase(std::unique(p.compose.begin(), p.compose.end()), p.compose.end());
  return p;
}
inline CatPtr fix_posb() { return FinCategory::validate_ptr(fix_posb_raw()); }

// One-object group Z/n with arrows r0 (= identity), r1, ..., r_{n-1}.
inline CategoryPresentation zmod_raw(int n) {
  CategoryPresentation p;
  p.objects = {"e"};
  for (int i = 0; i < n; ++i)
    p.arrows.push_back({"r" + std::to_string(i), "e", "e"});
  p.identities = {{"e", "r0"}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p.compose.push_back({"r" + std::to_string(i), "r" + std::to_string(j),
                           "r" + std::to_string((i + j) % n)});
  return p;
}
inline CatPtr zmod(int n) { return FinCategory::validate_ptr(zmod_raw(n)); }

// Chaotic groupoid on n objects o0..o_{n-1} (exactly one arrow each way).
inline CategoryPresentation chaotic_raw(int n) {
  CategoryPresentation p;
  auto obj = [](int i) { return "o" + std::to_string(i); };
  auto arr = [](int i, int j) {
    return "a" + std::to_string(i) + std::to_string(j);
  };
  for (int i = 0; i < n; ++i) p.objects.push_back(obj(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.arrows.push_back({arr(i, j), obj(i), obj(j)});
  for (int i = 0; i < n; ++i) p.identities[obj(i)] = arr(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        p.compose.push_back({arr(j, k), arr(i, j), arr(i, k)});
  return p;
}
inline CatPtr chaotic(int n) { return FinCategory::validate_ptr(chaotic_raw(n)); }

inline CatPtr discrete_n(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back("d" + std::to_string(i));
  return wgdbl::discrete_category(objs);
}

inline CatPtr terminal() { return discrete_n(1); }

}  // namespace fixtures
