#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfint/braided.hpp"
#include "hopfint/integrals.hpp"
#include "hopfint/presentation.hpp"

namespace hopfint::test {

inline RatFunc Q(long n, long d = 1) { return RatFunc(Rational(n, d)); }
inline RatFunc qq() { return RatFunc::q(); }

struct Case {
  std::string name;
  int param = 0;
  std::string label() const {
    return param ? name + ":" + std::to_string(param) : name;
  }
};

inline std::vector<Case> unbraided_cases() {
  return {{"cyclic-group", 2}, {"cyclic-group", 3}, {"cyclic-group", 4},
          {"cyclic-group", 5}, {"cyclic-group", 6}, {"dqs", 0}, {"dqs-dual", 0}};
}

inline std::vector<Case> braided_cases() {
  return {{"fermionic-line", 0}, {"q-plane", 1}, {"q-plane", 2}, {"q-plane", 3}};
}

inline std::vector<Case> all_cases() {
  auto v = unbraided_cases();
  for (auto& c : braided_cases()) v.push_back(c);
  return v;
}

// Compiled builtin with its pair and smash product; a lone algebra is the
// points side of its transposed dual.
struct Loaded {
  Compiled compiled;
  DualPair pair;
  SmashAlgebra smash;
};

inline const Loaded& load(const std::string& name, int param = 0) {
  static std::map<std::pair<std::string, int>, Loaded> cache;
  auto key = std::make_pair(name, param);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Loaded l;
  l.compiled = compile(builtin(name, param));
  l.pair = l.compiled.pair ? *l.compiled.pair : dualize(l.compiled.primary.algebra);
  l.smash = l.compiled.smash ? *l.compiled.smash : SmashAlgebra::from_pair(l.pair);
  return cache.emplace(key, std::move(l)).first->second;
}

inline const Loaded& load(const Case& c) { return load(c.name, c.param); }

inline const ProjectorPair& projectors(const Case& c) {
  static std::map<std::string, ProjectorPair> cache;
  auto it = cache.find(c.label());
  if (it != cache.end()) return it->second;
  return cache.emplace(c.label(), solve_vacuum_projectors(load(c).smash)).first->second;
}

inline Element el(const HopfAlgebra& h, const std::string& text) {
  return parse_element(h, text);
}

inline Element random_element(const HopfAlgebra& h, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<int> k(-1, 2);
  std::vector<RatFunc> coords;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    RatFunc v = Q(c(rng));
    if (i % 2) v *= RatFunc::q_pow(k(rng));
    coords.push_back(v);
  }
  return make_element(h, coords);
}

}  // namespace hopfint::test
