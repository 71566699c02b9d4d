#include "doctest.h"
#include "hopfint/errors.hpp"
#include "support.hpp"

using namespace hopfint;
using namespace hopfint::test;

namespace {

const SmashAlgebra& dqs_smash() { return load("dqs").smash; }

SmashElement sm(const SmashAlgebra& s, const std::string& text) {
  return parse_smash_element(s, text);
}

// Σ c f^i e_j from (coefficient, A label, H label) triples.
SmashElement normal(const SmashAlgebra& s,
                    std::vector<std::tuple<long, std::string, std::string>> terms) {
  SmashElement out = s.zero();
  for (const auto& [c, a, h] : terms) {
    out = out + RatFunc(c) * s.basis(*s.functions().index_of(a), *s.points().index_of(h));
  }
  return out;
}

}  // namespace

TEST_CASE("dqs cross relations") {
  const SmashAlgebra& s = dqs_smash();
  CHECK(render(s, sm(s, "x*a")) == "1 + a*x + b");
  CHECK(sm(s, "x*a") == normal(s, {{1, "1", "1"}, {1, "b", "1"}, {1, "a", "x"}}));
  CHECK(sm(s, "x*b") == normal(s, {{-1, "b", "x"}, {-2, "1", "x"}}));
  CHECK(sm(s, "y*a") == normal(s, {{1, "a", "y"}}));
  CHECK(sm(s, "y*b") == normal(s, {{1, "1", "1"}, {1, "b", "1"}, {-1, "b", "y"}, {-2, "1", "y"}}));
}

TEST_CASE("embedding products") {
  const SmashAlgebra& s = dqs_smash();
  const DualPair& p = load("dqs").pair;
  SmashElement x = s.embed(Factor::kPoints, el(p.points(), "x"));
  SmashElement a = s.embed(Factor::kFunctions, el(p.functions(), "a"));
  CHECK(render(s, s.mul(x, a)) == "1 + a*x + b");
  SmashElement y = s.embed(Factor::kPoints, el(p.points(), "y"));
  SmashElement b = s.embed(Factor::kFunctions, el(p.functions(), "b"));
  CHECK(render(s, s.mul(y, b)) == "1 - 2*y + b - b*y");
  CHECK(s.mul(a, x) == s.basis(1, 1));
  CHECK_THROWS_AS(s.mul(x, load("fermionic-line").smash.unit()), AlgebraMismatch);
}

TEST_CASE("fermionic cross sign") {
  std::string src = format(builtin("fermionic-line"));
  CHECK_NOTHROW(compile_text(src));
  std::string bad = src;
  auto at = bad.find("sigma*xi = 1 - xi*sigma");
  REQUIRE(at != std::string::npos);
  bad.replace(at, 24, "sigma*xi = 1 + xi*sigma");
  CHECK_THROWS_AS(compile_text(bad), AssociativityFailure);
}

TEST_CASE("smash associativity and vacuum pairing") {
  for (const Case& c : all_cases()) {
    CAPTURE(c.label());
    const Loaded& l = load(c);
    const SmashAlgebra& s = l.smash;
    CHECK(s.vacuum_pairing() == l.pair.pairing());
    if (s.dim() > 16) continue;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        for (std::size_t k = 0; k < s.dim(); ++k) {
          SmashElement u = s.from_sparse({{i, RatFunc(1)}});
          SmashElement v = s.from_sparse({{j, RatFunc(1)}});
          SmashElement w = s.from_sparse({{k, RatFunc(1)}});
          REQUIRE(s.mul(s.mul(u, v), w) == s.mul(u, s.mul(v, w)));
        }
      }
    }
  }
}

TEST_CASE("cross tensor from the pair") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const Loaded& l = load(c);
    CHECK(cross_from_pair(l.pair) == l.smash.cross());
    CHECK(SmashAlgebra::from_cross(l.pair.functions(), l.pair.points(), l.smash.cross())
              .vacuum_pairing() == l.pair.pairing());
  }
}
