#include <random>

#include "doctest.h"
#include "dqs_tables.hpp"
#include "hopfint/errors.hpp"
#include "support.hpp"

using namespace hopfint;
using namespace hopfint::test;

namespace {

const HopfAlgebra& dqs() { return load("dqs").compiled.primary.algebra; }
const HopfAlgebra& dqs_dual() { return load("dqs").compiled.dual->algebra; }

std::vector<RatFunc> ints(std::initializer_list<long> v) {
  std::vector<RatFunc> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool equal(const std::vector<std::vector<RatFunc>>& m, const IntMatrix& ref) {
  if (m.size() != ref.size()) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] != RatFunc(ref[i][j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("dqs products") {
  const HopfAlgebra& h = dqs();
  CHECK(h.labels() == std::vector<std::string>{"1", "x", "y", "x*y"});
  CHECK(mul_elem(h, el(h, "y"), el(h, "x")).coords == ints({0, 1, 0, -1}));
  CHECK(mul_elem(h, el(h, "x"), el(h, "x")).is_zero());
  CHECK(mul_elem(h, el(h, "y"), el(h, "y")) == el(h, "y"));
}

TEST_CASE("dqs coproduct counit antipode") {
  const HopfAlgebra& h = dqs();
  TensorElement dx = coproduct_elem(h, el(h, "x"));
  TensorElement want{4, 4, std::vector<RatFunc>(16)};
  want.at(1, 0) = Q(1);
  want.at(0, 1) = Q(1);
  want.at(2, 1) = Q(-2);
  CHECK(dx == want);

  TensorElement dxy = coproduct_elem(h, el(h, "x*y"));
  TensorElement want2{4, 4, std::vector<RatFunc>(16)};
  want2.at(3, 0) = Q(1);
  want2.at(0, 3) = Q(1);
  want2.at(1, 2) = Q(1);
  want2.at(2, 1) = Q(-1);
  want2.at(3, 2) = Q(-2);
  CHECK(dxy == want2);

  CHECK(counit_elem(h, el(h, "x")).is_zero());
  CHECK(counit_elem(h, el(h, "1 + 3*y")) == Q(1));
  CHECK(antipode_elem(h, el(h, "x"), 1).coords == ints({0, 1, 0, -2}));
  CHECK(antipode_elem(h, el(h, "x"), 2) == el(h, "-x"));
  CHECK(antipode_elem(h, el(h, "x"), -1) == el(h, "-x + 2*x*y"));
  CHECK_THROWS_AS(antipode_elem(h, el(h, "x"), 0), BadParam);

  const HopfAlgebra& a = dqs_dual();
  CHECK(antipode_elem(a, el(a, "a"), 1) == el(a, "a + a*b"));
}

TEST_CASE("dqs slices") {
  auto ms = m_slices(dqs());
  for (std::size_t i = 0; i < 4; ++i) CHECK(equal(ms[i], kDqsM[i]));
  auto ws = w_slices(dqs());
  IntMatrix w2 = kDqsWReference[2];
  w2[3][1] = -1;
  CHECK(equal(ws[0], kDqsWReference[0]));
  CHECK(equal(ws[1], kDqsWReference[1]));
  CHECK(equal(ws[2], w2));
  CHECK(equal(ws[3], kDqsWReference[3]));
}

TEST_CASE("zero W2 cell breaks the antipode law") {
  HopfAlgebraData d = dqs().data();
  d.set_comult(3, 2, 1, RatFunc(0));
  AxiomReport rep = check_hopf_axioms(d);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.find("antipode-law")->passed);
}

TEST_CASE("every builtin passes its axioms") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const Compiled& cc = load(c).compiled;
    CHECK(check_hopf_axioms(cc.primary.algebra.data()).ok());
    if (cc.dual) CHECK(check_hopf_axioms(cc.dual->algebra.data()).ok());
  }
}

TEST_CASE("broken data is rejected") {
  HopfAlgebraData d = dqs().data();
  d.set_mult(2, 1, 3, RatFunc(0));
  CHECK_THROWS_AS(HopfAlgebra::build(d), AxiomViolation);
  try {
    HopfAlgebra::build(d);
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "associativity");
  }
  HopfAlgebraData s = dqs().data();
  s.set_antipode(1, 3, RatFunc(0));
  CHECK_THROWS_AS(HopfAlgebra::build(s), AxiomViolation);
}

TEST_CASE("random element identities") {
  std::mt19937 rng(11);
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const HopfAlgebra& h = load(c).compiled.primary.algebra;
    for (int t = 0; t < 5; ++t) {
      Element u = random_element(h, rng), v = random_element(h, rng),
              w = random_element(h, rng);
      CHECK(mul_elem(h, mul_elem(h, u, v), w) == mul_elem(h, u, mul_elem(h, v, w)));
      CHECK(counit_elem(h, mul_elem(h, u, v)) == counit_elem(h, u) * counit_elem(h, v));
      CHECK(antipode_elem(h, mul_elem(h, u, v), 1) ==
            mul_elem(h, antipode_elem(h, v, 1), antipode_elem(h, u, 1)));
      CHECK(antipode_elem(h, antipode_elem(h, u, 1), -1) == u);

      // Δ(uv) = Δ(u)Δ(v)
      TensorElement du = coproduct_elem(h, u), dv = coproduct_elem(h, v);
      TensorElement prod{h.dim(), h.dim(), std::vector<RatFunc>(h.dim() * h.dim())};
      for (std::size_t a = 0; a < h.dim(); ++a) {
        for (std::size_t b = 0; b < h.dim(); ++b) {
          if (du.at(a, b).is_zero()) continue;
          for (std::size_t cc = 0; cc < h.dim(); ++cc) {
            for (std::size_t d = 0; d < h.dim(); ++d) {
              if (dv.at(cc, d).is_zero()) continue;
              RatFunc f = du.at(a, b) * dv.at(cc, d);
              for (const auto& [l, x] : h.product(a, cc)) {
                for (const auto& [r, y] : h.product(b, d)) prod.at(l, r) += f * x * y;
              }
            }
          }
        }
      }
      CHECK(coproduct_elem(h, mul_elem(h, u, v)) == prod);

      // m(S⊗id)Δ(u) = ε(u)1
      Element acc = zero_element(h);
      for (std::size_t a = 0; a < h.dim(); ++a) {
        for (std::size_t b = 0; b < h.dim(); ++b) {
          if (du.at(a, b).is_zero()) continue;
          acc = acc + du.at(a, b) * mul_elem(h, antipode_elem(h, basis_element(h, a), 1),
                                             basis_element(h, b));
        }
      }
      CHECK(acc == counit_elem(h, u) * unit_element(h));
    }
  }
}

TEST_CASE("element guards") {
  const HopfAlgebra& h = dqs();
  const HopfAlgebra& a = dqs_dual();
  CHECK_THROWS_AS(mul_elem(h, el(h, "x"), el(a, "a")), AlgebraMismatch);
  CHECK_THROWS_AS(make_element(h, ints({1, 2})), ShapeMismatch);
}
