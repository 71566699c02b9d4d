#include "doctest.h"
#include "hopfint/errors.hpp"
#include "support.hpp"

using namespace hopfint;
using namespace hopfint::test;

namespace {

const DualPair& dqs_pair() { return *load("dqs").compiled.pair; }

}  // namespace

TEST_CASE("transposed dual of dqs") {
  const HopfAlgebra& h = load("dqs").compiled.primary.algebra;
  DualPair p = dualize(h, {"1", "a", "b", "a*b"});
  const HopfAlgebra& a = p.functions();
  const HopfAlgebra& ref = load("dqs").compiled.dual->algebra;
  CHECK(a.mult() == ref.mult());
  CHECK(a.comult() == ref.comult());
  CHECK(a.antipode() == ref.antipode());
  CHECK(p.pairing() == Matrix::identity(4));

  std::string text = emit(a, "dqs-dual");
  CHECK(text.find("  a*a = 0\n") != std::string::npos);
  CHECK(text.find("  b*b = -2*b\n") != std::string::npos);
  CHECK(text.find("  b*a = -2*a - a*b\n") != std::string::npos);
  CHECK(text.find("  a -> 1(*)a + a(*)1 + b(*)a\n") != std::string::npos);
}

TEST_CASE("pairing values") {
  const DualPair& p = dqs_pair();
  const HopfAlgebra& h = p.points();
  const HopfAlgebra& a = p.functions();
  CHECK(pair_eval(p, el(h, "x"), el(a, "a")) == Q(1));
  CHECK(pair_eval(p, el(h, "x"), el(a, "1")) == Q(0));
  CHECK(pair_eval(p, antipode_elem(h, el(h, "x"), 1), el(a, "a")) == Q(1));
  CHECK(pair_eval(p, el(h, "x"), antipode_elem(a, el(a, "a"), 1)) == Q(1));
  CHECK(p.dual_basis(3) == el(a, "a*b"));
}

TEST_CASE("actions") {
  const DualPair& p = dqs_pair();
  const HopfAlgebra& h = p.points();
  const HopfAlgebra& a = p.functions();
  CHECK(act_left(p, el(h, "x"), el(a, "a")) == el(a, "1 + b"));
  CHECK(act_right(p, el(h, "x"), el(a, "1")) == el(h, "x"));
  CHECK(act_right(p, el(h, "x"), el(a, "a")) == el(h, "1"));
  CHECK(act_right(p, el(h, "y"), el(a, "b")) == el(h, "1 - 2*y"));
}

TEST_CASE("pair laws on every builtin") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const DualPair& p = load(c).pair;
    CHECK(check_pairing(p.functions(), p.points(), p.pairing()).ok());
    CHECK(p.fully_checked());
  }
}

TEST_CASE("double dual") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const HopfAlgebra& h = load(c).compiled.primary.algebra;
    DualPair p = dualize(h);
    DualPair pp = dualize(p.functions(), h.labels());
    const HopfAlgebra& back = pp.functions();
    CHECK(back.mult() == h.mult());
    CHECK(back.comult() == h.comult());
    CHECK(back.antipode() == h.antipode());
    CHECK(back.counit() == h.counit());
    CHECK(back.unit() == h.unit());
  }
}

TEST_CASE("swapped pair") {
  const DualPair& p = dqs_pair();
  DualPair s = p.swapped();
  CHECK(s.functions().id() == p.points().id());
  CHECK(s.pairing() == p.pairing().transpose());
  CHECK(check_pairing(s.functions(), s.points(), s.pairing()).ok());
}

TEST_CASE("degenerate or incompatible pairings") {
  const DualPair& p = dqs_pair();
  CHECK_THROWS_AS(DualPair::make(p.functions(), p.points(), Matrix(4, 4)), AxiomViolation);
  Matrix m = p.pairing();
  m(1, 2) = Q(1);
  CHECK_THROWS_AS(DualPair::make(p.functions(), p.points(), m), AxiomViolation);
  CHECK_THROWS_AS(DualPair::make(p.functions(), p.points(), Matrix(3, 4)), ShapeMismatch);
}
