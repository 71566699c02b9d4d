#include "doctest.h"
#include "hopfint/errors.hpp"
#include "support.hpp"

using namespace hopfint;
using namespace hopfint::test;

namespace {

const Case kDqs{"dqs", 0};
const Case kLine{"fermionic-line", 0};

std::vector<RatFunc> functional(const Case& c, Side side) {
  const Loaded& l = load(c);
  std::vector<RatFunc> v;
  for (std::size_t i = 0; i < l.pair.functions().dim(); ++i) {
    v.push_back(vacuum_integral_A(l.smash, projectors(c),
                                  basis_element(l.pair.functions(), i), side)
                    .value);
  }
  return v;
}

RatFunc evaluate(const std::vector<RatFunc>& f, const Element& a) {
  RatFunc s;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * a.coords[i];
  return s;
}

}  // namespace

TEST_CASE("trace formula vanishes on dqs") {
  const DualPair& p = load(kDqs).pair;
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(trace_integral(p, Factor::kFunctions, basis_element(p.functions(), k)).is_zero());
  }
}

TEST_CASE("trace formula on cyclic groups") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const DualPair& p = load("cyclic-group", n).pair;
    CHECK(trace_integral(p, Factor::kFunctions, unit_element(p.functions())) == Q(n));
    for (std::size_t k = 0; k < p.functions().dim(); ++k) {
      CHECK(trace_integral(p, Factor::kFunctions, basis_element(p.functions(), k)) == Q(1));
    }
    // Summing M_ij^j over j counts the group: n at the identity.
    for (std::size_t i = 0; i < p.points().dim(); ++i) {
      CHECK(trace_integral(p, Factor::kPoints, basis_element(p.points(), i)) ==
            Q(i == 0 ? n : 0));
    }
  }
}

TEST_CASE("modified trace and delta on dqs") {
  const DualPair& p = load(kDqs).pair;
  const HopfAlgebra& a = p.functions();
  CHECK(modified_trace(p, el(a, "a")) == el(a, "-a*b"));
  CHECK(modified_trace(p, el(a, "a*b")) == el(a, "a*b"));
  CHECK(modified_trace(p, el(a, "1")).is_zero());
  CHECK(modified_trace(p, el(a, "b")).is_zero());
  CHECK(normalize_delta(p) == el(a, "a*b"));
  CHECK(coefficient_on(el(a, "a*b"), el(a, "-3*a*b")) == Q(-3));
  CHECK_THROWS_AS(coefficient_on(el(a, "a*b"), el(a, "a")), DegenerateImage);
}

TEST_CASE("dqs integrals") {
  const DualPair& p = load(kDqs).pair;
  const HopfAlgebra& a = p.functions();
  CHECK(functional(kDqs, Side::kRight) == std::vector<RatFunc>{Q(0), Q(-1), Q(0), Q(1)});
  CHECK(functional(kDqs, Side::kLeft) == std::vector<RatFunc>{Q(0), Q(0), Q(0), Q(-1)});
  IntegralResult r = invariant_integral(p, el(a, "a"));
  CHECK(r.value == Q(-1));
  CHECK(r.delta == el(a, "a*b"));
  CHECK(r.convention == kDeltaConvention);
  CHECK(invariant_integral(p, el(a, "a*b"), Side::kLeft).value == Q(-1));
}

TEST_CASE("dqs projectors") {
  const SmashAlgebra& s = load(kDqs).smash;
  const ProjectorPair& pp = projectors(kDqs);
  CHECK(pp.E == parse_smash_element(s, "1 - a*x*(1 - 2*y) + b*y - a*b*x*(1 - y)"));
  CHECK(pp.Ebar == parse_smash_element(s, "1 - x*a + y*b - x*y*a*b"));
  CHECK(render(s, pp.Ebar) == "a*b*x - a*b*x*y");
  CHECK(projector_violations(s, pp).empty());
  ProjectorPair cf = closed_form_projectors(s);
  CHECK(cf.E == pp.E);
  CHECK(cf.Ebar == pp.Ebar);
}

TEST_CASE("dqs vacuum realizations") {
  const Loaded& l = load(kDqs);
  const SmashAlgebra& s = l.smash;
  const HopfAlgebra& a = l.pair.functions();
  const HopfAlgebra& h = l.pair.points();
  IntegralResult r = vacuum_integral_A(s, projectors(kDqs), el(a, "a"));
  CHECK(r.value == Q(-1));
  CHECK(*r.realization == parse_smash_element(s, "-a*b*(1 - 2*y)"));
  CHECK(vacuum_delta(s, projectors(kDqs)) == el(a, "a*b"));
  CHECK(vacuum_integral_A(s, projectors(kDqs), el(a, "1")).realization->is_zero());

  IntegralResult z = vacuum_integral_H(s, projectors(kDqs), el(h, "x*y"));
  CHECK(*z.realization == parse_smash_element(s, "-(1 + b)*x*(1 - y)"));
  CHECK(z.value == Q(1));
  for (const char* w : {"1", "x", "y"}) {
    IntegralResult zero = vacuum_integral_H(s, projectors(kDqs), el(h, w));
    CHECK(zero.value.is_zero());
    CHECK(zero.realization->is_zero());
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Element zi = basis_element(h, i);
    CHECK(vacuum_integral_H(s, projectors(kDqs), zi).value ==
          pair_eval(l.pair, zi, el(a, "a*b")));
  }
}

TEST_CASE("fermionic line") {
  const Loaded& l = load(kLine);
  const SmashAlgebra& s = l.smash;
  const ProjectorPair& pp = projectors(kLine);
  CHECK(pp.E == parse_smash_element(s, "sigma*xi"));
  CHECK(pp.Ebar == parse_smash_element(s, "xi*sigma"));
  CHECK(s.mul(pp.Ebar, pp.E).is_zero());
  const HopfAlgebra& a = l.pair.functions();
  IntegralResult r = vacuum_integral_A(s, pp, el(a, "xi"));
  CHECK(r.value == Q(1));
  CHECK(*r.realization == parse_smash_element(s, "xi"));
  CHECK(r.delta == el(a, "xi"));
  CHECK(vacuum_integral_A(s, pp, el(a, "1")).value.is_zero());
  const HopfAlgebra& h = l.pair.points();
  CHECK_FALSE(vacuum_integral_H(s, pp, el(h, "sigma")).realization->is_zero());
  CHECK(vacuum_integral_H(s, pp, el(h, "1")).realization->is_zero());
}

TEST_CASE("theta is nonzero") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    CHECK_FALSE(theta_matrix(load(c).pair).is_zero());
  }
}

TEST_CASE("invariance") {
  for (const Case& c : all_cases()) {
    CAPTURE(c.label());
    const HopfAlgebra& a = load(c).pair.functions();
    const std::size_t n = a.dim();
    auto right = functional(c, Side::kRight);
    auto left = functional(c, Side::kLeft);
    for (std::size_t i = 0; i < n; ++i) {
      TensorElement d = coproduct_elem(a, basis_element(a, i));
      std::vector<RatFunc> r(n), l(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          r[k] += right[j] * d.at(j, k);
          l[j] += d.at(j, k) * left[k];
        }
      }
      Element want_r = right[i] * unit_element(a);
      Element want_l = left[i] * unit_element(a);
      CHECK(make_element(a, r) == want_r);
      CHECK(make_element(a, l) == want_l);
    }
  }
}

TEST_CASE("translation invariance under the action") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const DualPair& p = load(c).pair;
    auto right = functional(c, Side::kRight);
    for (std::size_t x = 0; x < p.points().dim(); ++x) {
      for (std::size_t i = 0; i < p.functions().dim(); ++i) {
        Element xa = act_left(p, basis_element(p.points(), x), basis_element(p.functions(), i));
        CHECK(evaluate(right, xa) == p.points().eps(x) * right[i]);
      }
    }
  }
}

TEST_CASE("trace route agrees with the projector route") {
  for (const Case& c : unbraided_cases()) {
    CAPTURE(c.label());
    const DualPair& p = load(c).pair;
    for (Side side : {Side::kRight, Side::kLeft}) {
      auto vac = functional(c, side);
      for (std::size_t i = 0; i < p.functions().dim(); ++i) {
        CHECK(invariant_integral(p, basis_element(p.functions(), i), side).value == vac[i]);
      }
    }
  }
}

TEST_CASE("projector conditions on every builtin") {
  for (const Case& c : all_cases()) {
    CAPTURE(c.label());
    CHECK(projector_violations(load(c).smash, projectors(c)).empty());
  }
}
