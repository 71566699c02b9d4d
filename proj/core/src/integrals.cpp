#include "hopfint/integrals.hpp"

#include <functional>

#include "hopfint/errors.hpp"

namespace hopfint {

namespace {

Element s2(const HopfAlgebra& h, std::size_t i) {
  return antipode_elem(h, basis_element(h, i), 2);
}

// Last nonzero coordinate, or npos.
std::size_t last_nonzero(const std::vector<RatFunc>& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (!v[i].is_zero()) return i;
  }
  return static_cast<std::size_t>(-1);
}

std::size_t first_nonzero(const std::vector<RatFunc>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return static_cast<std::size_t>(-1);
}

// λ with v = λ·k, or nullopt when v is not on the line through k.
std::optional<RatFunc> ratio(const std::vector<RatFunc>& k,
                             const std::vector<RatFunc>& v) {
  std::size_t p = first_nonzero(k);
  if (p == static_cast<std::size_t>(-1)) return std::nullopt;
  RatFunc lambda = v[p] / k[p];
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (v[i] != lambda * k[i]) return std::nullopt;
  }
  return lambda;
}

std::size_t span_rank(const std::vector<std::vector<RatFunc>>& vs,
                      std::size_t dim) {
  RowEchelon ech(dim);
  for (const auto& v : vs) ech.add_row(sparse_from_dense(v));
  return ech.rank();
}

const Matrix& pairing_of(const SmashAlgebra& s, Matrix& storage) {
  if (s.pair()) return s.pair()->pairing();
  storage = s.vacuum_pairing();
  return storage;
}

SmashElement embed_basis(const SmashAlgebra& s, Factor f, std::size_t i) {
  return s.embed(f, basis_element(
                        f == Factor::kFunctions ? s.functions() : s.points(), i));
}

// Conditions on an unknown c ∈ A⋊H, one linear map per basis element.
using Condition = std::function<SmashElement(const SmashElement&)>;

// The one-dimensional solution of the conditions, unnormalized.
SmashElement solve_conditions(const SmashAlgebra& s,
                              const std::vector<Condition>& conds,
                              const char* which) {
  const std::size_t n = s.dim();
  RowEchelon ech(n);
  std::size_t used = 0;
  std::optional<SmashElement> candidate;
  while (used < conds.size()) {
    const Condition& c = conds[used++];
    LinearMap m(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      m.set_col(p, sparse_from_dense(c(s.basis(p / s.points().dim(),
                                               p % s.points().dim()))
                                         .coeff));
    }
    LinearMap rows = m.transpose();
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows.col(r).empty()) ech.add_row(rows.col(r));
    }
    if (ech.rank() == n) throw DegenerateSolutionSpace(std::string(which) + ": 0");
    if (ech.rank() + 1 != n) continue;
    SmashElement e = s.zero();
    e.coeff = ech.nullspace().front();
    bool all = true;
    for (std::size_t k = used; k < conds.size() && all; ++k) {
      all = conds[k](e).is_zero();
    }
    if (all) {
      candidate = e;
      break;
    }
  }
  if (!candidate) {
    throw DegenerateSolutionSpace(std::string(which) + ": " +
                                  std::to_string(n - ech.rank()));
  }
  SmashElement sq = s.mul(*candidate, *candidate);
  auto lambda = ratio(candidate->coeff, sq.coeff);
  if (!lambda) throw ConsistencyFailure(std::string(which) + "^2 off the line");
  if (lambda->is_zero()) throw NilpotentCandidate(which);
  return lambda->inverse() * *candidate;
}

}  // namespace

RatFunc trace_integral(const DualPair& p, Factor side, const Element& u) {
  if (side == Factor::kPoints) {
    return trace_integral(p.swapped(), Factor::kFunctions, u);
  }
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  if (u.algebra_id != A.id()) throw AlgebraMismatch("trace integrand");
  RatFunc r;
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Element fu = mul_elem(A, p.dual_basis(i), u);
    if (fu.is_zero()) continue;
    r += pair_eval(p, s2(H, i), fu);
  }
  return r;
}

Element modified_trace(const DualPair& p, const Element& a) {
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  if (a.algebra_id != A.id()) throw AlgebraMismatch("modified trace argument");
  const std::size_t n = H.dim();
  std::vector<Element> fa(n);
  std::vector<Element> s2e(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = mul_elem(A, p.dual_basis(i), a);
    s2e[i] = s2(H, i);
  }
  Element t = zero_element(A);
  for (std::size_t m = 0; m < n; ++m) {
    RatFunc c;
    for (std::size_t i = 0; i < n; ++i) {
      if (fa[i].is_zero()) continue;
      c += pair_eval(p, mul_elem(H, basis_element(H, m), s2e[i]), fa[i]);
    }
    if (!c.is_zero()) t = t + c * p.dual_basis(m);
  }
  return t;
}

Element delta_from_images(const HopfAlgebra& a,
                          const std::vector<Element>& images) {
  std::vector<std::vector<RatFunc>> vs;
  for (const Element& e : images) {
    require_member(a, e);
    vs.push_back(e.coords);
  }
  std::size_t r = span_rank(vs, a.dim());
  if (r != 1) throw DegenerateImage(std::to_string(r));
  for (const Element& e : images) {
    if (e.is_zero()) continue;
    std::size_t k = last_nonzero(e.coords);
    return e.coords[k].inverse() * e;
  }
  throw DegenerateImage("0");
}

RatFunc coefficient_on(const Element& delta, const Element& v) {
  if (delta.algebra_id != v.algebra_id) throw AlgebraMismatch("delta");
  auto l = ratio(delta.coords, v.coords);
  if (!l) throw DegenerateImage("element off the delta line");
  return *l;
}

Element normalize_delta(const DualPair& p) {
  const HopfAlgebra& A = p.functions();
  std::vector<Element> images(A.dim());
  parallel_for(A.dim(), [&](std::size_t i) {
    images[i] = modified_trace(p, basis_element(A, i));
  });
  return delta_from_images(A, images);
}

IntegralResult invariant_integral(const DualPair& p, const Element& a,
                                  Side side) {
  const HopfAlgebra& A = p.functions();
  if (a.algebra_id != A.id()) throw AlgebraMismatch("integrand");
  Element delta = normalize_delta(p);
  Element arg = side == Side::kRight ? a : antipode_elem(A, a, -1);
  RatFunc scale = coefficient_on(delta, modified_trace(p, delta));
  if (scale.is_zero()) throw DegenerateImage("T(delta) = 0");
  RatFunc value = coefficient_on(delta, modified_trace(p, arg)) / scale;
  return {value, delta, std::nullopt, kDeltaConvention};
}

ProjectorPair solve_vacuum_projectors(const SmashAlgebra& s) {
  const HopfAlgebra& A = s.functions();
  const HopfAlgebra& H = s.points();
  std::vector<Condition> ce, cb;
  for (std::size_t x = 0; x < H.dim(); ++x) {
    SmashElement ex = embed_basis(s, Factor::kPoints, x);
    RatFunc e = H.eps(x);
    ce.push_back([&s, ex, e](const SmashElement& c) {
      return s.mul(ex, c) - e * c;
    });
  }
  for (std::size_t a = 0; a < A.dim(); ++a) {
    SmashElement ea = embed_basis(s, Factor::kFunctions, a);
    RatFunc e = A.eps(a);
    ce.push_back([&s, ea, e](const SmashElement& c) {
      return s.mul(c, ea) - e * c;
    });
    cb.push_back([&s, ea, e](const SmashElement& c) {
      return s.mul(ea, c) - e * c;
    });
  }
  for (std::size_t x = 0; x < H.dim(); ++x) {
    SmashElement ex = embed_basis(s, Factor::kPoints, x);
    RatFunc e = H.eps(x);
    cb.push_back([&s, ex, e](const SmashElement& c) {
      return s.mul(c, ex) - e * c;
    });
  }
  ProjectorPair proj{solve_conditions(s, ce, "E"), solve_conditions(s, cb, "Ebar")};
  if (s.pair() && s.pair()->fully_checked()) {
    ProjectorPair closed = closed_form_projectors(s);
    if (closed.E != proj.E) throw ConsistencyFailure("closed-form E");
    if (closed.Ebar != proj.Ebar) throw ConsistencyFailure("closed-form Ebar");
  }
  return proj;
}

ProjectorPair closed_form_projectors(const SmashAlgebra& s) {
  if (!s.pair()) throw ConsistencyFailure("smash algebra without a pair");
  const DualPair& p = *s.pair();
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  ProjectorPair r{s.zero(), s.zero()};
  for (std::size_t i = 0; i < H.dim(); ++i) {
    Element f = p.dual_basis(i);
    r.E = r.E + s.mul(s.embed(Factor::kFunctions, antipode_elem(A, f, -1)),
                      embed_basis(s, Factor::kPoints, i));
    r.Ebar = r.Ebar + s.mul(s.embed(Factor::kPoints, s2(H, i)),
                            s.embed(Factor::kFunctions, f));
  }
  return r;
}

std::vector<std::string> projector_violations(const SmashAlgebra& s,
                                              const ProjectorPair& proj) {
  std::vector<std::string> out;
  const HopfAlgebra& A = s.functions();
  const HopfAlgebra& H = s.points();
  const SmashElement& E = proj.E;
  const SmashElement& Eb = proj.Ebar;
  for (std::size_t x = 0; x < H.dim(); ++x) {
    SmashElement ex = embed_basis(s, Factor::kPoints, x);
    if (s.mul(ex, E) != H.eps(x) * E) out.push_back(H.label(x) + "*E");
    if (s.mul(Eb, ex) != H.eps(x) * Eb) out.push_back("Ebar*" + H.label(x));
  }
  for (std::size_t a = 0; a < A.dim(); ++a) {
    SmashElement ea = embed_basis(s, Factor::kFunctions, a);
    if (s.mul(E, ea) != A.eps(a) * E) out.push_back("E*" + A.label(a));
    if (s.mul(ea, Eb) != A.eps(a) * Eb) out.push_back(A.label(a) + "*Ebar");
  }
  if (s.mul(E, E) != E) out.push_back("E^2");
  if (s.mul(Eb, Eb) != Eb) out.push_back("Ebar^2");
  return out;
}

Element vacuum_delta(const SmashAlgebra& s, const ProjectorPair& proj) {
  const HopfAlgebra& A = s.functions();
  const std::size_t na = A.dim();
  // Columns embed(b_i)·E; Ē b_k E = t(b_k)·E.
  Matrix cols(s.dim(), na);
  for (std::size_t i = 0; i < na; ++i) {
    SmashElement c = s.mul(embed_basis(s, Factor::kFunctions, i), proj.E);
    for (std::size_t r = 0; r < s.dim(); ++r) cols(r, i) = c.coeff[r];
  }
  std::vector<Element> images(na);
  parallel_for(na, [&](std::size_t k) {
    SmashElement v = s.mul(s.mul(proj.Ebar, embed_basis(s, Factor::kFunctions, k)),
                           proj.E);
    auto t = solve(cols, v.coeff);
    if (!t) throw ConsistencyFailure("Ebar*" + A.label(k) + "*E not in A*E");
    images[k] = make_element(A, *t);
  });
  return delta_from_images(A, images);
}

IntegralResult vacuum_integral_A(const SmashAlgebra& s,
                                 const ProjectorPair& proj, const Element& a,
                                 Side side) {
  const HopfAlgebra& A = s.functions();
  if (a.algebra_id != A.id()) throw AlgebraMismatch("integrand");
  const std::size_t na = A.dim();
  std::vector<SmashElement> rs(na);
  parallel_for(na, [&](std::size_t k) {
    rs[k] = s.mul(s.mul(proj.Ebar, embed_basis(s, Factor::kFunctions, k)), proj.E);
  });
  std::vector<std::vector<RatFunc>> vs;
  for (const auto& r : rs) vs.push_back(r.coeff);
  std::size_t r = span_rank(vs, s.dim());
  if (r != 1) throw DegenerateSolutionSpace(std::to_string(r));

  Element delta = vacuum_delta(s, proj);
  SmashElement kd = s.mul(s.mul(proj.Ebar, s.embed(Factor::kFunctions, delta)),
                          proj.E);
  if (kd.is_zero()) throw DegenerateImage("Ebar*delta*E = 0");
  Element arg = side == Side::kRight ? a : antipode_elem(A, a, -1);
  SmashElement real = s.mul(s.mul(proj.Ebar, s.embed(Factor::kFunctions, arg)),
                            proj.E);
  auto v = ratio(kd.coeff, real.coeff);
  if (!v) throw DegenerateSolutionSpace("realization off the line");
  return {*v, delta, real, kDeltaConvention};
}

IntegralResult vacuum_integral_H(const SmashAlgebra& s,
                                 const ProjectorPair& proj, const Element& z) {
  const HopfAlgebra& H = s.points();
  if (z.algebra_id != H.id()) throw AlgebraMismatch("integrand");
  const std::size_t nh = H.dim();
  std::vector<SmashElement> rs(nh);
  parallel_for(nh, [&](std::size_t j) {
    rs[j] = s.mul(s.mul(proj.E, embed_basis(s, Factor::kPoints, j)), proj.Ebar);
  });
  std::vector<std::vector<RatFunc>> vs;
  for (const auto& r : rs) vs.push_back(r.coeff);
  std::size_t r = span_rank(vs, s.dim());
  if (r != 1) throw DegenerateSolutionSpace(std::to_string(r));

  Element delta = vacuum_delta(s, proj);
  Matrix storage;
  const Matrix& P = pairing_of(s, storage);
  std::vector<RatFunc> w(nh);  // ⟨e_j, δ⟩
  for (std::size_t j = 0; j < nh; ++j) {
    for (std::size_t i = 0; i < delta.coords.size(); ++i) {
      if (!delta.coords[i].is_zero()) w[j] += P(j, i) * delta.coords[i];
    }
  }
  // K with E e_j Ē = ⟨e_j, δ⟩ K for every j.
  std::size_t j0 = first_nonzero(w);
  if (j0 == static_cast<std::size_t>(-1) || rs[j0].is_zero()) {
    throw DegenerateSolutionSpace("points integral vanishes");
  }
  SmashElement K = w[j0].inverse() * rs[j0];
  for (std::size_t j = 0; j < nh; ++j) {
    if (rs[j] != w[j] * K) {
      throw ConsistencyFailure("E*" + H.label(j) + "*Ebar not proportional to <" +
                               H.label(j) + ", delta>");
    }
  }
  SmashElement real = s.mul(s.mul(proj.E, s.embed(Factor::kPoints, z)), proj.Ebar);
  RatFunc value;
  for (std::size_t j = 0; j < nh; ++j) {
    if (!z.coords[j].is_zero()) value += z.coords[j] * w[j];
  }
  return {value, delta, real, kPointsConvention};
}

Matrix theta_matrix(const DualPair& p) {
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  const std::size_t n = H.dim();
  std::vector<Element> s2e(n), f(n);
  for (std::size_t k = 0; k < n; ++k) {
    s2e[k] = s2(H, k);
    f[k] = p.dual_basis(k);
  }
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Element h = mul_elem(H, basis_element(H, i), s2e[k]);
      if (h.is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l) {
        t(i, l) += pair_eval(p, h, mul_elem(A, f[k], f[l]));
      }
    }
  }
  if (t.is_zero()) throw AllZeroTheta();
  return t;
}

}  // namespace hopfint
