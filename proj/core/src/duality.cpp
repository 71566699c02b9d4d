#include "hopfint/duality.hpp"

#include "hopfint/errors.hpp"

namespace hopfint {

namespace {

std::string pair_witness(const std::vector<std::string>& l1, std::size_t i,
                         const std::vector<std::string>& l2, std::size_t j) {
  return "(" + l1[i] + ", " + l2[j] + ")";
}

std::string triple_witness(const std::vector<std::string>& l1, std::size_t i,
                           const std::vector<std::string>& l2, std::size_t j,
                           std::size_t k) {
  return "(" + l1[i] + ", " + l2[j] + ", " + l2[k] + ")";
}

}  // namespace

AxiomReport check_pairing(const HopfAlgebra& a, const HopfAlgebra& h,
                          const Matrix& p) {
  AxiomReport r;
  const std::size_t na = a.dim();
  const std::size_t nh = h.dim();
  if (p.rows() != nh || p.cols() != na) throw ShapeMismatch("pairing matrix");
  bool square = na == nh;
  bool nondeg = square && rank(p) == na;
  r.entries.push_back({"pairing-nondegenerate", nondeg, nondeg ? "" : "rank"});
  if (!nondeg) return r;
  const std::size_t n = na;

  // ⟨h, ab⟩ = ⟨h_(1), a⟩⟨h_(2), b⟩
  AxiomResult prod{"pairing-product", true, {}};
  for (std::size_t x = 0; x < n && prod.passed; ++x) {
    for (std::size_t i = 0; i < n && prod.passed; ++i) {
      for (std::size_t j = 0; j < n && prod.passed; ++j) {
        RatFunc lhs;
        for (const auto& [k, c] : a.product(i, j)) lhs += c * p(x, k);
        RatFunc rhs;
        for (const auto& [cd, c] : h.comult().col(x)) {
          rhs += c * p(cd / n, i) * p(cd % n, j);
        }
        if (lhs != rhs) {
          prod = {"pairing-product", false,
                  triple_witness(h.labels(), x, a.labels(), i, j)};
        }
      }
    }
  }
  r.entries.push_back(prod);

  // ⟨xy, f⟩ = ⟨x, f_(1)⟩⟨y, f_(2)⟩
  AxiomResult coprod{"pairing-coproduct", true, {}};
  for (std::size_t f = 0; f < n && coprod.passed; ++f) {
    for (std::size_t x = 0; x < n && coprod.passed; ++x) {
      for (std::size_t y = 0; y < n && coprod.passed; ++y) {
        RatFunc lhs;
        for (const auto& [k, c] : h.product(x, y)) lhs += c * p(k, f);
        RatFunc rhs;
        for (const auto& [cd, c] : a.comult().col(f)) {
          rhs += c * p(x, cd / n) * p(y, cd % n);
        }
        if (lhs != rhs) {
          coprod = {"pairing-coproduct", false,
                    "(" + a.label(f) + ", " + h.label(x) + ", " + h.label(y) +
                        ")"};
        }
      }
    }
  }
  r.entries.push_back(coprod);

  // ⟨S(x), f⟩ = ⟨x, S(f)⟩
  AxiomResult anti{"pairing-antipode", true, {}};
  for (std::size_t x = 0; x < n && anti.passed; ++x) {
    for (std::size_t f = 0; f < n && anti.passed; ++f) {
      RatFunc lhs, rhs;
      for (const auto& [k, c] : h.antipode().col(x)) lhs += c * p(k, f);
      for (const auto& [k, c] : a.antipode().col(f)) rhs += c * p(x, k);
      if (lhs != rhs) {
        anti = {"pairing-antipode", false,
                pair_witness(h.labels(), x, a.labels(), f)};
      }
    }
  }
  r.entries.push_back(anti);

  // ⟨1_H, f⟩ = ε_A(f), ⟨x, 1_A⟩ = ε_H(x)
  AxiomResult unit{"pairing-unit", true, {}};
  for (std::size_t f = 0; f < n && unit.passed; ++f) {
    RatFunc v;
    for (std::size_t k = 0; k < n; ++k) {
      if (!h.unit()[k].is_zero()) v += h.unit()[k] * p(k, f);
    }
    if (v != a.eps(f)) unit = {"pairing-unit", false, "(1, " + a.label(f) + ")"};
  }
  for (std::size_t x = 0; x < n && unit.passed; ++x) {
    RatFunc v;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.unit()[k].is_zero()) v += a.unit()[k] * p(x, k);
    }
    if (v != h.eps(x)) unit = {"pairing-unit", false, "(" + h.label(x) + ", 1)"};
  }
  r.entries.push_back(unit);
  return r;
}

DualPair DualPair::make(HopfAlgebra functions, HopfAlgebra points,
                        Matrix pairing, Check check) {
  DualPair d;
  if (check == Check::kFull) {
    AxiomReport r = check_pairing(functions, points, pairing);
    if (const AxiomResult* f = r.first_failure()) {
      throw AxiomViolation(f->name, f->witness);
    }
  } else if (pairing.rows() != points.dim() ||
             pairing.cols() != functions.dim()) {
    throw ShapeMismatch("pairing matrix");
  }
  auto inv = inverse(pairing);
  if (!inv) throw AxiomViolation("pairing-nondegenerate", "rank");
  d.a_ = std::move(functions);
  d.h_ = std::move(points);
  d.p_ = std::move(pairing);
  d.pinv_ = std::move(*inv);
  d.checked_ = check == Check::kFull;
  return d;
}

DualPair DualPair::swapped() const {
  DualPair d;
  d.a_ = h_;
  d.h_ = a_;
  d.p_ = p_.transpose();
  d.pinv_ = pinv_.transpose();
  d.checked_ = checked_;
  return d;
}

Element DualPair::dual_basis(std::size_t i) const {
  Element e = zero_element(a_);
  for (std::size_t j = 0; j < a_.dim(); ++j) e.coords[j] = pinv_(j, i);
  return e;
}

DualPair dualize(const HopfAlgebra& h, std::vector<std::string> labels) {
  const std::size_t n = h.dim();
  HopfAlgebraData d;
  d.dim = n;
  if (labels.empty()) {
    bool unit_first = true;
    for (std::size_t i = 0; i < n; ++i) {
      unit_first = unit_first && (i == 0 ? h.eps(i).is_one() : h.eps(i).is_zero());
    }
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(i == 0 && unit_first ? "1" : "f" + std::to_string(i));
    }
  }
  if (labels.size() != n) throw ShapeMismatch("dual labels");
  d.labels = std::move(labels);
  d.mult = h.comult().transpose();
  d.comult = h.mult().transpose();
  d.unit = h.counit();
  d.counit = h.unit();
  d.antipode = h.antipode().transpose();
  HopfAlgebra a = HopfAlgebra::build(std::move(d));
  return DualPair::make(std::move(a), h, Matrix::identity(n));
}

RatFunc pair_eval(const DualPair& p, const Element& h, const Element& a) {
  require_member(p.points(), h);
  require_member(p.functions(), a);
  RatFunc r;
  for (std::size_t i = 0; i < h.coords.size(); ++i) {
    if (h.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.coords.size(); ++j) {
      if (a.coords[j].is_zero() || p.pairing()(i, j).is_zero()) continue;
      r += h.coords[i] * p.pairing()(i, j) * a.coords[j];
    }
  }
  return r;
}

Element act_left(const DualPair& p, const Element& x, const Element& a) {
  require_member(p.points(), x);
  require_member(p.functions(), a);
  const HopfAlgebra& A = p.functions();
  const std::size_t n = A.dim();
  std::vector<RatFunc> xp(n);  // ⟨x, b_k⟩
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t h = 0; h < x.coords.size(); ++h) {
      if (!x.coords[h].is_zero()) xp[k] += x.coords[h] * p.pairing()(h, k);
    }
  }
  Element r = zero_element(A);
  for (const auto& [jk, c] : A.comult().apply(to_sparse(a))) {
    if (!xp[jk % n].is_zero()) r.coords[jk / n] += c * xp[jk % n];
  }
  return r;
}

Element act_right(const DualPair& p, const Element& x, const Element& a) {
  require_member(p.points(), x);
  require_member(p.functions(), a);
  const HopfAlgebra& H = p.points();
  const std::size_t n = H.dim();
  std::vector<RatFunc> pa(n);  // ⟨b_j, a⟩
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t f = 0; f < a.coords.size(); ++f) {
      if (!a.coords[f].is_zero()) pa[j] += p.pairing()(j, f) * a.coords[f];
    }
  }
  Element r = zero_element(H);
  for (const auto& [jk, c] : H.comult().apply(to_sparse(x))) {
    if (!pa[jk / n].is_zero()) r.coords[jk % n] += c * pa[jk / n];
  }
  return r;
}

}  // namespace hopfint
