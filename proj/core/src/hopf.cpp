#include "hopfint/hopf.hpp"

#include <atomic>

#include "hopfint/errors.hpp"
#include "hopfint/linalg.hpp"

namespace hopfint {

std::uint64_t next_object_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

HopfAlgebraData HopfAlgebraData::zeros(std::size_t n,
                                       std::vector<std::string> labels) {
  HopfAlgebraData d;
  d.dim = n;
  d.labels = std::move(labels);
  d.mult = LinearMap(n * n, n);
  d.unit.assign(n, RatFunc());
  if (n > 0) d.unit[0] = 1;
  d.comult = LinearMap(n, n * n);
  d.counit.assign(n, RatFunc());
  d.antipode = LinearMap(n, n);
  return d;
}

void HopfAlgebraData::set_mult(std::size_t i, std::size_t j, std::size_t k,
                               const RatFunc& c) {
  mult.add(i * dim + j, k, c - mult.at(i * dim + j, k));
}

void HopfAlgebraData::set_comult(std::size_t i, std::size_t j, std::size_t k,
                                 const RatFunc& c) {
  comult.add(i, j * dim + k, c - comult.at(i, j * dim + k));
}

void HopfAlgebraData::set_antipode(std::size_t i, std::size_t j,
                                   const RatFunc& c) {
  antipode.add(i, j, c - antipode.at(i, j));
}

bool AxiomReport::ok() const { return first_failure() == nullptr; }

const AxiomResult* AxiomReport::first_failure() const {
  for (const auto& e : entries) {
    if (!e.passed) return &e;
  }
  return nullptr;
}

const AxiomResult* AxiomReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

void check_shapes(const HopfAlgebraData& h) {
  const std::size_t n = h.dim;
  if (n == 0) throw ShapeMismatch("dimension must be positive");
  if (h.labels.size() != n) throw ShapeMismatch("labels");
  if (h.unit.size() != n) throw ShapeMismatch("unit");
  if (h.counit.size() != n) throw ShapeMismatch("counit");
  if (h.mult.in_dim() != n * n || h.mult.out_dim() != n) {
    throw ShapeMismatch("mult");
  }
  if (h.comult.in_dim() != n || h.comult.out_dim() != n * n) {
    throw ShapeMismatch("comult");
  }
  if (h.antipode.in_dim() != n || h.antipode.out_dim() != n) {
    throw ShapeMismatch("antipode");
  }
}

HopfAlgebra HopfAlgebra::make(HopfAlgebraData data) {
  auto impl = std::make_shared<Impl>();
  impl->id = next_object_id();
  auto inv = inverse(Matrix::from_map(data.antipode));
  if (inv) impl->antipode_inverse = inv->to_map();
  for (std::size_t k = 0; k < data.dim; ++k) {
    bool is_basis = true;
    for (std::size_t i = 0; i < data.dim && is_basis; ++i) {
      is_basis = (i == k) ? data.unit[i].is_one() : data.unit[i].is_zero();
    }
    if (is_basis) {
      impl->unit_index = k;
      break;
    }
  }
  impl->data = std::move(data);
  HopfAlgebra h;
  h.impl_ = std::move(impl);
  return h;
}

HopfAlgebra HopfAlgebra::build(HopfAlgebraData data) {
  check_shapes(data);
  AxiomReport report = check_hopf_axioms(data);
  if (const AxiomResult* f = report.first_failure()) {
    throw AxiomViolation(f->name, f->witness);
  }
  return make(std::move(data));
}

HopfAlgebra HopfAlgebra::adopt(HopfAlgebraData data) {
  check_shapes(data);
  return make(std::move(data));
}

const LinearMap& HopfAlgebra::antipode_inverse() const {
  if (!impl_->antipode_inverse) throw SingularAntipode("S is not invertible");
  return *impl_->antipode_inverse;
}

std::optional<std::size_t> HopfAlgebra::index_of(const std::string& l) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (labels()[i] == l) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- elements

bool Element::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

namespace {

void same_algebra(const Element& a, const Element& b) {
  if (a.algebra_id != b.algebra_id || a.coords.size() != b.coords.size()) {
    throw AlgebraMismatch("elements of different algebras");
  }
}

Element from_sparse(const HopfAlgebra& h, const SparseVec& v) {
  return Element{h.id(), dense_from_sparse(v, h.dim())};
}

}  // namespace

Element operator+(const Element& a, const Element& b) {
  same_algebra(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Element operator-(const Element& a, const Element& b) {
  same_algebra(a, b);
  Element r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Element operator-(const Element& a) {
  Element r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Element operator*(const RatFunc& s, const Element& a) {
  Element r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

void require_member(const HopfAlgebra& h, const Element& e) {
  if (e.algebra_id != h.id() || e.coords.size() != h.dim()) {
    throw AlgebraMismatch("element does not belong to this algebra");
  }
}

Element make_element(const HopfAlgebra& h, std::vector<RatFunc> coords) {
  if (coords.size() != h.dim()) throw ShapeMismatch("element length");
  return Element{h.id(), std::move(coords)};
}

Element basis_element(const HopfAlgebra& h, std::size_t i) {
  Element e{h.id(), std::vector<RatFunc>(h.dim())};
  e.coords[i] = 1;
  return e;
}

Element unit_element(const HopfAlgebra& h) { return Element{h.id(), h.unit()}; }

Element zero_element(const HopfAlgebra& h) {
  return Element{h.id(), std::vector<RatFunc>(h.dim())};
}

SparseVec to_sparse(const Element& e) { return sparse_from_dense(e.coords); }

Element mul_elem(const HopfAlgebra& h, const Element& u, const Element& v) {
  require_member(h, u);
  require_member(h, v);
  const std::size_t n = h.dim();
  Accumulator acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coords[j].is_zero()) continue;
      RatFunc c = u.coords[i] * v.coords[j];
      for (const auto& [k, m] : h.product(i, j)) acc.add_product(k, c, m);
    }
  }
  return from_sparse(h, acc.take());
}

TensorElement coproduct_elem(const HopfAlgebra& h, const Element& u) {
  require_member(h, u);
  const std::size_t n = h.dim();
  TensorElement t{n, n, std::vector<RatFunc>(n * n)};
  for (const auto& [jk, c] : h.comult().apply(to_sparse(u))) t.coeff[jk] = c;
  return t;
}

RatFunc counit_elem(const HopfAlgebra& h, const Element& u) {
  require_member(h, u);
  RatFunc r;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (!u.coords[i].is_zero()) r += u.coords[i] * h.eps(i);
  }
  return r;
}

Element antipode_elem(const HopfAlgebra& h, const Element& u, int power) {
  require_member(h, u);
  if (power == 0) throw BadParam("antipode power must be nonzero");
  const LinearMap& s = power > 0 ? h.antipode() : h.antipode_inverse();
  SparseVec v = to_sparse(u);
  for (int k = 0; k < (power > 0 ? power : -power); ++k) v = s.apply(v);
  return from_sparse(h, v);
}

std::vector<std::vector<std::vector<RatFunc>>> w_slices(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<std::vector<RatFunc>>> w(
      n, std::vector<std::vector<RatFunc>>(n, std::vector<RatFunc>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [kj, c] : h.comult().col(i)) {
      w[kj / n][i][kj % n] = c;
    }
  }
  return w;
}

std::vector<std::vector<std::vector<RatFunc>>> m_slices(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  std::vector<std::vector<std::vector<RatFunc>>> m(
      n, std::vector<std::vector<RatFunc>>(n, std::vector<RatFunc>(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : h.product(i, j)) m[i][j][k] = c;
    }
  }
  return m;
}

}  // namespace hopfint
