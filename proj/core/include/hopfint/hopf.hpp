#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/linear_map.hpp"
#include "hopfint/scalars.hpp"

namespace hopfint {

// Raw structure constants. Index conventions:
//   mult     n*n -> n,  column i*n+j holds b_i·b_j          (M[i][j][k])
//   comult   n -> n*n,  column i holds Δ(b_i) at j*n+k      (D[i][j][k])
//   antipode n -> n,    column i holds S(b_i)                (S[i][j])
struct HopfAlgebraData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap mult;
  std::vector<RatFunc> unit;
  LinearMap comult;
  std::vector<RatFunc> counit;
  LinearMap antipode;

  // Empty structure of dimension n: zero tensors, unit = basis vector 0.
  static HopfAlgebraData zeros(std::size_t n, std::vector<std::string> labels);

  void set_mult(std::size_t i, std::size_t j, std::size_t k, const RatFunc& c);
  void set_comult(std::size_t i, std::size_t j, std::size_t k,
                  const RatFunc& c);
  void set_antipode(std::size_t i, std::size_t j, const RatFunc& c);

  RatFunc M(std::size_t i, std::size_t j, std::size_t k) const {
    return mult.at(i * dim + j, k);
  }
  RatFunc D(std::size_t i, std::size_t j, std::size_t k) const {
    return comult.at(i, j * dim + k);
  }
  RatFunc S(std::size_t i, std::size_t j) const { return antipode.at(i, j); }
};

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::string witness;  // basis labels of the first failing input
};

struct AxiomReport {
  std::vector<AxiomResult> entries;
  bool ok() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(const std::string& name) const;
};

// Exhaustive check of every Hopf algebra axiom on basis tuples.
AxiomReport check_hopf_axioms(const HopfAlgebraData& h);

// Shared by the unbraided and braided suites: every axiom, with the tensor
// flip in the bialgebra and antihomomorphism laws replaced by `transposition`.
AxiomReport check_structure(const HopfAlgebraData& h,
                            const LinearMap& transposition);

void check_shapes(const HopfAlgebraData& h);

// Immutable, validated Hopf algebra. Copies share the data.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;

  // Runs check_hopf_axioms; throws AxiomViolation on the first failure.
  static HopfAlgebra build(HopfAlgebraData data);
  // Shape checks only. For data validated by another suite (braided).
  static HopfAlgebra adopt(HopfAlgebraData data);

  bool valid() const { return impl_ != nullptr; }
  std::uint64_t id() const { return impl_->id; }
  std::size_t dim() const { return impl_->data.dim; }
  const HopfAlgebraData& data() const { return impl_->data; }
  const std::vector<std::string>& labels() const { return impl_->data.labels; }
  const std::string& label(std::size_t i) const { return impl_->data.labels[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const LinearMap& mult() const { return impl_->data.mult; }
  const LinearMap& comult() const { return impl_->data.comult; }
  const LinearMap& antipode() const { return impl_->data.antipode; }
  // Throws SingularAntipode when S is not invertible.
  const LinearMap& antipode_inverse() const;
  const std::vector<RatFunc>& unit() const { return impl_->data.unit; }
  const std::vector<RatFunc>& counit() const { return impl_->data.counit; }
  // Index of the unit when it is a basis vector.
  std::optional<std::size_t> unit_index() const { return impl_->unit_index; }

  RatFunc M(std::size_t i, std::size_t j, std::size_t k) const {
    return impl_->data.M(i, j, k);
  }
  RatFunc D(std::size_t i, std::size_t j, std::size_t k) const {
    return impl_->data.D(i, j, k);
  }
  RatFunc S(std::size_t i, std::size_t j) const { return impl_->data.S(i, j); }
  RatFunc eps(std::size_t i) const { return impl_->data.counit[i]; }

  // b_i·b_j as a sparse vector.
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return impl_->data.mult.col(i * dim() + j);
  }

 private:
  struct Impl {
    std::uint64_t id = 0;
    HopfAlgebraData data;
    std::optional<LinearMap> antipode_inverse;
    std::optional<std::size_t> unit_index;
  };
  static HopfAlgebra make(HopfAlgebraData data);
  std::shared_ptr<const Impl> impl_;
};

std::uint64_t next_object_id();

struct Element {
  std::uint64_t algebra_id = 0;
  std::vector<RatFunc> coords;

  bool is_zero() const;
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_id == b.algebra_id && a.coords == b.coords;
  }
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const RatFunc& s, const Element& a);

Element make_element(const HopfAlgebra& h, std::vector<RatFunc> coords);
Element basis_element(const HopfAlgebra& h, std::size_t i);
Element unit_element(const HopfAlgebra& h);
Element zero_element(const HopfAlgebra& h);
SparseVec to_sparse(const Element& e);
void require_member(const HopfAlgebra& h, const Element& e);

// Coefficients over b_j⊗b_k, row-major (j, k).
struct TensorElement {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RatFunc> coeff;

  const RatFunc& at(std::size_t j, std::size_t k) const {
    return coeff[j * cols + k];
  }
  RatFunc& at(std::size_t j, std::size_t k) { return coeff[j * cols + k]; }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.rows == b.rows && a.cols == b.cols && a.coeff == b.coeff;
  }
};

Element mul_elem(const HopfAlgebra& h, const Element& u, const Element& v);
TensorElement coproduct_elem(const HopfAlgebra& h, const Element& u);
RatFunc counit_elem(const HopfAlgebra& h, const Element& u);
// power may be negative (inverse antipode); zero is rejected.
Element antipode_elem(const HopfAlgebra& h, const Element& u, int power);

// (W^k)_i^j = D[i][k][j]; one n×n matrix per k, rows i, columns j.
std::vector<std::vector<std::vector<RatFunc>>> w_slices(const HopfAlgebra& h);
// (M_i)_j^k = M[i][j][k]; rows j, columns k.
std::vector<std::vector<std::vector<RatFunc>>> m_slices(const HopfAlgebra& h);

}  // namespace hopfint
