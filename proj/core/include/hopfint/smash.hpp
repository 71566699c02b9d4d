#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hopfint/duality.hpp"
#include "hopfint/hopf.hpp"

namespace hopfint {

// Σ c[i][j] f^i·e_j in normal order (functions left). Index i*cols + j.
struct SmashElement {
  std::uint64_t smash_id = 0;
  std::size_t rows = 0;  // dim A
  std::size_t cols = 0;  // dim H
  std::vector<RatFunc> coeff;

  const RatFunc& at(std::size_t i, std::size_t j) const {
    return coeff[i * cols + j];
  }
  RatFunc& at(std::size_t i, std::size_t j) { return coeff[i * cols + j]; }
  bool is_zero() const;
  friend bool operator==(const SmashElement& a, const SmashElement& b) {
    return a.smash_id == b.smash_id && a.rows == b.rows && a.cols == b.cols &&
           a.coeff == b.coeff;
  }
};

SmashElement operator+(const SmashElement& a, const SmashElement& b);
SmashElement operator-(const SmashElement& a, const SmashElement& b);
SmashElement operator*(const RatFunc& s, const SmashElement& a);

enum class Factor { kFunctions, kPoints };

// A⋊H with its multiplication table. Immutable; copies share the table.
class SmashAlgebra {
 public:
  SmashAlgebra() = default;

  // Cross relations x a = a_(1)⟨x_(1), a_(2)⟩x_(2) from the pair.
  static SmashAlgebra from_pair(const DualPair& p);
  // cross: H⊗A -> A⊗H, column j*dimA + i holds e_j·f^i at a*dimH + b.
  static SmashAlgebra from_cross(HopfAlgebra functions, HopfAlgebra points,
                                 LinearMap cross);

  std::uint64_t id() const { return impl_->id; }
  const HopfAlgebra& functions() const { return impl_->a; }
  const HopfAlgebra& points() const { return impl_->h; }
  const LinearMap& cross() const { return impl_->cross; }
  const std::optional<DualPair>& pair() const { return impl_->pair; }
  std::size_t dim() const { return impl_->a.dim() * impl_->h.dim(); }

  // Product of basis elements p = (i, j), r = (k, l) in flat indices.
  const SparseVec& product(std::size_t p, std::size_t r) const {
    return impl_->table[p * dim() + r];
  }

  SmashElement zero() const;
  SmashElement unit() const;
  SmashElement basis(std::size_t i, std::size_t j) const;
  SmashElement from_sparse(const SparseVec& v) const;
  SmashElement mul(const SmashElement& u, const SmashElement& v) const;
  SmashElement embed(Factor which, const Element& u) const;

  // ⟨e_j, f^i⟩ read off as the vacuum expectation of e_j·f^i.
  Matrix vacuum_pairing() const;

 private:
  struct Impl {
    std::uint64_t id = 0;
    HopfAlgebra a;
    HopfAlgebra h;
    LinearMap cross;
    std::optional<DualPair> pair;
    std::vector<SparseVec> table;
  };
  static SmashAlgebra assemble(HopfAlgebra a, HopfAlgebra h, LinearMap cross,
                               std::optional<DualPair> pair);
  std::shared_ptr<const Impl> impl_;
};

SmashAlgebra build_smash(const DualPair& p);
SmashAlgebra build_smash_custom(const HopfAlgebra& functions,
                                const HopfAlgebra& points,
                                const LinearMap& cross);
SmashElement smash_mul(const SmashAlgebra& s, const SmashElement& u,
                       const SmashElement& v);
SmashElement embed(const SmashAlgebra& s, Factor which, const Element& u);

// Cross tensor of the pair, x a = a_(1)⟨x_(1), a_(2)⟩x_(2).
LinearMap cross_from_pair(const DualPair& p);

// Runs f(i) for i in [0, n) on a few threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace hopfint
