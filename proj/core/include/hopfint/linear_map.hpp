#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hopfint/scalars.hpp"

namespace hopfint {

// Sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, RatFunc>>;

SparseVec sparse_from_dense(const std::vector<RatFunc>& dense);
std::vector<RatFunc> dense_from_sparse(const SparseVec& v, std::size_t dim);
SparseVec sparse_scale(const SparseVec& v, const RatFunc& s);
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
RatFunc sparse_at(const SparseVec& v, std::size_t index);

// Dense scratch space for summing sparse contributions.
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim = 0) : slots_(dim), used_(dim, false) {}
  void resize(std::size_t dim);
  void add(std::size_t index, const RatFunc& c);
  void add_product(std::size_t index, const RatFunc& a, const RatFunc& b);
  // Returns the collected vector and resets the scratch space.
  SparseVec take();

 private:
  std::vector<RatFunc> slots_;
  std::vector<bool> used_;
  std::vector<std::size_t> touched_;
};

// A linear map between spaces with fixed bases, stored by columns: column d is
// the image of basis vector d.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t in_dim, std::size_t out_dim)
      : in_(in_dim), out_(out_dim), cols_(in_dim) {}

  static LinearMap identity(std::size_t n);
  // Flip V⊗W -> W⊗V.
  static LinearMap flip(std::size_t v, std::size_t w);

  std::size_t in_dim() const { return in_; }
  std::size_t out_dim() const { return out_; }

  const SparseVec& col(std::size_t d) const { return cols_[d]; }
  void set_col(std::size_t d, SparseVec v) { cols_[d] = std::move(v); }
  RatFunc at(std::size_t in, std::size_t out) const {
    return sparse_at(cols_[in], out);
  }
  // Adds c to the (in -> out) coefficient.
  void add(std::size_t in, std::size_t out, const RatFunc& c);

  SparseVec apply(const SparseVec& v) const;
  LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
  LinearMap transpose() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.in_ == b.in_ && a.out_ == b.out_ && a.cols_ == b.cols_;
  }

 private:
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  std::vector<SparseVec> cols_;
};

// Applies f_1 ⊗ f_2 ⊗ ... ⊗ f_r to a vector on the tensor product of the
// domains (row-major multi-index), without materializing the Kronecker map.
SparseVec apply_tensor(const std::vector<const LinearMap*>& factors,
                       const SparseVec& v);

// Decodes a row-major multi-index.
std::vector<std::size_t> unflatten(std::size_t index,
                                   const std::vector<std::size_t>& dims);

}  // namespace hopfint
