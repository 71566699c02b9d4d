#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfint/linear_map.hpp"
#include "hopfint/scalars.hpp"

namespace hopfint {

// Dense row-major matrix over Q(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_map(const LinearMap& m);  // rows = out, cols = in

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RatFunc& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const RatFunc& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  bool is_zero() const;
  LinearMap to_map() const;  // column c -> row entries

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatFunc> data_;
};

// Incremental reduced row echelon form over sparse rows.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  // Reduces the row against the stored pivots; stores it if independent.
  // Returns true when the rank grew.
  bool add_row(SparseVec row);
  // Residue of a row after reduction (zero iff in the row span).
  SparseVec reduce(SparseVec row) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  // Basis of {v : row·v = 0 for all rows}.
  std::vector<std::vector<RatFunc>> nullspace() const;

 private:
  std::size_t cols_;
  std::vector<SparseVec> rows_;       // pivot entry normalized to 1
  std::vector<std::size_t> pivot_;    // pivot column of each row
  std::vector<long> row_of_col_;      // lazily sized, -1 if none
};

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Solves m·x = b; nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<RatFunc>> solve(const Matrix& m,
                                          const std::vector<RatFunc>& b);
std::vector<std::vector<RatFunc>> nullspace(const Matrix& m);

}  // namespace hopfint
