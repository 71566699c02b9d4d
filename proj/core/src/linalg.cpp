#include "hopfint/linalg.hpp"

#include <algorithm>
#include <map>

#include "hopfint/errors.hpp"

namespace hopfint {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_map(const LinearMap& f) {
  Matrix m(f.out_dim(), f.in_dim());
  for (std::size_t c = 0; c < f.in_dim(); ++c) {
    for (const auto& [r, v] : f.col(c)) m(r, c) = v;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const RatFunc& x) { return x.is_zero(); });
}

LinearMap Matrix::to_map() const {
  LinearMap f(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    SparseVec col;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!(*this)(r, c).is_zero()) col.emplace_back(r, (*this)(r, c));
    }
    f.set_col(c, std::move(col));
  }
  return f;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- RowEchelon

namespace {

using WorkRow = std::map<std::size_t, RatFunc>;

void subtract_scaled(WorkRow& w, const SparseVec& row, const RatFunc& f) {
  for (const auto& [c, v] : row) {
    auto [it, inserted] = w.try_emplace(c, RatFunc());
    it->second -= f * v;
    if (it->second.is_zero()) w.erase(it);
  }
}

}  // namespace

SparseVec RowEchelon::reduce(SparseVec row) const {
  WorkRow w(row.begin(), row.end());
  auto it = w.begin();
  while (it != w.end()) {
    std::size_t c = it->first;
    long p = c < row_of_col_.size() ? row_of_col_[c] : -1;
    if (p < 0) {
      ++it;
      continue;
    }
    RatFunc f = it->second;
    subtract_scaled(w, rows_[static_cast<std::size_t>(p)], f);
    it = w.upper_bound(c);
  }
  return SparseVec(w.begin(), w.end());
}

bool RowEchelon::add_row(SparseVec row) {
  SparseVec r = reduce(std::move(row));
  if (r.empty()) return false;
  RatFunc inv = r.front().second.inverse();
  if (!inv.is_one()) {
    for (auto& e : r) e.second *= inv;
  }
  std::size_t c = r.front().first;
  if (row_of_col_.size() < cols_) row_of_col_.assign(cols_, -1);
  row_of_col_[c] = static_cast<long>(rows_.size());
  pivot_.push_back(c);
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::vector<RatFunc>> RowEchelon::nullspace() const {
  // Back-substitute into reduced form, largest pivot first.
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_[a] > pivot_[b]; });
  std::vector<SparseVec> rref(rows_.size());
  std::vector<long> done(cols_, -1);
  for (std::size_t i : order) {
    WorkRow w(rows_[i].begin(), rows_[i].end());
    for (auto it = std::next(w.begin()); it != w.end();) {
      std::size_t c = it->first;
      long p = done[c];
      if (p < 0) {
        ++it;
        continue;
      }
      RatFunc f = it->second;
      subtract_scaled(w, rref[static_cast<std::size_t>(p)], f);
      it = w.upper_bound(c);
    }
    rref[i] = SparseVec(w.begin(), w.end());
    done[pivot_[i]] = static_cast<long>(i);
  }
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_) is_pivot[c] = true;
  std::vector<std::vector<RatFunc>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFunc> v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < rref.size(); ++i) {
      RatFunc e = sparse_at(rref[i], f);
      if (!e.is_zero()) v[pivot_[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------- dense

std::size_t rank(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
    }
    e.add_row(std::move(row));
  }
  return e.rank();
}

std::vector<std::vector<RatFunc>> nullspace(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
    }
    e.add_row(std::move(row));
  }
  return e.nullspace();
}

namespace {

// Gauss-Jordan on an augmented matrix; returns pivot columns (< ncols).
std::vector<std::size_t> gauss_jordan(Matrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    }
    RatFunc inv = a(row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) {
      if (!a(row, k).is_zero()) a(row, k) *= inv;
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      RatFunc f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        if (!a(row, k).is_zero()) a(r, k) -= f * a(row, k);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n + r) = 1;
  }
  if (gauss_jordan(a, n).size() < n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = a(r, n + c);
  }
  return inv;
}

std::optional<std::vector<RatFunc>> solve(const Matrix& m,
                                          const std::vector<RatFunc>& b) {
  if (b.size() != m.rows()) throw ShapeMismatch("right-hand side length");
  const std::size_t n = m.cols();
  Matrix a(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n) = b[r];
  }
  auto pivots = gauss_jordan(a, n);
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (!a(r, n).is_zero()) return std::nullopt;
  }
  std::vector<RatFunc> x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(r, n);
  return x;
}

}  // namespace hopfint
