#include "hopfint/linear_map.hpp"

#include <algorithm>

#include "hopfint/errors.hpp"

namespace hopfint {

SparseVec sparse_from_dense(const std::vector<RatFunc>& dense) {
  SparseVec v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) v.emplace_back(i, dense[i]);
  }
  return v;
}

std::vector<RatFunc> dense_from_sparse(const SparseVec& v, std::size_t dim) {
  std::vector<RatFunc> d(dim);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

SparseVec sparse_scale(const SparseVec& v, const RatFunc& s) {
  SparseVec r;
  if (s.is_zero()) return r;
  r.reserve(v.size());
  for (const auto& [i, c] : v) r.emplace_back(i, c * s);
  return r;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      RatFunc s = a[i].second + b[j].second;
      if (!s.is_zero()) r.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

RatFunc sparse_at(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == index) return it->second;
  return RatFunc();
}

void Accumulator::resize(std::size_t dim) {
  slots_.assign(dim, RatFunc());
  used_.assign(dim, false);
  touched_.clear();
}

void Accumulator::add(std::size_t index, const RatFunc& c) {
  if (c.is_zero()) return;
  if (!used_[index]) {
    used_[index] = true;
    touched_.push_back(index);
    slots_[index] = c;
  } else {
    slots_[index] += c;
  }
}

void Accumulator::add_product(std::size_t index, const RatFunc& a,
                              const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_one()) return add(index, b);
  if (b.is_one()) return add(index, a);
  add(index, a * b);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec r;
  r.reserve(touched_.size());
  for (std::size_t i : touched_) {
    if (!slots_[i].is_zero()) r.emplace_back(i, std::move(slots_[i]));
    slots_[i] = RatFunc();
    used_[i] = false;
  }
  touched_.clear();
  return r;
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i] = {{i, RatFunc(1)}};
  return m;
}

LinearMap LinearMap::flip(std::size_t v, std::size_t w) {
  LinearMap m(v * w, v * w);
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      m.cols_[i * w + j] = {{j * v + i, RatFunc(1)}};
    }
  }
  return m;
}

void LinearMap::add(std::size_t in, std::size_t out, const RatFunc& c) {
  if (c.is_zero()) return;
  cols_[in] = sparse_add(cols_[in], SparseVec{{out, c}});
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  if (v.size() == 1 && v[0].second.is_one()) return cols_[v[0].first];
  Accumulator acc(out_);
  for (const auto& [d, c] : v) {
    for (const auto& [o, e] : cols_[d]) acc.add_product(o, c, e);
  }
  return acc.take();
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.out_ != in_) throw ShapeMismatch("composition of linear maps");
  LinearMap r(inner.in_, out_);
  for (std::size_t d = 0; d < inner.in_; ++d) r.cols_[d] = apply(inner.cols_[d]);
  return r;
}

LinearMap LinearMap::transpose() const {
  LinearMap r(out_, in_);
  for (std::size_t d = 0; d < in_; ++d) {
    for (const auto& [o, c] : cols_[d]) r.cols_[o].emplace_back(d, c);
  }
  return r;
}

std::vector<std::size_t> unflatten(std::size_t index,
                                   const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = index % dims[k];
    index /= dims[k];
  }
  return idx;
}

SparseVec apply_tensor(const std::vector<const LinearMap*>& factors,
                       const SparseVec& v) {
  std::vector<std::size_t> in_dims, out_dims;
  std::size_t out_total = 1;
  for (const LinearMap* f : factors) {
    in_dims.push_back(f->in_dim());
    out_dims.push_back(f->out_dim());
    out_total *= f->out_dim();
  }
  Accumulator acc(out_total);
  const std::size_t r = factors.size();
  std::vector<const SparseVec*> cols(r);
  std::vector<std::size_t> pos(r);
  for (const auto& [index, c] : v) {
    auto idx = unflatten(index, in_dims);
    bool empty = false;
    for (std::size_t k = 0; k < r; ++k) {
      cols[k] = &factors[k]->col(idx[k]);
      if (cols[k]->empty()) empty = true;
    }
    if (empty) continue;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      std::size_t out = 0;
      RatFunc coeff = c;
      for (std::size_t k = 0; k < r; ++k) {
        const auto& e = (*cols[k])[pos[k]];
        out = out * out_dims[k] + e.first;
        if (!e.second.is_one()) coeff *= e.second;
      }
      acc.add(out, coeff);
      bool done = true;
      for (std::size_t k = r; k-- > 0;) {
        if (++pos[k] < cols[k]->size()) {
          done = false;
          break;
        }
        pos[k] = 0;
      }
      if (done) break;
    }
  }
  return acc.take();
}

}  // namespace hopfint
