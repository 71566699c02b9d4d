#include "hopfint/smash.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "hopfint/errors.hpp"

namespace hopfint {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  if (n < 4 || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next = n;
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

bool SmashElement::is_zero() const {
  return std::all_of(coeff.begin(), coeff.end(),
                     [](const RatFunc& c) { return c.is_zero(); });
}

namespace {

void same_smash(const SmashElement& a, const SmashElement& b) {
  if (a.smash_id != b.smash_id || a.coeff.size() != b.coeff.size()) {
    throw AlgebraMismatch("elements of different smash algebras");
  }
}

std::string basis_label(const SmashAlgebra& s, std::size_t p) {
  const std::size_t nh = s.points().dim();
  std::string a = s.functions().label(p / nh);
  std::string h = s.points().label(p % nh);
  if (a == "1") return h;
  if (h == "1") return a;
  return a + "*" + h;
}

}  // namespace

SmashElement operator+(const SmashElement& a, const SmashElement& b) {
  same_smash(a, b);
  SmashElement r = a;
  for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
  return r;
}

SmashElement operator-(const SmashElement& a, const SmashElement& b) {
  same_smash(a, b);
  SmashElement r = a;
  for (std::size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] -= b.coeff[i];
  return r;
}

SmashElement operator*(const RatFunc& s, const SmashElement& a) {
  SmashElement r = a;
  for (auto& c : r.coeff) c *= s;
  return r;
}

LinearMap cross_from_pair(const DualPair& p) {
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  const std::size_t na = A.dim();
  const std::size_t nh = H.dim();
  const Matrix& P = p.pairing();
  LinearMap x(nh * na, na * nh);
  Accumulator acc(na * nh);
  for (std::size_t j = 0; j < nh; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      for (const auto& [ab, ca] : A.comult().col(i)) {
        std::size_t a = ab / na, b = ab % na;
        for (const auto& [cd, ch] : H.comult().col(j)) {
          std::size_t c = cd / nh, d = cd % nh;
          if (P(c, b).is_zero()) continue;
          acc.add(a * nh + d, ca * ch * P(c, b));
        }
      }
      x.set_col(j * na + i, acc.take());
    }
  }
  return x;
}

SmashAlgebra SmashAlgebra::assemble(HopfAlgebra a, HopfAlgebra h,
                                    LinearMap cross,
                                    std::optional<DualPair> pair) {
  const std::size_t na = a.dim();
  const std::size_t nh = h.dim();
  const std::size_t n = na * nh;
  if (cross.in_dim() != nh * na || cross.out_dim() != na * nh) {
    throw ShapeMismatch("cross tensor");
  }
  auto impl = std::make_shared<Impl>();
  impl->id = next_object_id();
  impl->table.resize(n * n);
  parallel_for(n, [&](std::size_t p) {
    const std::size_t i = p / nh, j = p % nh;
    Accumulator acc(n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t k = r / nh, l = r % nh;
      for (const auto& [ab, cx] : cross.col(j * na + k)) {
        const std::size_t ai = ab / nh, bi = ab % nh;
        const SparseVec& left = a.product(i, ai);
        if (left.empty()) continue;
        const SparseVec& right = h.product(bi, l);
        for (const auto& [c, ma] : left) {
          RatFunc cm = cx * ma;
          for (const auto& [d, mh] : right) acc.add_product(c * nh + d, cm, mh);
        }
      }
      impl->table[p * n + r] = acc.take();
    }
  });
  impl->a = std::move(a);
  impl->h = std::move(h);
  impl->cross = std::move(cross);
  impl->pair = std::move(pair);
  SmashAlgebra s;
  s.impl_ = std::move(impl);

  // Associativity over all basis triples.
  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};
  parallel_for(n, [&](std::size_t p) {
    Accumulator lhs(n), rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      const SparseVec& pr = s.product(p, r);
      for (std::size_t t = 0; t < n; ++t) {
        for (const auto& [u, c] : pr) {
          for (const auto& [v, d] : s.product(u, t)) lhs.add_product(v, c, d);
        }
        for (const auto& [u, c] : s.product(r, t)) {
          for (const auto& [v, d] : s.product(p, u)) rhs.add_product(v, c, d);
        }
        if (lhs.take() != rhs.take()) {
          std::size_t idx = (p * n + r) * n + t;
          std::size_t cur = first_bad.load();
          while (idx < cur && !first_bad.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    }
  });
  if (first_bad.load() != std::numeric_limits<std::size_t>::max()) {
    std::size_t idx = first_bad.load();
    throw AssociativityFailure("(" + basis_label(s, idx / (n * n)) + ", " +
                               basis_label(s, (idx / n) % n) + ", " +
                               basis_label(s, idx % n) + ")");
  }

  // Subalgebra embeddings.
  const HopfAlgebra& A = s.functions();
  const HopfAlgebra& H = s.points();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < na; ++k) {
      SmashElement lhs = s.mul(s.embed(Factor::kFunctions, basis_element(A, i)),
                               s.embed(Factor::kFunctions, basis_element(A, k)));
      SmashElement rhs = s.embed(
          Factor::kFunctions,
          mul_elem(A, basis_element(A, i), basis_element(A, k)));
      if (lhs != rhs) {
        throw ConsistencyFailure("functions embedding is not multiplicative at (" +
                                 A.label(i) + ", " + A.label(k) + ")");
      }
    }
  }
  for (std::size_t j = 0; j < nh; ++j) {
    for (std::size_t l = 0; l < nh; ++l) {
      SmashElement lhs = s.mul(s.embed(Factor::kPoints, basis_element(H, j)),
                               s.embed(Factor::kPoints, basis_element(H, l)));
      SmashElement rhs = s.embed(
          Factor::kPoints, mul_elem(H, basis_element(H, j), basis_element(H, l)));
      if (lhs != rhs) {
        throw ConsistencyFailure("points embedding is not multiplicative at (" +
                                 H.label(j) + ", " + H.label(l) + ")");
      }
    }
  }
  return s;
}

SmashAlgebra SmashAlgebra::from_pair(const DualPair& p) {
  SmashAlgebra s = assemble(p.functions(), p.points(), cross_from_pair(p), p);

  // Reorder f^i e_j with a x = x_(2)⟨x_(1), S⁻¹(a_(2))⟩a_(1), then back.
  const HopfAlgebra& A = p.functions();
  const HopfAlgebra& H = p.points();
  const std::size_t na = A.dim(), nh = H.dim();
  const LinearMap& sinv = A.antipode_inverse();
  const Matrix& P = p.pairing();
  Accumulator acc(na * nh);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      for (const auto& [ab, ca] : A.comult().col(i)) {
        std::size_t a1 = ab / na, a2 = ab % na;
        for (const auto& [cd, ch] : H.comult().col(j)) {
          std::size_t x1 = cd / nh, x2 = cd % nh;
          RatFunc w;
          for (const auto& [k, sk] : sinv.col(a2)) w += sk * P(x1, k);
          if (w.is_zero()) continue;
          RatFunc coeff = ca * ch * w;
          for (const auto& [fe, cx] : s.cross().col(x2 * na + a1)) {
            acc.add_product(fe, coeff, cx);
          }
        }
      }
      SparseVec back = acc.take();
      if (back != SparseVec{{i * nh + j, RatFunc(1)}}) {
        throw ConsistencyFailure("inverse cross relation at " +
                                 basis_label(s, i * nh + j));
      }
    }
  }
  return s;
}

SmashAlgebra SmashAlgebra::from_cross(HopfAlgebra functions,
                                      HopfAlgebra points, LinearMap cross) {
  return assemble(std::move(functions), std::move(points), std::move(cross),
                  std::nullopt);
}

SmashElement SmashAlgebra::zero() const {
  const std::size_t na = functions().dim(), nh = points().dim();
  return SmashElement{id(), na, nh, std::vector<RatFunc>(na * nh)};
}

SmashElement SmashAlgebra::unit() const {
  SmashElement e = zero();
  for (std::size_t i = 0; i < e.rows; ++i) {
    if (functions().unit()[i].is_zero()) continue;
    for (std::size_t j = 0; j < e.cols; ++j) {
      if (!points().unit()[j].is_zero()) {
        e.at(i, j) = functions().unit()[i] * points().unit()[j];
      }
    }
  }
  return e;
}

SmashElement SmashAlgebra::basis(std::size_t i, std::size_t j) const {
  SmashElement e = zero();
  e.at(i, j) = 1;
  return e;
}

SmashElement SmashAlgebra::from_sparse(const SparseVec& v) const {
  SmashElement e = zero();
  for (const auto& [k, c] : v) e.coeff[k] = c;
  return e;
}

SmashElement SmashAlgebra::mul(const SmashElement& u,
                               const SmashElement& v) const {
  if (u.smash_id != id() || v.smash_id != id()) {
    throw AlgebraMismatch("element does not belong to this smash algebra");
  }
  const std::size_t n = dim();
  SparseVec su = sparse_from_dense(u.coeff);
  SparseVec sv = sparse_from_dense(v.coeff);
  Accumulator acc(n);
  for (const auto& [p, c] : su) {
    for (const auto& [r, d] : sv) {
      RatFunc cd = c * d;
      for (const auto& [t, e] : product(p, r)) acc.add_product(t, cd, e);
    }
  }
  return from_sparse(acc.take());
}

SmashElement SmashAlgebra::embed(Factor which, const Element& u) const {
  SmashElement e = zero();
  if (which == Factor::kFunctions) {
    require_member(functions(), u);
    for (std::size_t i = 0; i < e.rows; ++i) {
      if (u.coords[i].is_zero()) continue;
      for (std::size_t j = 0; j < e.cols; ++j) {
        if (!points().unit()[j].is_zero()) {
          e.at(i, j) = u.coords[i] * points().unit()[j];
        }
      }
    }
  } else {
    require_member(points(), u);
    for (std::size_t i = 0; i < e.rows; ++i) {
      if (functions().unit()[i].is_zero()) continue;
      for (std::size_t j = 0; j < e.cols; ++j) {
        if (!u.coords[j].is_zero()) {
          e.at(i, j) = functions().unit()[i] * u.coords[j];
        }
      }
    }
  }
  return e;
}

Matrix SmashAlgebra::vacuum_pairing() const {
  const HopfAlgebra& A = functions();
  const HopfAlgebra& H = points();
  const std::size_t na = A.dim(), nh = H.dim();
  Matrix p(nh, na);
  for (std::size_t j = 0; j < nh; ++j) {
    for (std::size_t i = 0; i < na; ++i) {
      RatFunc v;
      for (const auto& [ab, c] : cross().col(j * na + i)) {
        RatFunc e = A.eps(ab / nh) * H.eps(ab % nh);
        if (!e.is_zero()) v += c * e;
      }
      p(j, i) = v;
    }
  }
  return p;
}

SmashAlgebra build_smash(const DualPair& p) { return SmashAlgebra::from_pair(p); }

SmashAlgebra build_smash_custom(const HopfAlgebra& functions,
                                const HopfAlgebra& points,
                                const LinearMap& cross) {
  return SmashAlgebra::from_cross(functions, points, cross);
}

SmashElement smash_mul(const SmashAlgebra& s, const SmashElement& u,
                       const SmashElement& v) {
  return s.mul(u, v);
}

SmashElement embed(const SmashAlgebra& s, Factor which, const Element& u) {
  return s.embed(which, u);
}

}  // namespace hopfint
