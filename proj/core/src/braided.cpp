#include "hopfint/braided.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hopfint/errors.hpp"
#include "hopfint/presentation.hpp"

namespace hopfint {

namespace {

using Rules = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

// Memoized table over index pairs with cycle detection.
class PairMemo {
 public:
  PairMemo(std::size_t rows, std::size_t cols)
      : cols_(cols), val_(rows * cols), state_(rows * cols, 0) {}

  template <typename F>
  const SparseVec& get(std::size_t i, std::size_t j, F&& f) {
    std::size_t k = i * cols_ + j;
    if (state_[k] == 2) return val_[k];
    if (state_[k] == 1) throw ConsistencyFailure("cyclic crossing rules");
    state_[k] = 1;
    SparseVec v = f(i, j);
    val_[k] = std::move(v);
    state_[k] = 2;
    return val_[k];
  }

 private:
  std::size_t cols_;
  std::vector<SparseVec> val_;
  std::vector<int> state_;
};

std::string coef_text(const RatFunc& c) {
  std::string s = c.to_string();
  return c.needs_parens_as_factor() ? "(" + s + ")" : s;
}

}  // namespace

LinearMap extend_crossing(const HopfAlgebraData& left, const WordBasis& wl,
                          const HopfAlgebraData& right, const WordBasis& wr,
                          const Rules& rules) {
  const std::size_t nl = left.dim, nr = right.dim;
  PairMemo memo(nl, nr);
  std::function<SparseVec(std::size_t, std::size_t)> f =
      [&](std::size_t l, std::size_t r) -> SparseVec {
    if (l == wl.unit) return {{r * nl + wl.unit, RatFunc(1)}};
    if (r == wr.unit) return {{wr.unit * nl + l, RatFunc(1)}};
    Accumulator acc(nr * nl);
    if (wl.generator[l] && wr.generator[r]) {
      auto it = rules.find({l, r});
      if (it == rules.end()) {
        throw ConsistencyFailure("no crossing rule for " + left.labels[l] + "(*)" +
                                 right.labels[r]);
      }
      return it->second;
    }
    if (!wl.generator[l]) {
      // Ψ(g·t ⊗ r): cross t first, then g.
      std::size_t g = wl.head[l];
      for (const auto& [t, c] : wl.tail[l]) {
        SparseVec inner = memo.get(t, r, f);
        for (const auto& [rl, c2] : inner) {
          std::size_t r1 = rl / nl, l1 = rl % nl;
          SparseVec outer = memo.get(g, r1, f);
          for (const auto& [rg, c3] : outer) {
            std::size_t r2 = rg / nl, g2 = rg % nl;
            for (const auto& [k, c4] : left.mult.col(g2 * nl + l1)) {
              acc.add(r2 * nl + k, c * c2 * c3 * c4);
            }
          }
        }
      }
      return acc.take();
    }
    // Ψ(l ⊗ h·t): cross h first, then t.
    std::size_t h = wr.head[r];
    SparseVec first = memo.get(l, h, f);
    for (const auto& [hl, c] : first) {
      std::size_t h1 = hl / nl, l1 = hl % nl;
      for (const auto& [t, c2] : wr.tail[r]) {
        SparseVec second = memo.get(l1, t, f);
        for (const auto& [tl, c3] : second) {
          std::size_t t1 = tl / nl, l2 = tl % nl;
          for (const auto& [k, c4] : right.mult.col(h1 * nr + t1)) {
            acc.add(k * nl + l2, c * c2 * c3 * c4);
          }
        }
      }
    }
    return acc.take();
  };
  LinearMap out(nl * nr, nr * nl);
  for (std::size_t l = 0; l < nl; ++l) {
    for (std::size_t r = 0; r < nr; ++r) out.set_col(l * nr + r, memo.get(l, r, f));
  }
  return out;
}

LinearMap extend_smash_cross(const HopfAlgebraData& a, const WordBasis& wa,
                             const HopfAlgebraData& h, const WordBasis& wh,
                             const Rules& rules) {
  const std::size_t na = a.dim, nh = h.dim;
  PairMemo memo(nh, na);
  std::function<SparseVec(std::size_t, std::size_t)> f =
      [&](std::size_t j, std::size_t i) -> SparseVec {
    if (j == wh.unit) return {{i * nh + wh.unit, RatFunc(1)}};
    if (i == wa.unit) return {{wa.unit * nh + j, RatFunc(1)}};
    Accumulator acc(na * nh);
    if (wh.generator[j] && wa.generator[i]) {
      auto it = rules.find({j, i});
      if (it == rules.end()) {
        throw ConsistencyFailure("no smash rule for " + h.labels[j] + "*" + a.labels[i]);
      }
      return it->second;
    }
    if (wh.generator[j]) {
      // e_j (f^g f^t) = Σ f^n (e_m f^t)
      std::size_t g = wa.head[i];
      SparseVec first = memo.get(j, g, f);
      for (const auto& [nm, c] : first) {
        std::size_t fn = nm / nh, em = nm % nh;
        for (const auto& [t, c2] : wa.tail[i]) {
          SparseVec rest = memo.get(em, t, f);
          for (const auto& [ah, c3] : rest) {
            for (const auto& [k, c4] : a.mult.col(fn * na + ah / nh)) {
              acc.add(k * nh + ah % nh, c * c2 * c3 * c4);
            }
          }
        }
      }
      return acc.take();
    }
    // (e_g e_t) f^i = Σ (e_g f^n) e_m
    std::size_t g = wh.head[j];
    for (const auto& [t, c0] : wh.tail[j]) {
      SparseVec inner = memo.get(t, i, f);
      for (const auto& [nm, c] : inner) {
        std::size_t fn = nm / nh, em = nm % nh;
        SparseVec outer = memo.get(g, fn, f);
        for (const auto& [ah, c2] : outer) {
          for (const auto& [k, c3] : h.mult.col((ah % nh) * nh + em)) {
            acc.add((ah / nh) * nh + k, c0 * c * c2 * c3);
          }
        }
      }
    }
    return acc.take();
  };
  LinearMap out(nh * na, na * nh);
  for (std::size_t j = 0; j < nh; ++j) {
    for (std::size_t i = 0; i < na; ++i) out.set_col(j * na + i, memo.get(j, i, f));
  }
  return out;
}

RatFunc q_int(int k) {
  if (k < 0) throw BadParam("q_int of a negative integer");
  return (RatFunc(1) - RatFunc::q_pow(2 * k)) / (RatFunc(1) - RatFunc::q_pow(2));
}

RatFunc q_factorial(int k) {
  RatFunc r(1);
  for (int i = 1; i <= k; ++i) r *= q_int(i);
  return r;
}

RatFunc q_int_inv(int k) {
  if (k < 0) throw BadParam("q_int of a negative integer");
  return (RatFunc(1) - RatFunc::q_pow(-2 * k)) / (RatFunc(1) - RatFunc::q_pow(-2));
}

RatFunc q_factorial_inv(int k) {
  RatFunc r(1);
  for (int i = 1; i <= k; ++i) r *= q_int_inv(i);
  return r;
}

namespace {

RatFunc monomial_sum(int a) {
  RatFunc s;
  for (int k = 0; k <= a; ++k) {
    RatFunc t = RatFunc::q_pow(k * (k - 2 * a + 1)) * q_factorial(a) /
                (q_factorial(k) * q_factorial(a - k));
    s += (k % 2 ? -t : t);
  }
  return s;
}

}  // namespace

RatFunc q_vanishing_sum(int a) {
  if (a < 1) throw BadParam("q_vanishing_sum needs A >= 1");
  RatFunc s = monomial_sum(a);
  if (!s.is_zero()) throw IdentityFailure("A = " + std::to_string(a) + ": " + s.to_string());
  return s;
}

namespace {

BraidedBuild from_compiled(const Compiled& c) {
  if (!c.pair || !c.smash) throw ConsistencyFailure("braided example without a smash product");
  BraidedBuild b;
  b.functions = c.pair->functions();
  b.points = c.pair->points();
  auto braiding_of = [&](const HopfAlgebra& h) {
    if (c.primary.algebra.id() == h.id()) return *c.primary.braiding;
    return *c.dual->braiding;
  };
  b.pair.A = {b.functions.data(), braiding_of(b.functions)};
  b.pair.H = {b.points.data(), braiding_of(b.points)};
  b.pair.pairing = c.pair->pairing();
  b.pair.cross = c.smash->cross();
  b.smash = *c.smash;
  b.warnings = c.warnings;
  return b;
}

std::vector<std::vector<int>> subsets_by_degree(int n) {
  std::vector<std::vector<int>> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int pos, int start) {
      if (pos == r) {
        out.push_back(idx);
        return;
      }
      for (int i = start; i < n; ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

std::string xi(int i) { return "xi" + std::to_string(i + 1); }
std::string sg(int i) { return "sigma" + std::to_string(i + 1); }

std::string word(const std::vector<int>& s, std::string (*name)(int)) {
  if (s.empty()) return "1";
  std::string w;
  for (std::size_t k = 0; k < s.size(); ++k) w += (k ? "*" : "") + name(s[k]);
  return w;
}

}  // namespace

std::string q_plane_source(int n) {
  const std::string lam = coef_text(RatFunc::q_pow(2) - RatFunc(1));
  auto subsets = subsets_by_degree(n);
  std::ostringstream os;
  auto block = [&](const char* kw, const std::string& name, std::string (*g)(int),
                   const std::string& rel, bool lam_first) {
    os << kw << " " << name << " over Q(q)\n";
    os << "generators";
    for (int i = 0; i < n; ++i) os << " " << g(i);
    os << "\nrelations\n";
    for (int i = 0; i < n; ++i) os << "  " << g(i) << "*" << g(i) << " = 0\n";
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        os << "  " << g(j) << "*" << g(i) << " = " << rel << "*" << g(i) << "*" << g(j) << "\n";
      }
    }
    os << "basis";
    for (const auto& s : subsets) os << " " << word(s, g);
    os << "\ncoproduct\n";
    for (int i = 0; i < n; ++i) os << "  " << g(i) << " -> " << g(i) << "(*)1 + 1(*)" << g(i) << "\n";
    os << "counit\n";
    for (int i = 0; i < n; ++i) os << "  " << g(i) << " -> 0\n";
    os << "antipode\n";
    for (int i = 0; i < n; ++i) os << "  " << g(i) << " -> -" << g(i) << "\n";
    os << "braiding\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        os << "  " << g(i) << "(*)" << g(j) << " -> ";
        if (i == j) {
          os << "-" << g(i) << "(*)" << g(i);
        } else if ((i < j) == lam_first) {
          os << "-q*" << g(j) << "(*)" << g(i) << " + " << lam << "*" << g(i) << "(*)" << g(j);
        } else {
          os << "-q*" << g(j) << "(*)" << g(i);
        }
        os << "\n";
      }
    }
  };
  std::string a = "q-plane-" + std::to_string(n);
  std::string h = a + "-dual";
  block("algebra", a, xi, "-q", false);
  block("dual", h, sg, "-q^-1", true);
  os << "smash " << h << " " << a << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      os << "  " << sg(i) << "*" << xi(j) << " = ";
      if (i != j) {
        os << "-q*" << xi(j) << "*" << sg(i);
      } else {
        os << "1 - " << xi(i) << "*" << sg(i);
        for (int m = 0; m < i; ++m) os << " + " << lam << "*" << xi(m) << "*" << sg(m);
      }
      os << "\n";
    }
  }
  return os.str();
}

BraidedBuild build_fermionic_line() {
  return from_compiled(compile(builtin("fermionic-line")));
}

BraidedBuild build_q_fermionic_plane(int n) {
  if (n < 1 || n > 4) throw BadParam("q-plane N must be 1..4");
  BraidedBuild b = from_compiled(compile_text(q_plane_source(n)));
  if (n == 4) b.warnings.push_back("q-plane N = 4 is beyond desk scale");
  return b;
}

TensorElement canonical_element(const DualPair& p) {
  TensorElement t{p.functions().dim(), p.points().dim(), {}};
  t.coeff.resize(t.rows * t.cols);
  for (std::size_t j = 0; j < t.rows; ++j) {
    for (std::size_t i = 0; i < t.cols; ++i) t.at(j, i) = p.pairing_inverse()(j, i);
  }
  return t;
}

namespace {

// Head/tail split of ordered-monomial labels such as "xi1*xi2".
WordBasis word_basis(const HopfAlgebra& h) {
  WordBasis wb;
  const std::size_t n = h.dim();
  wb.unit = *h.unit_index();
  wb.generator.assign(n, false);
  wb.head.assign(n, 0);
  wb.tail.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    if (i == wb.unit) continue;
    const std::string& l = h.label(i);
    auto star = l.find('*');
    if (star == std::string::npos) {
      wb.generator[i] = true;
      wb.head[i] = i;
      continue;
    }
    auto g = h.index_of(l.substr(0, star));
    auto t = h.index_of(l.substr(star + 1));
    if (!g || !t) throw NotPresentable("label " + l);
    wb.head[i] = *g;
    wb.tail[i] = {{*t, RatFunc(1)}};
  }
  return wb;
}

std::size_t label_index(const HopfAlgebra& h, const std::string& l) {
  auto i = h.index_of(l);
  if (!i) throw NotPresentable("label " + l);
  return *i;
}

}  // namespace

TensorElement qexp_canonical_element(const BraidedBuild& b, int n) {
  const HopfAlgebra& A = b.functions;
  const HopfAlgebra& H = b.points;
  const std::size_t na = A.dim(), nh = H.dim();
  // Mixed braiding H⊗A -> A⊗H on generators.
  Rules rules;
  const RatFunc qi = RatFunc::q_pow(-1);
  const RatFunc lam = RatFunc::q() - qi;
  for (int i = 0; i < n; ++i) {
    std::size_t si = label_index(H, sg(i));
    for (int j = 0; j < n; ++j) {
      std::size_t xj = label_index(A, xi(j));
      Accumulator acc(na * nh);
      if (i != j) {
        acc.add(xj * nh + si, -qi);
      } else {
        acc.add(xj * nh + si, RatFunc(-1));
        for (int m = i + 1; m < n; ++m) {
          acc.add(label_index(A, xi(m)) * nh + label_index(H, sg(m)), -qi * lam);
        }
      }
      rules[{si, xj}] = acc.take();
    }
  }
  LinearMap mixed = extend_crossing(H.data(), word_basis(H), A.data(), word_basis(A), rules);

  auto tmul = [&](const SparseVec& u, const SparseVec& v) {
    Accumulator acc(na * nh);
    for (const auto& [ah, c1] : u) {
      std::size_t a = ah / nh, h = ah % nh;
      for (const auto& [bg, c2] : v) {
        std::size_t bb = bg / nh, g = bg % nh;
        for (const auto& [xy, c3] : mixed.col(h * na + bb)) {
          std::size_t x = xy / nh, y = xy % nh;
          for (const auto& [l, c4] : A.mult().col(a * na + x)) {
            for (const auto& [r, c5] : H.mult().col(y * nh + g)) {
              acc.add(l * nh + r, c1 * c2 * c3 * c4 * c5);
            }
          }
        }
      }
    }
    return acc.take();
  };
  SparseVec x;
  {
    Accumulator acc(na * nh);
    for (int i = 0; i < n; ++i) {
      acc.add(label_index(A, xi(i)) * nh + label_index(H, sg(i)), RatFunc(1));
    }
    x = acc.take();
  }
  const std::size_t u = A.unit_index().value() * nh + H.unit_index().value();
  SparseVec power{{u, RatFunc(1)}};
  SparseVec sum = power;
  for (int k = 1; k <= n; ++k) {
    power = tmul(power, x);
    sum = sparse_add(sum, sparse_scale(power, q_factorial_inv(k).inverse()));
  }
  TensorElement t{na, nh, dense_from_sparse(sum, na * nh)};
  return t;
}

QPlaneReport verify_qplane_closed_forms(const BraidedBuild& b, int n,
                                        const ProjectorPair& proj) {
  if (n < 1 || n > 3) throw BadParam("closed forms are checked for N = 1..3");
  const SmashAlgebra& s = b.smash;
  const HopfAlgebra& A = b.functions;
  const HopfAlgebra& H = b.points;
  QPlaneReport rep;
  auto xe = [&](int i) {
    return s.embed(Factor::kFunctions, basis_element(A, label_index(A, xi(i))));
  };
  auto se = [&](int i) {
    return s.embed(Factor::kPoints, basis_element(H, label_index(H, sg(i))));
  };
  auto subsets = subsets_by_degree(n);

  // E = Σ_k (-1)^k/[k]_{q^-1}! Σ_{distinct i_1..i_k} ξ_{i_1..i_k} σ_{i_k..i_1}
  SmashElement e = s.unit();
  std::vector<SmashElement> kterms(subsets.size(), s.zero());  // K_I for Ē
  for (std::size_t si = 1; si < subsets.size(); ++si) {
    std::vector<int> perm = subsets[si];
    const int k = static_cast<int>(perm.size());
    RatFunc ce = RatFunc(k % 2 ? -1 : 1) / q_factorial_inv(k);
    RatFunc cb = RatFunc(k % 2 ? -1 : 1) * RatFunc::q_pow(k) / q_factorial(k);
    do {
      SmashElement xs = s.unit(), sr = s.unit();
      for (int i : perm) xs = s.mul(xs, xe(i));
      for (auto it = perm.rbegin(); it != perm.rend(); ++it) sr = s.mul(sr, se(*it));
      e = e + ce * s.mul(xs, sr);
      kterms[si] = kterms[si] + cb * s.mul(sr, xs);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  rep.e_matches = e == proj.E;
  if (!rep.e_matches) throw ClosedFormMismatch("E");

  // Ē = Σ_I m_I K_I with m_∅ = 1; fit m, read d_i = m_{i}.
  const std::size_t unknowns = subsets.size() - 1;
  Matrix m(s.dim(), unknowns);
  std::vector<RatFunc> rhs(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    rhs[r] = proj.Ebar.coeff[r] - s.unit().coeff[r];
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = kterms[c + 1].coeff[r];
  }
  auto sol = solve(m, rhs);
  if (!sol) throw ClosedFormMismatch("Ebar");
  for (const auto& v : nullspace(m)) {
    for (int i = 0; i < n; ++i) {
      if (!v[static_cast<std::size_t>(i)].is_zero()) throw ClosedFormMismatch("Ebar: D undetermined");
    }
  }
  rep.d.assign(sol->begin(), sol->begin() + n);
  SmashElement eb = s.unit();
  for (std::size_t si = 1; si < subsets.size(); ++si) {
    RatFunc prod(1);
    for (int i : subsets[si]) prod *= rep.d[static_cast<std::size_t>(i)];
    eb = eb + prod * kterms[si];
  }
  rep.d_found = eb == proj.Ebar;
  if (!rep.d_found) throw ClosedFormMismatch("Ebar");

  // Monomial integrals.
  rep.low_degree_zero = true;
  rep.all_constant = true;
  rep.monomial_sums = true;
  for (const auto& sub : subsets) {
    std::size_t idx = label_index(A, word(sub, xi));
    Element mono = basis_element(A, idx);
    IntegralResult r = vacuum_integral_A(s, proj, mono);
    rep.values.push_back(r.value);
    const int deg = static_cast<int>(sub.size());
    if (deg < n && !r.value.is_zero()) rep.low_degree_zero = false;
    if (deg == n) rep.top_nonzero = !r.value.is_zero();
    if (!r.value.is_constant()) rep.all_constant = false;
    SmashElement me = s.embed(Factor::kFunctions, mono);
    RatFunc expect = monomial_sum(n - deg);
    if (*r.realization != expect * s.mul(me, proj.E)) rep.monomial_sums = false;
  }
  if (!rep.low_degree_zero || !rep.top_nonzero) throw ClosedFormMismatch("monomial integral");
  if (!rep.all_constant) throw ClosedFormMismatch("q-independence");
  if (!rep.monomial_sums) throw ClosedFormMismatch("monomial sum");
  return rep;
}

}  // namespace hopfint
