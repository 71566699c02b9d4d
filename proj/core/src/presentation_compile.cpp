#include <cstdlib>
#include <functional>
#include <set>

#include "hopfint/braided.hpp"
#include "hopfint/errors.hpp"
#include "hopfint/presentation.hpp"

namespace hopfint {

namespace {

using Word = std::vector<int>;
using WordPoly = std::map<Word, RatFunc>;
using TensorPoly = std::map<std::pair<Word, Word>, RatFunc>;

void add_to(WordPoly& p, const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  RatFunc& slot = p[w];
  slot += c;
  if (slot.is_zero()) p.erase(w);
}

WordPoly scaled(const WordPoly& p, const RatFunc& c) {
  WordPoly r;
  for (const auto& [w, v] : p) add_to(r, w, v * c);
  return r;
}

WordPoly product(const WordPoly& a, const WordPoly& b) {
  WordPoly r;
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_to(r, w, c * d);
    }
  }
  return r;
}

bool is_scalar(const WordPoly& p) {
  return p.empty() || (p.size() == 1 && p.begin()->first.empty());
}

RatFunc scalar_of(const WordPoly& p) {
  return p.empty() ? RatFunc() : p.begin()->second;
}

bool has_tensor(const Expr& e) {
  if (e.kind == Expr::Kind::kTensor) return true;
  for (const Expr& k : e.kids) {
    if (has_tensor(k)) return true;
  }
  return false;
}

// Names visible to an expression, mapped to symbol ids.
struct Symbols {
  std::map<std::string, int> ids;
  bool q = false;
};

WordPoly eval(const Expr& e, const Symbols& s) {
  switch (e.kind) {
    case Expr::Kind::kNum:
      return {{Word{}, RatFunc(Rational(e.text))}};
    case Expr::Kind::kSym: {
      if (e.text == "q" && s.q) return {{Word{}, RatFunc::q()}};
      auto it = s.ids.find(e.text);
      if (it == s.ids.end()) throw UnknownSymbol(e.line, e.col, e.text);
      return {{Word{it->second}, RatFunc(1)}};
    }
    case Expr::Kind::kNeg:
      return scaled(eval(e.kids[0], s), RatFunc(-1));
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub: {
      WordPoly r = eval(e.kids[0], s);
      RatFunc sign(e.kind == Expr::Kind::kAdd ? 1 : -1);
      for (const auto& [w, c] : eval(e.kids[1], s)) add_to(r, w, sign * c);
      return r;
    }
    case Expr::Kind::kMul:
      return product(eval(e.kids[0], s), eval(e.kids[1], s));
    case Expr::Kind::kDiv: {
      WordPoly d = eval(e.kids[1], s);
      if (!is_scalar(d)) throw SyntaxError(e.line, e.col, "scalar divisor");
      if (d.empty()) throw DivisionByZero(format_expr(e));
      return scaled(eval(e.kids[0], s), scalar_of(d).inverse());
    }
    case Expr::Kind::kPow: {
      WordPoly b = eval(e.kids[0], s);
      if (e.exponent < 0) {
        if (!is_scalar(b)) throw SyntaxError(e.line, e.col, "scalar base for a negative power");
        if (b.empty()) throw DivisionByZero(format_expr(e));
        b = {{Word{}, scalar_of(b).inverse()}};
      }
      WordPoly r{{Word{}, RatFunc(1)}};
      for (long k = 0; k < std::labs(e.exponent); ++k) r = product(r, b);
      return r;
    }
    case Expr::Kind::kTensor:
      throw SyntaxError(e.line, e.col, "expression without (*)");
  }
  return {};
}

TensorPoly eval_tensor(const Expr& e, const Symbols& s) {
  auto scale = [](TensorPoly t, const RatFunc& c) {
    TensorPoly r;
    for (auto& [k, v] : t) {
      RatFunc x = v * c;
      if (!x.is_zero()) r[k] = x;
    }
    return r;
  };
  switch (e.kind) {
    case Expr::Kind::kTensor: {
      TensorPoly r;
      for (const auto& [u, c] : eval(e.kids[0], s)) {
        for (const auto& [v, d] : eval(e.kids[1], s)) {
          RatFunc& slot = r[{u, v}];
          slot += c * d;
          if (slot.is_zero()) r.erase({u, v});
        }
      }
      return r;
    }
    case Expr::Kind::kNeg:
      return scale(eval_tensor(e.kids[0], s), RatFunc(-1));
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub: {
      TensorPoly r = eval_tensor(e.kids[0], s);
      RatFunc sign(e.kind == Expr::Kind::kAdd ? 1 : -1);
      for (const auto& [k, c] : eval_tensor(e.kids[1], s)) {
        RatFunc& slot = r[k];
        slot += sign * c;
        if (slot.is_zero()) r.erase(k);
      }
      return r;
    }
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv: {
      bool left = has_tensor(e.kids[0]);
      const Expr& t = left ? e.kids[0] : e.kids[1];
      const Expr& c = left ? e.kids[1] : e.kids[0];
      if (!has_tensor(t) || has_tensor(c) || (e.kind == Expr::Kind::kDiv && !left)) break;
      WordPoly k = eval(c, s);
      if (!is_scalar(k)) throw SyntaxError(c.line, c.col, "scalar factor");
      RatFunc f = scalar_of(k);
      if (e.kind == Expr::Kind::kDiv) {
        if (f.is_zero()) throw DivisionByZero(format_expr(e));
        f = f.inverse();
      }
      return scale(eval_tensor(t, s), f);
    }
    default:
      break;
  }
  throw SyntaxError(e.line, e.col, "tensor expression with (*)");
}

std::string word_text(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (i ? "*" : "") + names[static_cast<std::size_t>(w[i])];
  }
  return s;
}

// Rewriting system and basis of one algebra block. Symbol ids are offset so
// that two blocks can share a namespace.
struct WordAlgebra {
  const AlgebraBlock* block = nullptr;
  int offset = 0;
  Symbols syms;
  std::vector<std::pair<Word, WordPoly>> rules;
  std::vector<Word> basis;
  std::map<Word, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  std::string text(const Word& w) const {
    return word_text(w, block->generators);
  }

  static std::optional<std::size_t> match(const Word& u, const Word& lhs) {
    if (lhs.size() > u.size()) return std::nullopt;
    for (std::size_t p = 0; p + lhs.size() <= u.size(); ++p) {
      if (std::equal(lhs.begin(), lhs.end(), u.begin() + static_cast<long>(p))) return p;
    }
    return std::nullopt;
  }

  // Normal form in the basis of a word in local ids. Leftmost or rightmost
  // match first.
  SparseVec normal(const Word& w, bool leftmost = true) const {
    Accumulator acc(dim());
    std::vector<std::pair<Word, RatFunc>> work{{w, RatFunc(1)}};
    std::size_t steps = 0;
    while (!work.empty()) {
      auto [u, c] = std::move(work.back());
      work.pop_back();
      bool hit = false;
      std::size_t n = u.size();
      for (std::size_t k = 0; k < n && !hit; ++k) {
        std::size_t p = leftmost ? k : n - 1 - k;
        for (const auto& [lhs, rhs] : rules) {
          if (p + lhs.size() > n ||
              !std::equal(lhs.begin(), lhs.end(), u.begin() + static_cast<long>(p))) {
            continue;
          }
          if (++steps > kRewriteBudget) {
            throw NonTerminatingRewrite(text(w) + " after " +
                                        std::to_string(kRewriteBudget) + " steps");
          }
          for (const auto& [r, rc] : rhs) {
            Word v(u.begin(), u.begin() + static_cast<long>(p));
            v.insert(v.end(), r.begin(), r.end());
            v.insert(v.end(), u.begin() + static_cast<long>(p + lhs.size()), u.end());
            work.emplace_back(std::move(v), c * rc);
          }
          hit = true;
          break;
        }
      }
      if (hit) continue;
      auto it = index.find(u);
      if (it == index.end()) throw BasisEscape(text(u) + " from " + text(w));
      acc.add(it->second, c);
    }
    return acc.take();
  }

  SparseVec normal_poly(const WordPoly& p) const {
    Accumulator acc(dim());
    for (const auto& [w, c] : p) {
      Word local = w;
      for (int& x : local) x -= offset;
      for (const auto& [k, v] : normal(local)) acc.add(k, c * v);
    }
    return acc.take();
  }

  std::size_t gen_index(const std::string& g) const {
    Word w{syms.ids.at(g) - offset};
    auto it = index.find(w);
    if (it == index.end()) throw ConsistencyFailure("generator " + g + " is not a basis word");
    return it->second;
  }
};

WordAlgebra make_word_algebra(const AlgebraBlock& b, int offset) {
  WordAlgebra wa;
  wa.block = &b;
  wa.offset = offset;
  wa.syms.q = b.uses_q;
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    wa.syms.ids[b.generators[i]] = offset + static_cast<int>(i);
  }
  std::map<std::string, int> local;
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    local[b.generators[i]] = static_cast<int>(i);
  }
  if (b.basis.empty() || !b.basis[0].empty()) {
    throw ConsistencyFailure(b.name + ": basis must start with 1");
  }
  for (const auto& w : b.basis) {
    Word word;
    for (const auto& g : w) word.push_back(local.at(g));
    if (wa.index.count(word)) throw ConsistencyFailure("duplicate basis word " + wa.text(word));
    wa.index[word] = wa.basis.size();
    wa.basis.push_back(word);
  }
  Symbols ls{local, b.uses_q};
  for (const auto& r : b.relations) {
    WordPoly lhs = eval(r.lhs, ls);
    if (lhs.size() != 1 || !lhs.begin()->second.is_one() || lhs.begin()->first.empty()) {
      throw SyntaxError(r.lhs.line, r.lhs.col, "generator word on the left");
    }
    const Word& w = lhs.begin()->first;
    if (wa.index.count(w)) {
      throw ConsistencyFailure("relation left side " + wa.text(w) + " is a basis word");
    }
    wa.rules.emplace_back(w, eval(r.rhs, ls));
  }
  for (const Word& w : wa.basis) {
    for (const auto& rule : wa.rules) {
      if (WordAlgebra::match(w, rule.first)) {
        throw ConsistencyFailure("basis word " + wa.text(w) + " is reducible");
      }
    }
  }
  return wa;
}

// (a⊗b)(c⊗d) = a·Ψ(b⊗c)·d, with Ψ the flip when psi is null.
SparseVec tensor_mul(const HopfAlgebraData& d, const LinearMap* psi,
                     const SparseVec& x, const SparseVec& y) {
  const std::size_t n = d.dim;
  Accumulator acc(n * n);
  for (const auto& [ab, c1] : x) {
    std::size_t a = ab / n, b = ab % n;
    for (const auto& [cd, c2] : y) {
      std::size_t cc = cd / n, dd = cd % n;
      SparseVec crossed = psi ? psi->col(b * n + cc)
                              : SparseVec{{cc * n + b, RatFunc(1)}};
      for (const auto& [uv, c3] : crossed) {
        std::size_t u = uv / n, v = uv % n;
        for (const auto& [l, c4] : d.mult.col(a * n + u)) {
          for (const auto& [r, c5] : d.mult.col(v * n + dd)) {
            acc.add(l * n + r, c1 * c2 * c3 * c4 * c5);
          }
        }
      }
    }
  }
  return acc.take();
}

SparseVec elem_mul(const HopfAlgebraData& d, const SparseVec& x,
                   const SparseVec& y) {
  const std::size_t n = d.dim;
  Accumulator acc(n);
  for (const auto& [i, c] : x) {
    for (const auto& [j, e] : y) {
      for (const auto& [k, f] : d.mult.col(i * n + j)) acc.add(k, c * e * f);
    }
  }
  return acc.take();
}

struct BlockResult {
  WordAlgebra words;
  WordBasis wb;
  HopfAlgebraData data;
  std::optional<LinearMap> psi;
  std::vector<std::string> warnings;
};

const GenRule* find_rule(const std::vector<GenRule>& rules, const std::string& g,
                         const char* what) {
  const GenRule* hit = nullptr;
  for (const auto& r : rules) {
    if (r.gen != g) continue;
    if (hit) throw ConsistencyFailure(std::string("duplicate ") + what + " for " + g);
    hit = &r;
  }
  if (!hit) throw ConsistencyFailure(std::string("no ") + what + " for " + g);
  return hit;
}

// Memoized recursion over basis indices with cycle detection.
template <typename T>
class Memo {
 public:
  explicit Memo(std::size_t n) : val_(n), state_(n, 0) {}
  const T& get(std::size_t i, const std::function<T(std::size_t)>& f,
               const char* what) {
    if (state_[i] == 2) return val_[i];
    if (state_[i] == 1) throw ConsistencyFailure(std::string("cyclic ") + what);
    state_[i] = 1;
    val_[i] = f(i);
    state_[i] = 2;
    return val_[i];
  }

 private:
  std::vector<T> val_;
  std::vector<int> state_;
};

BlockResult compile_block(const AlgebraBlock& b, int offset) {
  BlockResult out{make_word_algebra(b, offset), {}, {}, {}, {}};
  const WordAlgebra& wa = out.words;
  const std::size_t n = wa.dim();
  std::vector<std::string> labels;
  for (const Word& w : wa.basis) labels.push_back(wa.text(w));
  HopfAlgebraData d = HopfAlgebraData::zeros(n, labels);

  std::vector<SparseVec> prods(n * n);
  parallel_for(n * n, [&](std::size_t ij) {
    Word w = wa.basis[ij / n];
    const Word& v = wa.basis[ij % n];
    w.insert(w.end(), v.begin(), v.end());
    prods[ij] = wa.normal(w);
  });
  for (std::size_t ij = 0; ij < n * n; ++ij) d.mult.set_col(ij, prods[ij]);
  for (std::size_t ij = 0; ij < n * n; ++ij) {
    Word w = wa.basis[ij / n];
    const Word& v = wa.basis[ij % n];
    w.insert(w.end(), v.begin(), v.end());
    if (wa.normal(w, false) != prods[ij]) {
      out.warnings.push_back("ConfluenceWarning: " + b.name + ": " + wa.text(w));
    }
  }

  WordBasis& wb = out.wb;
  wb.unit = 0;
  wb.generator.assign(n, false);
  wb.head.assign(n, 0);
  wb.tail.assign(n, {});
  for (std::size_t i = 1; i < n; ++i) {
    const Word& w = wa.basis[i];
    if (w.size() == 1) {
      wb.generator[i] = true;
      wb.head[i] = i;
      continue;
    }
    wb.head[i] = wa.gen_index(b.generators[static_cast<std::size_t>(w[0])]);
    wb.tail[i] = wa.normal(Word(w.begin() + 1, w.end()));
  }
  for (const auto& g : b.generators) wa.gen_index(g);
  std::map<std::size_t, std::string> gen_of;
  for (const auto& g : b.generators) gen_of[wa.gen_index(g)] = g;

  if (!b.braiding.empty()) {
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> rules;
    for (const auto& r : b.braiding) {
      auto key = std::make_pair(wa.gen_index(r.left), wa.gen_index(r.right));
      if (rules.count(key)) {
        throw ConsistencyFailure("duplicate braiding for " + r.left + "(*)" + r.right);
      }
      Accumulator acc(n * n);
      for (const auto& [uv, c] : eval_tensor(r.rhs, wa.syms)) {
        for (const auto& [i, ci] : wa.normal_poly({{uv.first, RatFunc(1)}})) {
          for (const auto& [j, cj] : wa.normal_poly({{uv.second, RatFunc(1)}})) {
            acc.add(i * n + j, c * ci * cj);
          }
        }
      }
      rules[key] = acc.take();
    }
    out.psi = extend_crossing(d, wb, d, wb, rules);
  }
  const LinearMap* psi = out.psi ? &*out.psi : nullptr;

  // counit
  Memo<RatFunc> eps(n);
  std::function<RatFunc(std::size_t)> eps_of = [&](std::size_t i) -> RatFunc {
    if (i == wb.unit) return RatFunc(1);
    if (wb.generator[i]) {
      const GenRule* r = find_rule(b.counit, gen_of.at(i), "counit");
      WordPoly v = eval(r->rhs, wa.syms);
      if (!is_scalar(v)) throw SyntaxError(r->rhs.line, r->rhs.col, "scalar counit");
      return scalar_of(v);
    }
    RatFunc t;
    for (const auto& [k, c] : wb.tail[i]) t += c * eps.get(k, eps_of, "counit");
    return eps.get(wb.head[i], eps_of, "counit") * t;
  };
  for (std::size_t i = 0; i < n; ++i) d.counit[i] = eps.get(i, eps_of, "counit");

  // coproduct
  Memo<SparseVec> cop(n);
  std::function<SparseVec(std::size_t)> cop_of = [&](std::size_t i) -> SparseVec {
    if (i == wb.unit) return {{wb.unit * n + wb.unit, RatFunc(1)}};
    if (wb.generator[i]) {
      const GenRule* r = find_rule(b.coproduct, gen_of.at(i), "coproduct");
      Accumulator acc(n * n);
      for (const auto& [uv, c] : eval_tensor(r->rhs, wa.syms)) {
        for (const auto& [x, cx] : wa.normal_poly({{uv.first, RatFunc(1)}})) {
          for (const auto& [y, cy] : wa.normal_poly({{uv.second, RatFunc(1)}})) {
            acc.add(x * n + y, c * cx * cy);
          }
        }
      }
      return acc.take();
    }
    Accumulator acc(n * n);
    SparseVec head = cop.get(wb.head[i], cop_of, "coproduct");
    for (const auto& [k, c] : wb.tail[i]) {
      SparseVec t = sparse_scale(cop.get(k, cop_of, "coproduct"), c);
      for (const auto& [jk, v] : tensor_mul(d, psi, head, t)) acc.add(jk, v);
    }
    return acc.take();
  };
  for (std::size_t i = 0; i < n; ++i) d.comult.set_col(i, cop.get(i, cop_of, "coproduct"));

  // antipode: S(g·t) = m(S⊗S)Ψ(g⊗t)
  Memo<SparseVec> ant(n);
  std::function<SparseVec(std::size_t)> ant_of = [&](std::size_t i) -> SparseVec {
    if (i == wb.unit) return {{wb.unit, RatFunc(1)}};
    if (wb.generator[i]) {
      const GenRule* r = find_rule(b.antipode, gen_of.at(i), "antipode");
      return wa.normal_poly(eval(r->rhs, wa.syms));
    }
    Accumulator acc(n);
    std::size_t g = wb.head[i];
    for (const auto& [k, c] : wb.tail[i]) {
      SparseVec crossed = psi ? psi->col(g * n + k) : SparseVec{{k * n + g, RatFunc(1)}};
      for (const auto& [uv, c2] : crossed) {
        SparseVec su = ant.get(uv / n, ant_of, "antipode");
        SparseVec sv = ant.get(uv % n, ant_of, "antipode");
        for (const auto& [x, v] : elem_mul(d, su, sv)) acc.add(x, c * c2 * v);
      }
    }
    return acc.take();
  };
  for (std::size_t i = 0; i < n; ++i) d.antipode.set_col(i, ant.get(i, ant_of, "antipode"));

  out.data = std::move(d);
  return out;
}

HopfAlgebra validate(const BlockResult& r) {
  if (!r.psi) return HopfAlgebra::build(r.data);
  AxiomReport rep = check_braided_axioms({r.data, *r.psi});
  if (const AxiomResult* f = rep.first_failure()) throw AxiomViolation(f->name, f->witness);
  return HopfAlgebra::adopt(r.data);
}

// Basis index of a pairing entry word.
std::size_t single_basis(const WordAlgebra& wa, const Expr& e) {
  SparseVec v = wa.normal_poly(eval(e, wa.syms));
  if (v.size() != 1 || !v[0].second.is_one()) throw SyntaxError(e.line, e.col, "basis word");
  return v[0].first;
}

}  // namespace

Compiled compile(const PresentationAST& ast) {
  Compiled c;
  BlockResult prim = compile_block(ast.algebra, 0);
  std::optional<BlockResult> dual;
  if (ast.dual) {
    dual = compile_block(*ast.dual, static_cast<int>(ast.algebra.generators.size()));
  }
  c.primary = {ast.algebra.name, validate(prim), prim.psi};
  c.warnings = prim.warnings;
  if (dual) {
    c.dual = CompiledAlgebra{ast.dual->name, validate(*dual), dual->psi};
    c.warnings.insert(c.warnings.end(), dual->warnings.begin(), dual->warnings.end());
  }

  auto pick = [&](const std::string& name)
      -> std::pair<const BlockResult*, const CompiledAlgebra*> {
    if (name == ast.algebra.name) return {&prim, &c.primary};
    if (dual && name == ast.dual->name) return {&*dual, &*c.dual};
    throw UnknownSymbol(0, 0, name);
  };
  const DualPair::Check check =
      c.braided() ? DualPair::Check::kNondegenerate : DualPair::Check::kFull;

  std::optional<Matrix> pairing;
  const BlockResult* hb = nullptr;
  const BlockResult* ab = nullptr;
  const CompiledAlgebra* hc = nullptr;
  const CompiledAlgebra* ac = nullptr;
  if (ast.pairing) {
    std::tie(hb, hc) = pick(ast.pairing->points);
    std::tie(ab, ac) = pick(ast.pairing->functions);
    if (hb == ab) throw ConsistencyFailure("pairing of an algebra with itself");
    const std::size_t nh = hb->words.dim(), na = ab->words.dim();
    Matrix p(nh, na);
    if (ast.pairing->identity) {
      if (nh != na) throw ShapeMismatch("identity pairing");
      p = Matrix::identity(nh);
    } else {
      for (std::size_t j = 0; j < na; ++j) p(0, j) = ab->data.counit[j];
      for (std::size_t i = 0; i < nh; ++i) p(i, 0) = hb->data.counit[i];
    }
    Symbols scalars{{}, hb->words.syms.q || ab->words.syms.q};
    for (const auto& en : ast.pairing->entries) {
      WordPoly v = eval(en.value, scalars);
      p(single_basis(hb->words, en.point), single_basis(ab->words, en.function)) =
          scalar_of(v);
    }
    pairing = std::move(p);
    c.pairing_explicit = true;
  }

  std::optional<LinearMap> cross;
  if (ast.smash) {
    auto [h2, hc2] = pick(ast.smash->points);
    auto [a2, ac2] = pick(ast.smash->functions);
    if (hb && (h2 != hb || a2 != ab)) {
      throw ConsistencyFailure("smash and pairing name different factors");
    }
    hb = h2, ab = a2, hc = hc2, ac = ac2;
    const std::size_t nh = hb->words.dim(), na = ab->words.dim();
    Symbols both = ab->words.syms;
    for (const auto& [k, v] : hb->words.syms.ids) both.ids[k] = v;
    both.q = ab->words.syms.q || hb->words.syms.q;
    const int a_lo = ab->words.offset;
    const int a_hi = a_lo + static_cast<int>(ab->words.block->generators.size());
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> rules;
    for (const auto& r : ast.smash->rules) {
      auto key = std::make_pair(hb->words.gen_index(r.left), ab->words.gen_index(r.right));
      if (rules.count(key)) {
        throw ConsistencyFailure("duplicate smash rule " + r.left + "*" + r.right);
      }
      Accumulator acc(na * nh);
      for (const auto& [w, coef] : eval(r.rhs, both)) {
        std::size_t split = 0;
        while (split < w.size() && w[split] >= a_lo && w[split] < a_hi) ++split;
        for (std::size_t k = split; k < w.size(); ++k) {
          if (w[k] >= a_lo && w[k] < a_hi) {
            throw SyntaxError(r.rhs.line, r.rhs.col, "normal order, functions before points");
          }
        }
        Word aw(w.begin(), w.begin() + static_cast<long>(split));
        Word hw(w.begin() + static_cast<long>(split), w.end());
        for (const auto& [i, ci] : ab->words.normal_poly({{aw, RatFunc(1)}})) {
          for (const auto& [j, cj] : hb->words.normal_poly({{hw, RatFunc(1)}})) {
            acc.add(i * nh + j, coef * ci * cj);
          }
        }
      }
      rules[key] = acc.take();
    }
    cross = extend_smash_cross(ab->data, ab->wb, hb->data, hb->wb, rules);
    c.smash_explicit = true;
  }

  if (pairing) c.pair = DualPair::make(ac->algebra, hc->algebra, *pairing, check);
  if (cross) {
    if (c.pair && !c.braided()) {
      if (cross_from_pair(*c.pair) != *cross) {
        throw ConsistencyFailure("smash rules disagree with the pairing");
      }
      c.smash = SmashAlgebra::from_pair(*c.pair);
    } else {
      c.smash = SmashAlgebra::from_cross(ac->algebra, hc->algebra, *cross);
      Matrix vac = c.smash->vacuum_pairing();
      if (c.pair) {
        if (!(vac == c.pair->pairing())) {
          throw ConsistencyFailure("pairing disagrees with the smash vacuum expectation");
        }
      } else {
        c.pair = DualPair::make(ac->algebra, hc->algebra, vac, check);
      }
    }
  } else if (c.pair && !c.braided()) {
    c.smash = SmashAlgebra::from_pair(*c.pair);
  } else if (c.pair) {
    c.warnings.push_back("braided pair without smash rules");
  }
  if (c.dual && !c.pair) c.warnings.push_back("dual algebra without pairing");
  return c;
}

Compiled compile_text(const std::string& text) { return compile(parse(text)); }

}  // namespace hopfint
