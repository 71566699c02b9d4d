#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "hopfint/braided.hpp"
#include "hopfint/errors.hpp"
#include "hopfint/presentation.hpp"

namespace hopfint {

namespace {

// One signed term of a sum; `word` is "1" for the unit.
void append_term(std::string& out, const RatFunc& c, const std::string& word) {
  if (c.is_zero()) return;
  bool neg = c.has_negative_sign();
  RatFunc a = neg ? -c : c;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (word == "1") {
    std::string s = a.to_string();
    out += a.needs_parens_as_factor() ? "(" + s + ")" : s;
  } else if (a.is_one()) {
    out += word;
  } else {
    std::string s = a.to_string();
    out += (a.needs_parens_as_factor() ? "(" + s + ")" : s) + "*" + word;
  }
}

std::string sum_text(const SparseVec& v, const std::function<std::string(std::size_t)>& word) {
  std::string out;
  for (const auto& [k, c] : v) append_term(out, c, word(k));
  return out.empty() ? "0" : out;
}

std::vector<std::string> split_word(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : label) {
    if (ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool contains(const std::vector<std::string>& w, const std::vector<std::string>& sub) {
  if (sub.size() > w.size()) return false;
  for (std::size_t p = 0; p + sub.size() <= w.size(); ++p) {
    if (std::equal(sub.begin(), sub.end(), w.begin() + static_cast<long>(p))) return true;
  }
  return false;
}

std::string join(const std::vector<std::string>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i];
  return s;
}

bool uses_q(const LinearMap& m) {
  for (std::size_t c = 0; c < m.in_dim(); ++c) {
    for (const auto& [k, v] : m.col(c)) {
      if (!v.is_constant()) return true;
    }
  }
  return false;
}

bool uses_q(const HopfAlgebraData& d, const std::optional<LinearMap>& psi) {
  if (uses_q(d.mult) || uses_q(d.comult) || uses_q(d.antipode)) return true;
  for (const auto& c : d.counit) {
    if (!c.is_constant()) return true;
  }
  return psi && uses_q(*psi);
}

struct Words {
  std::vector<std::vector<std::string>> words;
  std::vector<std::size_t> generators;  // basis indices of single symbols
  std::vector<std::string> names;
};

Words monomial_labels(const HopfAlgebra& h) {
  const auto& labels = h.labels();
  if (labels.empty() || labels[0] != "1") throw NotPresentable("first basis label must be 1");
  Words w;
  w.words.emplace_back();
  for (std::size_t i = 1; i < labels.size(); ++i) {
    auto parts = split_word(labels[i]);
    for (const auto& p : parts) {
      if (!is_identifier(p) || p == "q") throw NotPresentable("label " + labels[i]);
    }
    if (parts.size() == 1) {
      w.generators.push_back(i);
      w.names.push_back(parts[0]);
    }
    w.words.push_back(std::move(parts));
  }
  std::set<std::vector<std::string>> seen(w.words.begin(), w.words.end());
  if (seen.size() != w.words.size()) throw NotPresentable("repeated basis label");
  for (std::size_t i = 1; i < w.words.size(); ++i) {
    for (const auto& g : w.words[i]) {
      if (std::find(w.names.begin(), w.names.end(), g) == w.names.end()) {
        throw NotPresentable("label " + labels[i] + " uses a non-generator");
      }
    }
  }
  return w;
}

std::size_t label_of(const Words& w, const std::vector<std::string>& word) {
  auto it = std::find(w.words.begin(), w.words.end(), word);
  return static_cast<std::size_t>(it - w.words.begin());
}

// Block source of one algebra under the given header keyword.
std::string block_source(const HopfAlgebra& h, const std::string& keyword,
                         const std::string& name, const std::optional<LinearMap>& psi) {
  const Words w = monomial_labels(h);
  const std::size_t n = h.dim();
  const auto& labels = h.labels();
  auto word = [&](std::size_t k) { return labels[k]; };
  auto tensor_word = [&](std::size_t jk) {
    return labels[jk / n] + "(*)" + labels[jk % n];
  };

  // Every basis word must be the product of its letters.
  for (std::size_t i = 1; i < n; ++i) {
    const auto& ws = w.words[i];
    if (ws.size() == 1) continue;
    std::vector<std::string> head(ws.begin(), ws.end() - 1);
    std::size_t hi = label_of(w, head);
    std::size_t gi = label_of(w, {ws.back()});
    if (hi == n) throw NotPresentable("prefix of " + labels[i] + " is not a basis word");
    const SparseVec& p = h.product(hi, gi);
    if (p.size() != 1 || p[0].first != i || !p[0].second.is_one()) {
      throw NotPresentable(labels[i] + " is not the product of its letters");
    }
  }

  std::ostringstream os;
  os << keyword << " " << name << (uses_q(h.data(), psi) ? " over Q(q)" : "") << "\n";
  os << "generators";
  for (const auto& g : w.names) os << " " << g;
  os << "\n";

  std::vector<std::vector<std::string>> lhs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < w.generators.size(); ++g) {
      std::vector<std::string> u = w.words[i];
      u.push_back(w.names[g]);
      if (label_of(w, u) != n) continue;
      if (std::any_of(lhs.begin(), lhs.end(), [&](const auto& l) { return contains(u, l); })) {
        continue;
      }
      for (const auto& b : w.words) {
        if (contains(b, u)) throw NotPresentable("basis word " + join(b) + " is reducible");
      }
      lhs.push_back(u);
      os << (lhs.size() == 1 ? "relations\n" : "") << "  " << join(u) << " = "
         << sum_text(h.product(i, w.generators[g]), word) << "\n";
    }
  }
  os << "basis";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
  os << "coproduct\n";
  for (std::size_t g = 0; g < w.generators.size(); ++g) {
    os << "  " << w.names[g] << " -> "
       << sum_text(h.comult().col(w.generators[g]), tensor_word) << "\n";
  }
  os << "counit\n";
  for (std::size_t g = 0; g < w.generators.size(); ++g) {
    std::string s;
    append_term(s, h.eps(w.generators[g]), "1");
    os << "  " << w.names[g] << " -> " << (s.empty() ? "0" : s) << "\n";
  }
  os << "antipode\n";
  for (std::size_t g = 0; g < w.generators.size(); ++g) {
    os << "  " << w.names[g] << " -> " << sum_text(h.antipode().col(w.generators[g]), word)
       << "\n";
  }
  if (psi) {
    os << "braiding\n";
    for (std::size_t a = 0; a < w.generators.size(); ++a) {
      for (std::size_t b = 0; b < w.generators.size(); ++b) {
        os << "  " << w.names[a] << "(*)" << w.names[b] << " -> "
           << sum_text(psi->col(w.generators[a] * n + w.generators[b]), tensor_word) << "\n";
      }
    }
  }
  return os.str();
}

bool same_tensors(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.labels() == b.labels() && a.mult() == b.mult() && a.comult() == b.comult() &&
         a.antipode() == b.antipode() && a.counit() == b.counit();
}

void require_round_trip(const std::string& text, const Compiled& orig) {
  Compiled c;
  try {
    c = compile_text(text);
  } catch (const Error& e) {
    throw NotPresentable(std::string("emitted source does not compile: ") + e.what());
  }
  bool ok = same_tensors(c.primary.algebra, orig.primary.algebra) &&
            c.primary.braiding == orig.primary.braiding;
  if (ok && orig.dual) {
    ok = c.dual && same_tensors(c.dual->algebra, orig.dual->algebra) &&
         c.dual->braiding == orig.dual->braiding;
  }
  if (ok && orig.pair) ok = c.pair && c.pair->pairing() == orig.pair->pairing();
  if (ok && orig.smash) ok = c.smash && c.smash->cross() == orig.smash->cross();
  if (!ok) throw NotPresentable("emitted source compiles to different tensors");
}

std::string cyclic_source(int n) {
  std::ostringstream os;
  auto power = [](int k) {
    if (k == 0) return std::string("1");
    std::string s = "g";
    for (int i = 1; i < k; ++i) s += "*g";
    return s;
  };
  os << "algebra cyclic-group-" << n << "\n"
     << "generators g\n"
     << "relations\n  " << power(n) << " = 1\n"
     << "basis";
  for (int k = 0; k < n; ++k) os << " " << power(k);
  os << "\ncoproduct\n  g -> g(*)g\n"
     << "counit\n  g -> 1\n"
     << "antipode\n  g -> " << power(n - 1) << "\n";
  return os.str();
}

const char* const kDqs =
    "algebra dqs\n"
    "generators x y\n"
    "relations\n"
    "  x*x = 0\n"
    "  y*x = -x*y + x\n"
    "  y*y = y\n"
    "basis 1 x y x*y\n"
    "coproduct\n"
    "  x -> x(*)1 + 1(*)x - 2*y(*)x\n"
    "  y -> y(*)1 + 1(*)y - 2*y(*)y\n"
    "counit\n"
    "  x -> 0\n"
    "  y -> 0\n"
    "antipode\n"
    "  x -> -x + 2*y*x\n"
    "  y -> y\n";

const char* const kDqsDual =
    "dual dqs-dual\n"
    "generators a b\n"
    "relations\n"
    "  a*a = 0\n"
    "  b*a = -a*b - 2*a\n"
    "  b*b = -2*b\n"
    "basis 1 a b a*b\n"
    "coproduct\n"
    "  a -> a(*)1 + 1(*)a + b(*)a\n"
    "  b -> b(*)1 + 1(*)b + b(*)b\n"
    "counit\n"
    "  a -> 0\n"
    "  b -> 0\n"
    "antipode\n"
    "  a -> a + a*b\n"
    "  b -> b\n";

const char* const kFermionicLine =
    "algebra fermionic-line\n"
    "generators xi\n"
    "relations\n"
    "  xi*xi = 0\n"
    "basis 1 xi\n"
    "coproduct\n"
    "  xi -> xi(*)1 + 1(*)xi\n"
    "counit\n"
    "  xi -> 0\n"
    "antipode\n"
    "  xi -> -xi\n"
    "braiding\n"
    "  xi(*)xi -> -xi(*)xi\n"
    "dual fermionic-line-dual\n"
    "generators sigma\n"
    "relations\n"
    "  sigma*sigma = 0\n"
    "basis 1 sigma\n"
    "coproduct\n"
    "  sigma -> sigma(*)1 + 1(*)sigma\n"
    "counit\n"
    "  sigma -> 0\n"
    "antipode\n"
    "  sigma -> -sigma\n"
    "braiding\n"
    "  sigma(*)sigma -> -sigma(*)sigma\n"
    "pairing fermionic-line-dual fermionic-line\n"
    "  sigma | xi = 1\n"
    "smash fermionic-line-dual fermionic-line\n"
    "  sigma*xi = 1 - xi*sigma\n";

// Generic evaluation of an element expression.
template <typename T>
struct ElementOps {
  std::function<T(const RatFunc&)> scalar;
  std::function<T(const Expr&)> symbol;
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&, const T&)> mul;
  std::function<T(const RatFunc&, const T&)> scale;
  std::function<std::optional<RatFunc>(const T&)> as_scalar;
};

template <typename T>
T eval_element(const Expr& e, const ElementOps<T>& ops, bool q_ok) {
  auto sc = [&](const Expr& k, const char* what) {
    std::optional<RatFunc> s = ops.as_scalar(eval_element(k, ops, q_ok));
    if (!s) throw SyntaxError(k.line, k.col, what);
    return *s;
  };
  switch (e.kind) {
    case Expr::Kind::kNum:
      return ops.scalar(RatFunc(Rational(e.text)));
    case Expr::Kind::kSym:
      if (e.text == "q" && q_ok) return ops.scalar(RatFunc::q());
      return ops.symbol(e);
    case Expr::Kind::kNeg:
      return ops.scale(RatFunc(-1), eval_element(e.kids[0], ops, q_ok));
    case Expr::Kind::kAdd:
      return ops.add(eval_element(e.kids[0], ops, q_ok), eval_element(e.kids[1], ops, q_ok));
    case Expr::Kind::kSub:
      return ops.add(eval_element(e.kids[0], ops, q_ok),
                     ops.scale(RatFunc(-1), eval_element(e.kids[1], ops, q_ok)));
    case Expr::Kind::kMul:
      return ops.mul(eval_element(e.kids[0], ops, q_ok), eval_element(e.kids[1], ops, q_ok));
    case Expr::Kind::kDiv: {
      RatFunc d = sc(e.kids[1], "scalar divisor");
      if (d.is_zero()) throw DivisionByZero(format_expr(e));
      return ops.scale(d.inverse(), eval_element(e.kids[0], ops, q_ok));
    }
    case Expr::Kind::kPow: {
      T base = eval_element(e.kids[0], ops, q_ok);
      if (e.exponent < 0) {
        std::optional<RatFunc> s = ops.as_scalar(base);
        if (!s) throw SyntaxError(e.line, e.col, "scalar base for a negative power");
        if (s->is_zero()) throw DivisionByZero(format_expr(e));
        base = ops.scalar(s->inverse());
      }
      T r = ops.scalar(RatFunc(1));
      for (long k = 0; k < std::labs(e.exponent); ++k) r = ops.mul(r, base);
      return r;
    }
    case Expr::Kind::kTensor:
      break;
  }
  throw SyntaxError(e.line, e.col, "element without (*)");
}

std::map<std::string, std::size_t> symbol_labels(const HopfAlgebra& h) {
  std::map<std::string, std::size_t> m;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (is_identifier(h.label(i))) m[h.label(i)] = i;
  }
  return m;
}

std::string smash_word(const SmashAlgebra& s, std::size_t p) {
  const std::size_t nh = s.points().dim();
  std::size_t i = p / nh, j = p % nh;
  auto ua = s.functions().unit_index();
  auto uh = s.points().unit_index();
  bool a1 = ua && *ua == i, h1 = uh && *uh == j;
  if (a1 && h1) return "1";
  if (a1) return s.points().label(j);
  if (h1) return s.functions().label(i);
  return s.functions().label(i) + "*" + s.points().label(j);
}

}  // namespace

std::string emit(const HopfAlgebra& h, const std::string& name,
                 const std::optional<LinearMap>& braiding) {
  std::string text = format(parse(block_source(h, "algebra", name, braiding)));
  Compiled orig;
  orig.primary = {name, h, braiding};
  require_round_trip(text, orig);
  return text;
}

std::string emit(const Compiled& c) {
  std::string raw = block_source(c.primary.algebra, "algebra", c.primary.name,
                                 c.primary.braiding);
  if (c.dual) raw += block_source(c.dual->algebra, "dual", c.dual->name, c.dual->braiding);
  auto name_of = [&](const HopfAlgebra& h) -> const std::string& {
    if (h.id() == c.primary.algebra.id()) return c.primary.name;
    if (c.dual && h.id() == c.dual->algebra.id()) return c.dual->name;
    throw NotPresentable("pairing names an unknown algebra");
  };
  if (c.pair && c.pairing_explicit) {
    const HopfAlgebra& h = c.pair->points();
    const HopfAlgebra& a = c.pair->functions();
    const Matrix& p = c.pair->pairing();
    bool identity = h.dim() == a.dim() && p == Matrix::identity(h.dim());
    raw += "pairing " + name_of(h) + " " + name_of(a) + (identity ? " identity" : "") + "\n";
    if (!identity) {
      for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          RatFunc def = i == 0 ? a.eps(j) : (j == 0 ? h.eps(i) : RatFunc());
          if (p(i, j) == def) continue;
          std::string v;
          append_term(v, p(i, j), "1");
          raw += "  " + h.label(i) + " | " + a.label(j) + " = " + (v.empty() ? "0" : v) + "\n";
        }
      }
    }
  }
  if (c.smash && c.smash_explicit) {
    const SmashAlgebra& s = *c.smash;
    const Words wh = monomial_labels(s.points());
    const Words wa = monomial_labels(s.functions());
    const std::size_t na = s.functions().dim();
    raw += "smash " + name_of(s.points()) + " " + name_of(s.functions()) + "\n";
    for (std::size_t j = 0; j < wh.generators.size(); ++j) {
      for (std::size_t i = 0; i < wa.generators.size(); ++i) {
        const SparseVec& v = s.cross().col(wh.generators[j] * na + wa.generators[i]);
        raw += "  " + wh.names[j] + "*" + wa.names[i] + " = " +
               sum_text(v, [&](std::size_t p) { return smash_word(s, p); }) + "\n";
      }
    }
  }
  std::string text = format(parse(raw));
  require_round_trip(text, c);
  return text;
}

PresentationAST builtin(const std::string& name, int param) {
  if (name == "cyclic-group") {
    if (param < 2) throw BadParam("cyclic-group needs n >= 2");
    return parse(cyclic_source(param));
  }
  if (name == "q-plane") {
    if (param < 1 || param > 4) throw BadParam("q-plane needs 1 <= N <= 4");
    return parse(q_plane_source(param));
  }
  if (param != 0) throw BadParam(name + " takes no parameter");
  if (name == "dqs") {
    return parse(std::string(kDqs) + kDqsDual + "pairing dqs dqs-dual identity\n");
  }
  if (name == "dqs-dual") {
    std::string s = kDqsDual;
    return parse("algebra" + s.substr(4));
  }
  if (name == "fermionic-line") return parse(kFermionicLine);
  throw UnknownBuiltin(name);
}

std::vector<std::string> builtin_names() {
  return {"cyclic-group", "dqs", "dqs-dual", "fermionic-line", "q-plane"};
}

Element parse_element(const HopfAlgebra& h, const std::string& text) {
  const auto syms = symbol_labels(h);
  ElementOps<Element> ops;
  ops.scalar = [&](const RatFunc& c) { return c * unit_element(h); };
  ops.symbol = [&](const Expr& e) {
    auto it = syms.find(e.text);
    if (it == syms.end()) throw UnknownSymbol(e.line, e.col, e.text);
    return basis_element(h, it->second);
  };
  ops.add = [](const Element& a, const Element& b) { return a + b; };
  ops.mul = [&](const Element& a, const Element& b) { return mul_elem(h, a, b); };
  ops.scale = [](const RatFunc& c, const Element& a) { return c * a; };
  ops.as_scalar = [&](const Element& a) -> std::optional<RatFunc> {
    auto u = h.unit_index();
    if (!u) return std::nullopt;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (i != *u && !a.coords[i].is_zero()) return std::nullopt;
    }
    return a.coords[*u];
  };
  return eval_element(parse_expr(text), ops, !syms.count("q"));
}

SmashElement parse_smash_element(const SmashAlgebra& s, const std::string& text) {
  const auto fa = symbol_labels(s.functions());
  const auto ph = symbol_labels(s.points());
  ElementOps<SmashElement> ops;
  ops.scalar = [&](const RatFunc& c) { return c * s.unit(); };
  ops.symbol = [&](const Expr& e) {
    auto a = fa.find(e.text);
    auto h = ph.find(e.text);
    if (a != fa.end() && h != ph.end()) {
      throw SyntaxError(e.line, e.col, "unambiguous symbol, " + e.text + " names both factors");
    }
    if (a != fa.end()) return s.embed(Factor::kFunctions, basis_element(s.functions(), a->second));
    if (h != ph.end()) return s.embed(Factor::kPoints, basis_element(s.points(), h->second));
    throw UnknownSymbol(e.line, e.col, e.text);
  };
  ops.add = [](const SmashElement& a, const SmashElement& b) { return a + b; };
  ops.mul = [&](const SmashElement& a, const SmashElement& b) { return s.mul(a, b); };
  ops.scale = [](const RatFunc& c, const SmashElement& a) { return c * a; };
  ops.as_scalar = [&](const SmashElement& a) -> std::optional<RatFunc> {
    SmashElement one = s.unit();
    std::optional<RatFunc> c;
    for (std::size_t k = 0; k < a.coeff.size(); ++k) {
      if (!one.coeff[k].is_zero()) {
        c = a.coeff[k];
      } else if (!a.coeff[k].is_zero()) {
        return std::nullopt;
      }
    }
    return c;
  };
  return eval_element(parse_expr(text), ops, !fa.count("q") && !ph.count("q"));
}

std::string render(const HopfAlgebra& h, const Element& e) {
  require_member(h, e);
  return sum_text(to_sparse(e), [&](std::size_t k) { return h.label(k); });
}

std::string render(const SmashAlgebra& s, const SmashElement& e) {
  if (e.smash_id != s.id()) throw AlgebraMismatch("element of another smash algebra");
  return sum_text(sparse_from_dense(e.coeff), [&](std::size_t p) { return smash_word(s, p); });
}

std::string render_scalar(const RatFunc& c) { return c.to_string(); }

}  // namespace hopfint
