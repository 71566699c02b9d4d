#include <cctype>
#include <set>
#include <sstream>

#include "hopfint/errors.hpp"
#include "hopfint/presentation.hpp"

namespace hopfint {

namespace {

struct Token {
  enum class Kind { kIdent, kNum, kOp, kArrow, kTensor, kSep, kEnd };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Tokens of one source line starting at column `col0` (1-based).
void lex_line(const std::string& s, std::size_t line, std::size_t col0,
              std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    std::size_t col = col0 + i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::Kind::kIdent, s.substr(i, j - i), line, col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::kNum, s.substr(i, j - i), line, col});
      i = j;
    } else if (s.compare(i, 3, "(*)") == 0) {
      out.push_back({Token::Kind::kTensor, "(*)", line, col});
      i += 3;
    } else if (s.compare(i, 2, "->") == 0) {
      out.push_back({Token::Kind::kArrow, "->", line, col});
      i += 2;
    } else if (c == ';') {
      out.push_back({Token::Kind::kSep, ";", line, col});
      ++i;
    } else if (std::string("+-*/^()=|").find(c) != std::string::npos) {
      out.push_back({Token::Kind::kOp, std::string(1, c), line, col});
      ++i;
    } else {
      throw SyntaxError(line, col, "token");
    }
  }
}

struct Section {
  std::string keyword;
  std::size_t line;
  std::size_t col;
  std::vector<std::string> args;  // raw words after the keyword
  std::vector<std::size_t> arg_cols;
  std::vector<Token> body;        // rest of the header line plus indented lines
};

const std::set<std::string> kKeywords = {
    "algebra", "dual",    "generators", "relations", "basis", "coproduct",
    "counit",  "antipode", "braiding",  "pairing",   "smash"};

bool raw_header(const std::string& kw) {
  return kw == "algebra" || kw == "dual" || kw == "pairing" || kw == "smash";
}

std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string s = raw.substr(0, raw.find('#'));
    if (s.find_first_not_of(" \t") == std::string::npos) continue;
    if (s[0] == ' ' || s[0] == '\t') {
      if (out.empty()) throw SyntaxError(line, 1, "section keyword");
      if (!out.back().body.empty()) {
        out.back().body.push_back({Token::Kind::kSep, "\n", line, 1});
      }
      lex_line(s, line, 1, out.back().body);
      continue;
    }
    std::size_t k = 0;
    while (k < s.size() && ident_char(s[k])) ++k;
    Section sec{s.substr(0, k), line, 1, {}, {}, {}};
    if (!kKeywords.count(sec.keyword)) throw SyntaxError(line, 1, "section keyword");
    std::string rest = s.substr(k);
    if (raw_header(sec.keyword)) {
      std::size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
        sec.args.push_back(rest.substr(i, j - i));
        sec.arg_cols.push_back(k + i + 1);
        i = j;
      }
    } else {
      lex_line(rest, line, k + 1, sec.body);
    }
    out.push_back(std::move(sec));
  }
  return out;
}

// Recursive-descent parser over a token range.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& t, std::size_t b, std::size_t e)
      : t_(t), pos_(b), end_(e) {}

  bool done() const { return pos_ >= end_; }
  bool is_op(const std::string& op) const {
    return !done() && t_[pos_].kind == Token::Kind::kOp && t_[pos_].text == op;
  }
  bool is(Token::Kind k) const { return !done() && t_[pos_].kind == k; }
  [[noreturn]] void fail(const std::string& expected) const {
    if (!done()) throw SyntaxError(t_[pos_].line, t_[pos_].col, expected);
    const Token& last = t_[end_ - 1];
    throw SyntaxError(last.line, last.col + last.text.size(), expected);
  }
  void expect_op(const std::string& op) {
    if (!is_op(op)) fail("'" + op + "'");
    ++pos_;
  }
  void expect(Token::Kind k, const std::string& what) {
    if (!is(k)) fail(what);
    ++pos_;
  }
  std::string ident(const std::string& what) {
    if (!is(Token::Kind::kIdent)) fail(what);
    return t_[pos_++].text;
  }
  void finish() {
    if (!done()) fail("end of entry");
  }

  Expr sum() {
    Expr e;
    if (is_op("-") || is_op("+")) {
      const Token& tk = t_[pos_++];
      Expr inner = tterm();
      if (tk.text == "-") {
        e = node(Expr::Kind::kNeg, tk);
        e.kids.push_back(std::move(inner));
      } else {
        e = std::move(inner);
      }
    } else {
      e = tterm();
    }
    while (is_op("+") || is_op("-")) {
      const Token& tk = t_[pos_++];
      Expr r = node(tk.text == "+" ? Expr::Kind::kAdd : Expr::Kind::kSub, tk);
      r.kids.push_back(std::move(e));
      r.kids.push_back(tterm());
      e = std::move(r);
    }
    return e;
  }

 private:
  static Expr node(Expr::Kind k, const Token& tk) {
    Expr e;
    e.kind = k;
    e.line = tk.line;
    e.col = tk.col;
    return e;
  }
  Expr tterm() {
    Expr l = term();
    if (is(Token::Kind::kTensor)) {
      Expr r = node(Expr::Kind::kTensor, t_[pos_++]);
      r.kids.push_back(std::move(l));
      r.kids.push_back(term());
      return r;
    }
    return l;
  }
  Expr term() {
    Expr e = factor();
    while (is_op("*") || is_op("/")) {
      const Token& tk = t_[pos_++];
      Expr r = node(tk.text == "*" ? Expr::Kind::kMul : Expr::Kind::kDiv, tk);
      r.kids.push_back(std::move(e));
      r.kids.push_back(factor());
      e = std::move(r);
    }
    return e;
  }
  Expr factor() {
    Expr base = primary();
    if (!is_op("^")) return base;
    Expr p = node(Expr::Kind::kPow, t_[pos_++]);
    bool neg = false;
    if (is_op("-")) {
      neg = true;
      ++pos_;
    }
    if (!is(Token::Kind::kNum)) fail("integer exponent");
    p.exponent = std::stol(t_[pos_++].text) * (neg ? -1 : 1);
    p.kids.push_back(std::move(base));
    return p;
  }
  Expr primary() {
    if (is(Token::Kind::kNum)) {
      Expr e = node(Expr::Kind::kNum, t_[pos_]);
      e.text = t_[pos_++].text;
      return e;
    }
    if (is(Token::Kind::kIdent)) {
      Expr e = node(Expr::Kind::kSym, t_[pos_]);
      e.text = t_[pos_++].text;
      return e;
    }
    if (is_op("(")) {
      ++pos_;
      Expr e = sum();
      expect_op(")");
      return e;
    }
    fail("number, symbol or '('");
  }

  const std::vector<Token>& t_;
  std::size_t pos_;
  std::size_t end_;
};

// Entry ranges between separators.
std::vector<std::pair<std::size_t, std::size_t>> entries(
    const std::vector<Token>& body) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i].kind == Token::Kind::kSep) {
      if (i > start) out.emplace_back(start, i);
      start = i + 1;
    }
  }
  return out;
}

GenRule parse_gen_rule(const std::vector<Token>& body, std::size_t b,
                       std::size_t e) {
  ExprParser p(body, b, e);
  GenRule r;
  r.gen = p.ident("generator");
  p.expect(Token::Kind::kArrow, "'->'");
  r.rhs = p.sum();
  p.finish();
  return r;
}

void parse_algebra_section(AlgebraBlock& a, const Section& sec) {
  const auto& body = sec.body;
  if (sec.keyword == "generators") {
    for (const Token& tk : body) {
      if (tk.kind == Token::Kind::kSep) continue;
      if (tk.kind != Token::Kind::kIdent) throw SyntaxError(tk.line, tk.col, "generator name");
      if (tk.text == "q") throw SyntaxError(tk.line, tk.col, "generator name other than q");
      for (const auto& g : a.generators) {
        if (g == tk.text) throw DuplicateGenerator(tk.text);
      }
      a.generators.push_back(tk.text);
    }
  } else if (sec.keyword == "basis") {
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i].kind == Token::Kind::kSep) {
        ++i;
        continue;
      }
      std::vector<std::string> word;
      bool unit = false;
      for (;;) {
        const Token& tk = body[i];
        if (tk.kind == Token::Kind::kNum && tk.text == "1") {
          unit = true;
        } else if (tk.kind == Token::Kind::kIdent) {
          word.push_back(tk.text);
        } else {
          throw SyntaxError(tk.line, tk.col, "basis word");
        }
        ++i;
        if (i < body.size() && body[i].kind == Token::Kind::kOp && body[i].text == "*") {
          ++i;
          if (i >= body.size()) throw SyntaxError(tk.line, tk.col + 1, "basis word");
          continue;
        }
        break;
      }
      if (unit && !word.empty()) {
        throw SyntaxError(body[i - 1].line, body[i - 1].col, "basis word without 1");
      }
      a.basis.push_back(std::move(word));
    }
  } else {
    for (auto [b, e] : entries(body)) {
      if (sec.keyword == "relations") {
        ExprParser p(body, b, e);
        Relation r;
        r.lhs = p.sum();
        p.expect_op("=");
        r.rhs = p.sum();
        p.finish();
        a.relations.push_back(std::move(r));
      } else if (sec.keyword == "coproduct") {
        a.coproduct.push_back(parse_gen_rule(body, b, e));
      } else if (sec.keyword == "counit") {
        a.counit.push_back(parse_gen_rule(body, b, e));
      } else if (sec.keyword == "antipode") {
        a.antipode.push_back(parse_gen_rule(body, b, e));
      } else if (sec.keyword == "braiding") {
        ExprParser p(body, b, e);
        PairRule r;
        r.left = p.ident("generator");
        p.expect(Token::Kind::kTensor, "'(*)'");
        r.right = p.ident("generator");
        p.expect(Token::Kind::kArrow, "'->'");
        r.rhs = p.sum();
        p.finish();
        a.braiding.push_back(std::move(r));
      }
    }
  }
}

void parse_algebra_header(AlgebraBlock& a, const Section& sec) {
  if (sec.args.empty()) throw SyntaxError(sec.line, sec.col + sec.keyword.size() + 1, "algebra name");
  a.name = sec.args[0];
  if (sec.args.size() == 1) return;
  if (sec.args.size() == 3 && sec.args[1] == "over" && sec.args[2] == "Q(q)") {
    a.uses_q = true;
    return;
  }
  throw SyntaxError(sec.line, sec.arg_cols[1], "'over Q(q)'");
}

// Symbols of a block, with q when declared.
struct Scope {
  std::set<std::string> syms;
  bool q = false;
};

Scope scope_of(const AlgebraBlock& a) {
  return {std::set<std::string>(a.generators.begin(), a.generators.end()), a.uses_q};
}

void check_expr(const Expr& e, const Scope& s) {
  if (e.kind == Expr::Kind::kSym) {
    if (e.text == "q" ? !s.q : !s.syms.count(e.text)) {
      throw UnknownSymbol(e.line, e.col, e.text);
    }
  }
  for (const Expr& k : e.kids) check_expr(k, s);
}

void check_gen(const std::string& g, const Scope& s, const Expr& at) {
  if (!s.syms.count(g)) throw UnknownSymbol(at.line, at.col, g);
}

void check_block(const AlgebraBlock& a) {
  Scope s = scope_of(a);
  for (const auto& r : a.relations) {
    check_expr(r.lhs, s);
    check_expr(r.rhs, s);
  }
  for (const auto* rules : {&a.coproduct, &a.counit, &a.antipode}) {
    for (const auto& r : *rules) {
      check_gen(r.gen, s, r.rhs);
      check_expr(r.rhs, s);
    }
  }
  for (const auto& r : a.braiding) {
    check_gen(r.left, s, r.rhs);
    check_gen(r.right, s, r.rhs);
    check_expr(r.rhs, s);
  }
  for (const auto& w : a.basis) {
    for (const auto& g : w) {
      if (!s.syms.count(g)) throw UnknownSymbol(0, 0, g);
    }
  }
}

const AlgebraBlock& block_named(const PresentationAST& ast, const std::string& n,
                                std::size_t line, std::size_t col) {
  if (ast.algebra.name == n) return ast.algebra;
  if (ast.dual && ast.dual->name == n) return *ast.dual;
  throw UnknownSymbol(line, col, n);
}

// ---------------------------------------------------------------- format

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
    case Expr::Kind::kNeg:
      return 1;
    case Expr::Kind::kTensor:
      return 2;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 3;
    case Expr::Kind::kPow:
      return 5;
    default:
      return 6;
  }
}

std::string fmt(const Expr& e, int need) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::kNum:
    case Expr::Kind::kSym:
      s = e.text;
      break;
    case Expr::Kind::kNeg:
      s = "-" + fmt(e.kids[0], 2);
      break;
    case Expr::Kind::kAdd:
      s = fmt(e.kids[0], 1) + " + " + fmt(e.kids[1], 2);
      break;
    case Expr::Kind::kSub:
      s = fmt(e.kids[0], 1) + " - " + fmt(e.kids[1], 2);
      break;
    case Expr::Kind::kTensor:
      s = fmt(e.kids[0], 3) + "(*)" + fmt(e.kids[1], 3);
      break;
    case Expr::Kind::kMul:
      s = fmt(e.kids[0], 3) + "*" + fmt(e.kids[1], 4);
      break;
    case Expr::Kind::kDiv:
      s = fmt(e.kids[0], 3) + "/" + fmt(e.kids[1], 4);
      break;
    case Expr::Kind::kPow:
      s = fmt(e.kids[0], 6) + "^" + std::to_string(e.exponent);
      break;
  }
  return prec(e) < need ? "(" + s + ")" : s;
}

std::string join_word(const std::vector<std::string>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i];
  return s;
}

void format_block(std::ostringstream& os, const char* kw, const AlgebraBlock& a) {
  os << kw << " " << a.name << (a.uses_q ? " over Q(q)" : "") << "\n";
  os << "generators";
  for (const auto& g : a.generators) os << " " << g;
  os << "\n";
  if (!a.relations.empty()) {
    os << "relations\n";
    for (const auto& r : a.relations) {
      os << "  " << format_expr(r.lhs) << " = " << format_expr(r.rhs) << "\n";
    }
  }
  os << "basis";
  for (const auto& w : a.basis) os << " " << join_word(w);
  os << "\n";
  auto rules = [&](const char* name, const std::vector<GenRule>& rs) {
    if (rs.empty()) return;
    os << name << "\n";
    for (const auto& r : rs) os << "  " << r.gen << " -> " << format_expr(r.rhs) << "\n";
  };
  rules("coproduct", a.coproduct);
  rules("counit", a.counit);
  rules("antipode", a.antipode);
  if (!a.braiding.empty()) {
    os << "braiding\n";
    for (const auto& r : a.braiding) {
      os << "  " << r.left << "(*)" << r.right << " -> " << format_expr(r.rhs) << "\n";
    }
  }
}

}  // namespace

std::string format_expr(const Expr& e) { return fmt(e, 0); }

Expr parse_expr(const std::string& text) {
  std::vector<Token> toks;
  lex_line(text, 1, 1, toks);
  if (toks.empty()) throw SyntaxError(1, 1, "expression");
  ExprParser p(toks, 0, toks.size());
  Expr e = p.sum();
  p.finish();
  return e;
}

PresentationAST parse(const std::string& text) {
  PresentationAST ast;
  AlgebraBlock* cur = nullptr;
  bool have_algebra = false;
  for (const Section& sec : split_sections(text)) {
    if (sec.keyword == "algebra") {
      if (have_algebra) throw SyntaxError(sec.line, sec.col, "a single algebra section");
      parse_algebra_header(ast.algebra, sec);
      cur = &ast.algebra;
      have_algebra = true;
    } else if (sec.keyword == "dual") {
      if (!have_algebra || ast.dual) throw SyntaxError(sec.line, sec.col, "algebra before dual");
      ast.dual.emplace();
      parse_algebra_header(*ast.dual, sec);
      cur = &*ast.dual;
    } else if (sec.keyword == "pairing") {
      if (ast.pairing) throw SyntaxError(sec.line, sec.col, "a single pairing section");
      PairingBlock pb;
      if (sec.args.size() < 2 || sec.args.size() > 3 ||
          (sec.args.size() == 3 && sec.args[2] != "identity")) {
        throw SyntaxError(sec.line, sec.col + 8, "points name, functions name [identity]");
      }
      pb.points = sec.args[0];
      pb.functions = sec.args[1];
      pb.identity = sec.args.size() == 3;
      for (auto [b, e] : entries(sec.body)) {
        ExprParser p(sec.body, b, e);
        PairingEntry en;
        en.point = p.sum();
        p.expect_op("|");
        en.function = p.sum();
        p.expect_op("=");
        en.value = p.sum();
        p.finish();
        pb.entries.push_back(std::move(en));
      }
      ast.pairing = std::move(pb);
      cur = nullptr;
    } else if (sec.keyword == "smash") {
      if (ast.smash) throw SyntaxError(sec.line, sec.col, "a single smash section");
      if (sec.args.size() != 2) throw SyntaxError(sec.line, sec.col + 6, "points name, functions name");
      SmashBlock sb;
      sb.points = sec.args[0];
      sb.functions = sec.args[1];
      for (auto [b, e] : entries(sec.body)) {
        ExprParser p(sec.body, b, e);
        PairRule r;
        r.left = p.ident("points generator");
        p.expect_op("*");
        r.right = p.ident("functions generator");
        p.expect_op("=");
        r.rhs = p.sum();
        p.finish();
        sb.rules.push_back(std::move(r));
      }
      ast.smash = std::move(sb);
      cur = nullptr;
    } else {
      if (!cur) throw SyntaxError(sec.line, sec.col, "algebra or dual section first");
      parse_algebra_section(*cur, sec);
    }
  }
  if (!have_algebra) throw SyntaxError(1, 1, "algebra section");

  check_block(ast.algebra);
  if (ast.dual) {
    check_block(*ast.dual);
    if (ast.dual->name == ast.algebra.name) throw DuplicateGenerator(ast.dual->name);
    for (const auto& g : ast.dual->generators) {
      for (const auto& h : ast.algebra.generators) {
        if (g == h) throw DuplicateGenerator(g);
      }
    }
  }
  if (ast.pairing) {
    const AlgebraBlock& h = block_named(ast, ast.pairing->points, 0, 0);
    const AlgebraBlock& a = block_named(ast, ast.pairing->functions, 0, 0);
    for (const auto& en : ast.pairing->entries) {
      check_expr(en.point, scope_of(h));
      check_expr(en.function, scope_of(a));
      check_expr(en.value, {{}, h.uses_q || a.uses_q});
    }
  }
  if (ast.smash) {
    const AlgebraBlock& h = block_named(ast, ast.smash->points, 0, 0);
    const AlgebraBlock& a = block_named(ast, ast.smash->functions, 0, 0);
    Scope both = scope_of(h);
    for (const auto& g : a.generators) both.syms.insert(g);
    both.q = h.uses_q || a.uses_q;
    for (const auto& r : ast.smash->rules) {
      check_gen(r.left, scope_of(h), r.rhs);
      check_gen(r.right, scope_of(a), r.rhs);
      check_expr(r.rhs, both);
    }
  }
  return ast;
}

std::string format(const PresentationAST& ast) {
  std::ostringstream os;
  format_block(os, "algebra", ast.algebra);
  if (ast.dual) format_block(os, "dual", *ast.dual);
  if (ast.pairing) {
    os << "pairing " << ast.pairing->points << " " << ast.pairing->functions
       << (ast.pairing->identity ? " identity" : "") << "\n";
    for (const auto& en : ast.pairing->entries) {
      os << "  " << format_expr(en.point) << " | " << format_expr(en.function)
         << " = " << format_expr(en.value) << "\n";
    }
  }
  if (ast.smash) {
    os << "smash " << ast.smash->points << " " << ast.smash->functions << "\n";
    for (const auto& r : ast.smash->rules) {
      os << "  " << r.left << "*" << r.right << " = " << format_expr(r.rhs) << "\n";
    }
  }
  return os.str();
}

}  // namespace hopfint
