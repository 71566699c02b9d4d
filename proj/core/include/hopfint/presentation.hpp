#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfint/duality.hpp"
#include "hopfint/hopf.hpp"
#include "hopfint/smash.hpp"

namespace hopfint {

// Expression tree of the .hopf format. Positions are 1-based and ignored by ==.
struct Expr {
  enum class Kind { kNum, kSym, kNeg, kAdd, kSub, kMul, kDiv, kPow, kTensor };
  Kind kind = Kind::kNum;
  std::string text;  // digits or symbol name
  long exponent = 0;
  std::vector<Expr> kids;
  std::size_t line = 0;
  std::size_t col = 0;

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.text == b.text && a.exponent == b.exponent &&
           a.kids == b.kids;
  }
};

struct Relation {
  Expr lhs;
  Expr rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// gen -> rhs, for coproduct, counit and antipode.
struct GenRule {
  std::string gen;
  Expr rhs;
  friend bool operator==(const GenRule&, const GenRule&) = default;
};

struct PairRule {
  std::string left;
  std::string right;
  Expr rhs;
  friend bool operator==(const PairRule&, const PairRule&) = default;
};

struct AlgebraBlock {
  std::string name;
  bool uses_q = false;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::vector<std::vector<std::string>> basis;  // basis[0] is the empty word
  std::vector<GenRule> coproduct;
  std::vector<GenRule> counit;
  std::vector<GenRule> antipode;
  std::vector<PairRule> braiding;  // left(*)right -> rhs
  friend bool operator==(const AlgebraBlock&, const AlgebraBlock&) = default;
};

struct PairingEntry {
  Expr point;
  Expr function;
  Expr value;
  friend bool operator==(const PairingEntry&, const PairingEntry&) = default;
};

struct PairingBlock {
  std::string points;
  std::string functions;
  bool identity = false;
  std::vector<PairingEntry> entries;
  friend bool operator==(const PairingBlock&, const PairingBlock&) = default;
};

// point generator * function generator = normal-ordered expression
struct SmashBlock {
  std::string points;
  std::string functions;
  std::vector<PairRule> rules;
  friend bool operator==(const SmashBlock&, const SmashBlock&) = default;
};

struct PresentationAST {
  AlgebraBlock algebra;
  std::optional<AlgebraBlock> dual;
  std::optional<PairingBlock> pairing;
  std::optional<SmashBlock> smash;
  friend bool operator==(const PresentationAST&, const PresentationAST&) = default;
};

PresentationAST parse(const std::string& text);
std::string format(const PresentationAST& ast);
std::string format_expr(const Expr& e);
Expr parse_expr(const std::string& text);

struct CompiledAlgebra {
  std::string name;
  HopfAlgebra algebra;
  std::optional<LinearMap> braiding;
};

struct Compiled {
  CompiledAlgebra primary;
  std::optional<CompiledAlgebra> dual;
  std::optional<DualPair> pair;
  bool pairing_explicit = false;
  std::optional<SmashAlgebra> smash;
  bool smash_explicit = false;
  std::vector<std::string> warnings;

  bool braided() const {
    return primary.braiding.has_value() || (dual && dual->braiding.has_value());
  }
};

inline constexpr std::size_t kRewriteBudget = 10000;

Compiled compile(const PresentationAST& ast);
Compiled compile_text(const std::string& text);

// Canonical source of a single algebra whose labels are words in its
// generators with "1" first. Throws NotPresentable otherwise.
std::string emit(const HopfAlgebra& h, const std::string& name,
                 const std::optional<LinearMap>& braiding = std::nullopt);
// All blocks of a compiled presentation.
std::string emit(const Compiled& c);

PresentationAST builtin(const std::string& name, int param = 0);
std::vector<std::string> builtin_names();

// Element from an expression over the basis labels.
Element parse_element(const HopfAlgebra& h, const std::string& text);
// Smash element; symbols from both factors, products in the smash algebra.
SmashElement parse_smash_element(const SmashAlgebra& s, const std::string& text);

std::string render(const HopfAlgebra& h, const Element& e);
std::string render(const SmashAlgebra& s, const SmashElement& e);
std::string render_scalar(const RatFunc& c);

}  // namespace hopfint
