#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfint {

// Base of every error raised by the library. name() is the stable error
// identifier surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define HOPFINT_ERROR(Type)                                      \
  class Type : public Error {                                    \
   public:                                                       \
    explicit Type(const std::string& detail = {})                \
        : Error(#Type, detail) {}                                \
  }

HOPFINT_ERROR(DivisionByZero);
HOPFINT_ERROR(PoleAtPoint);
HOPFINT_ERROR(ShapeMismatch);
HOPFINT_ERROR(AlgebraMismatch);
HOPFINT_ERROR(SingularAntipode);
HOPFINT_ERROR(AssociativityFailure);
HOPFINT_ERROR(DegenerateImage);
HOPFINT_ERROR(DegenerateSolutionSpace);
HOPFINT_ERROR(NilpotentCandidate);
HOPFINT_ERROR(AllZeroTheta);
HOPFINT_ERROR(IdentityFailure);
HOPFINT_ERROR(ConsistencyFailure);
HOPFINT_ERROR(ClosedFormMismatch);
HOPFINT_ERROR(DuplicateGenerator);
HOPFINT_ERROR(NonTerminatingRewrite);
HOPFINT_ERROR(BasisEscape);
HOPFINT_ERROR(NotPresentable);
HOPFINT_ERROR(UnknownBuiltin);
HOPFINT_ERROR(BadParam);

#undef HOPFINT_ERROR

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("AxiomViolation", axiom + " at " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

// Parse-level errors carry a 1-based source position.
class SourceError : public Error {
 public:
  SourceError(std::string name, std::size_t line, std::size_t col,
              const std::string& detail)
      : Error(std::move(name), std::to_string(line) + ":" +
                                   std::to_string(col) + ": " + detail),
        line_(line),
        col_(col) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class SyntaxError : public SourceError {
 public:
  SyntaxError(std::size_t line, std::size_t col, const std::string& expected)
      : SourceError("SyntaxError", line, col, "expected " + expected) {}
};

class UnknownSymbol : public SourceError {
 public:
  UnknownSymbol(std::size_t line, std::size_t col, const std::string& symbol)
      : SourceError("UnknownSymbol", line, col, symbol) {}
};

}  // namespace hopfint
