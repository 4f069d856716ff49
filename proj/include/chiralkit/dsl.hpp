#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chiralkit {

/// Half-open byte range [begin, end) into the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class DslErrorCode {
  EmptyInput,
  LexicalError,
  UnexpectedToken,
  UnexpectedEnd,
  UnknownBilinear,
  SpeciesMismatch,
  UnboundIndex,
  RepeatedIndex,
};

class DslError : public std::runtime_error {
 public:
  DslError(DslErrorCode code, SourceSpan span, const std::string& message)
      : std::runtime_error(message), code_(code), span_(span) {}
  DslErrorCode code() const { return code_; }
  SourceSpan span() const { return span_; }

 private:
  DslErrorCode code_;
  SourceSpan span_;
};

enum class TokenKind { Identifier, Number, Symbol, BracketIndex };

struct Token {
  TokenKind kind;
  std::string text;  // identifier/number text, or index name for BracketIndex
  SourceSpan span;
  char symbol = '\0';  // set for Symbol tokens
};

/// Shared lexer for interaction terms and kinematic one-liners.
/// Skips whitespace and '#' line comments. '[name]' lexes as one index token.
/// Any unrecognized byte (including any non-ASCII byte) is a lexical error
/// carrying the offending position.
std::vector<Token> tokenize(std::string_view text);

enum class GammaKind { Scalar, Pseudoscalar, Vector, AxialVector };
enum class Species { Electron, Nucleon };

struct GammaStructure {
  GammaKind kind = GammaKind::Scalar;
  std::string index;  // empty unless Vector or AxialVector
  friend bool operator==(const GammaStructure&, const GammaStructure&) = default;
};

struct FieldBilinear {
  Species species = Species::Electron;
  GammaStructure structure;
  friend bool operator==(const FieldBilinear&, const FieldBilinear&) = default;
};

/// Index-name pair linking two vector-like bilinears of one term.
struct Contraction {
  std::string index;
  int first_bilinear = 0;
  int second_bilinear = 0;
  friend bool operator==(const Contraction&, const Contraction&) = default;
};

struct CouplingSymbol {
  std::string name;
  bool imaginary_unit = false;  // true when written as i*NAME
  friend bool operator==(const CouplingSymbol&, const CouplingSymbol&) = default;
};

struct InteractionTerm {
  CouplingSymbol coupling;
  std::vector<FieldBilinear> bilinears;
  std::vector<std::string> scalar_fields;  // bare mediator-field factors
  bool scalars_absorbed = false;           // static limit: mediator folded into the coupling
  std::vector<Contraction> contractions;
  friend bool operator==(const InteractionTerm&, const InteractionTerm&) = default;
};

struct SignedTerm {
  int sign = +1;
  InteractionTerm term;
  friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

struct HamiltonianIR {
  std::vector<SignedTerm> terms;
  friend bool operator==(const HamiltonianIR&, const HamiltonianIR&) = default;
};

struct ParseOptions {
  /// Treat bare scalar-field factors as a static mediator absorbed into the
  /// coupling. Rendering still emits the factor so text round-trips.
  bool static_propagator = true;
};

/// Grammar:
///   H      := term (('+' | '-') term)*
///   term   := coeff ('*' factor)+
///   coeff  := ['i' '*'] IDENT
///   factor := '(' BARFIELD gamma ')' | IDENT
///   gamma  := '1' | 'g5' | 'g' '[' IDENT ']' ['g5']   (followed by the field name)
/// BARFIELD is 'Nbar' or 'ebar' and the closing field must match ('N' / 'e').
/// Every index must occur exactly twice within a term.
HamiltonianIR parse_hamiltonian(std::string_view text, ParseOptions options = {});

/// Canonical text form; parse_hamiltonian(render(ir)) == ir for parser-produced ir.
std::string render(const HamiltonianIR& ir);

struct BuiltinHamiltonian {
  std::string name;
  std::string text;
  HamiltonianIR ir;
};

/// Named interaction library: H_VV, H_AV, H_VA, H_AA, the four-term neutral-
/// current combination H_NC, and the pseudoscalar nucleon-electron coupling H_ax.
const std::vector<BuiltinHamiltonian>& builtin_library();
const HamiltonianIR* find_builtin(std::string_view name);

}  // namespace chiralkit
