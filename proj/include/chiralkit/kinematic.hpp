#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chiralkit {

/// Verdicts for an interaction viewed as a chiral influence.
/// TrulyChiral: parity-odd, time-even. FalselyChiral: parity-odd, time-odd.
/// Achiral: parity-even. NotRotationalScalar: carries free vector indices, so
/// it is not a rotation-invariant influence at all. Undetermined: terms of
/// mixed parity signature; see the per-term breakdown.
enum class ChiralityClass { TrulyChiral, FalselyChiral, Achiral, NotRotationalScalar, Undetermined };

std::string_view to_string(ChiralityClass cls);

enum class VectorCharacter { ScalarFunction, PolarVector, AxialVector };

/// A named kinematic building block with its behavior under parity and motion
/// reversal (sign of the classical quantity when t -> -t).
struct KinematicAtom {
  std::string name;
  VectorCharacter character = VectorCharacter::ScalarFunction;
  int parity_sign = +1;
  int time_sign = +1;
};

/// Built-in atoms: momentum p (polar, P-, T-), position r (polar, P-, T+),
/// spin sigma / sigma_e / sigma_N (axial, P+, T-), electric field E (polar,
/// P-, T+), magnetic field B (axial, P+, T-), density rho (scalar, P+, T+).
const std::vector<KinematicAtom>& atom_table();
std::optional<KinematicAtom> lookup_atom(std::string_view name);

class MalformedExpressionError : public std::runtime_error {
 public:
  explicit MalformedExpressionError(const std::string& message) : std::runtime_error(message) {}
};

/// Immutable expression tree over kinematic atoms. Unknown identifiers and
/// numeric literals are treated as even scalar constants, so couplings may
/// appear inline.
class KinematicExpr {
 public:
  enum class Kind { Atom, Dot, Product, Anticommutator };

  static KinematicExpr atom(std::string name);
  static KinematicExpr scalar_const(std::string name);
  static KinematicExpr dot(KinematicExpr a, KinematicExpr b);
  static KinematicExpr product(std::vector<KinematicExpr> factors);
  static KinematicExpr anticommutator(KinematicExpr a, KinematicExpr b);

  Kind kind() const;
  const KinematicAtom& atom_info() const;  // Atom nodes only
  const std::vector<KinematicExpr>& children() const;

 private:
  struct Node;
  explicit KinematicExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct SymmetrySignature {
  int parity_sign = +1;
  int time_sign = +1;
  bool rotational_scalar = true;
  friend bool operator==(const SymmetrySignature&, const SymmetrySignature&) = default;
};

/// Composes signs multiplicatively over the tree. Dot requires two vector
/// operands and contracts them to a scalar; Product and Anticommutator add
/// tensor rank. Throws MalformedExpressionError when a Dot operand is not a
/// vector.
SymmetrySignature compose_signature(const KinematicExpr& expr);

ChiralityClass classify_signature(const SymmetrySignature& sig);
ChiralityClass classify_kinematic(const KinematicExpr& expr);

/// One-line syntax sharing the interaction-term lexer:
///   expr := item ('*' item)*
///   item := '{' expr ',' expr '}' | unit ['.' unit]
///   unit := IDENT | NUMBER | '(' expr ')'
/// Examples: "sigma_e . p", "{ sigma_e . p , rho }", "E . B".
KinematicExpr parse_kinematic(std::string_view text);

}  // namespace chiralkit
