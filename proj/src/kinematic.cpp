#include "chiralkit/kinematic.hpp"

#include <algorithm>

#include "chiralkit/dsl.hpp"

namespace chiralkit {

std::string_view to_string(ChiralityClass cls) {
  switch (cls) {
    case ChiralityClass::TrulyChiral: return "TrulyChiral";
    case ChiralityClass::FalselyChiral: return "FalselyChiral";
    case ChiralityClass::Achiral: return "Achiral";
    case ChiralityClass::NotRotationalScalar: return "NotRotationalScalar";
    case ChiralityClass::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

const std::vector<KinematicAtom>& atom_table() {
  static const std::vector<KinematicAtom> table = {
      {"p", VectorCharacter::PolarVector, -1, -1},
      {"r", VectorCharacter::PolarVector, -1, +1},
      {"sigma", VectorCharacter::AxialVector, +1, -1},
      {"sigma_e", VectorCharacter::AxialVector, +1, -1},
      {"sigma_N", VectorCharacter::AxialVector, +1, -1},
      {"E", VectorCharacter::PolarVector, -1, +1},
      {"B", VectorCharacter::AxialVector, +1, -1},
      {"rho", VectorCharacter::ScalarFunction, +1, +1},
  };
  return table;
}

std::optional<KinematicAtom> lookup_atom(std::string_view name) {
  for (const auto& a : atom_table())
    if (a.name == name) return a;
  return std::nullopt;
}

struct KinematicExpr::Node {
  Kind kind = Kind::Atom;
  KinematicAtom atom;
  std::vector<KinematicExpr> children;
};

KinematicExpr KinematicExpr::atom(std::string name) {
  if (auto found = lookup_atom(name)) {
    auto node = std::make_shared<Node>();
    node->atom = *found;
    return KinematicExpr(std::move(node));
  }
  return scalar_const(std::move(name));
}

KinematicExpr KinematicExpr::scalar_const(std::string name) {
  auto node = std::make_shared<Node>();
  node->atom = {std::move(name), VectorCharacter::ScalarFunction, +1, +1};
  return KinematicExpr(std::move(node));
}

KinematicExpr KinematicExpr::dot(KinematicExpr a, KinematicExpr b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Dot;
  node->children = {std::move(a), std::move(b)};
  return KinematicExpr(std::move(node));
}

KinematicExpr KinematicExpr::product(std::vector<KinematicExpr> factors) {
  if (factors.empty()) throw MalformedExpressionError("product needs at least one factor");
  if (factors.size() == 1) return factors.front();
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->children = std::move(factors);
  return KinematicExpr(std::move(node));
}

KinematicExpr KinematicExpr::anticommutator(KinematicExpr a, KinematicExpr b) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Anticommutator;
  node->children = {std::move(a), std::move(b)};
  return KinematicExpr(std::move(node));
}

KinematicExpr::Kind KinematicExpr::kind() const { return node_->kind; }
const KinematicAtom& KinematicExpr::atom_info() const { return node_->atom; }
const std::vector<KinematicExpr>& KinematicExpr::children() const { return node_->children; }

namespace {

struct Composed {
  int parity = +1;
  int time = +1;
  int rank = 0;  // tensor rank, saturating at 2
};

Composed compose(const KinematicExpr& e) {
  switch (e.kind()) {
    case KinematicExpr::Kind::Atom: {
      const auto& a = e.atom_info();
      return {a.parity_sign, a.time_sign, a.character == VectorCharacter::ScalarFunction ? 0 : 1};
    }
    case KinematicExpr::Kind::Dot: {
      Composed a = compose(e.children()[0]);
      Composed b = compose(e.children()[1]);
      if (a.rank != 1 || b.rank != 1)
        throw MalformedExpressionError("dot product requires two vector operands");
      return {a.parity * b.parity, a.time * b.time, 0};
    }
    case KinematicExpr::Kind::Product:
    case KinematicExpr::Kind::Anticommutator: {
      Composed out;
      for (const auto& child : e.children()) {
        Composed c = compose(child);
        out.parity *= c.parity;
        out.time *= c.time;
        out.rank = std::min(2, out.rank + c.rank);
      }
      return out;
    }
  }
  throw MalformedExpressionError("unreachable expression kind");
}

}  // namespace

SymmetrySignature compose_signature(const KinematicExpr& expr) {
  Composed c = compose(expr);
  return {c.parity, c.time, c.rank == 0};
}

ChiralityClass classify_signature(const SymmetrySignature& sig) {
  if (!sig.rotational_scalar) return ChiralityClass::NotRotationalScalar;
  if (sig.parity_sign > 0) return ChiralityClass::Achiral;
  return sig.time_sign > 0 ? ChiralityClass::TrulyChiral : ChiralityClass::FalselyChiral;
}

ChiralityClass classify_kinematic(const KinematicExpr& expr) {
  return classify_signature(compose_signature(expr));
}

namespace {

class KinematicParser {
 public:
  explicit KinematicParser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  KinematicExpr parse() {
    if (tokens_.empty())
      throw DslError(DslErrorCode::EmptyInput, {0, text_.size()}, "input contains no expression");
    KinematicExpr e = parse_expr();
    if (pos_ < tokens_.size())
      throw DslError(DslErrorCode::UnexpectedToken, tokens_[pos_].span,
                     "trailing input after expression");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  SourceSpan end_span() const { return {text_.size(), text_.size()}; }

  bool peek_symbol(char sym) const {
    return !at_end() && peek().kind == TokenKind::Symbol && peek().symbol == sym;
  }

  void expect_symbol(char sym, const char* what) {
    if (at_end()) throw DslError(DslErrorCode::UnexpectedEnd, end_span(), std::string("expected ") + what);
    if (!peek_symbol(sym))
      throw DslError(DslErrorCode::UnexpectedToken, peek().span,
                     std::string("expected ") + what + ", got '" + peek().text + "'");
    ++pos_;
  }

  KinematicExpr parse_expr() {
    std::vector<KinematicExpr> factors;
    factors.push_back(parse_item());
    while (peek_symbol('*')) {
      ++pos_;
      factors.push_back(parse_item());
    }
    return KinematicExpr::product(std::move(factors));
  }

  KinematicExpr parse_item() {
    if (peek_symbol('{')) {
      ++pos_;
      KinematicExpr a = parse_expr();
      expect_symbol(',', "',' between anticommutator operands");
      KinematicExpr b = parse_expr();
      expect_symbol('}', "'}' closing anticommutator");
      return KinematicExpr::anticommutator(std::move(a), std::move(b));
    }
    KinematicExpr u = parse_unit();
    if (peek_symbol('.')) {
      ++pos_;
      return KinematicExpr::dot(std::move(u), parse_unit());
    }
    return u;
  }

  KinematicExpr parse_unit() {
    if (at_end())
      throw DslError(DslErrorCode::UnexpectedEnd, end_span(), "expected atom or '(' expression");
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) {
      ++pos_;
      return KinematicExpr::atom(t.text);
    }
    if (t.kind == TokenKind::Number) {
      ++pos_;
      return KinematicExpr::scalar_const(t.text);
    }
    if (peek_symbol('(')) {
      ++pos_;
      KinematicExpr e = parse_expr();
      expect_symbol(')', "')' closing group");
      return e;
    }
    throw DslError(DslErrorCode::UnexpectedToken, t.span,
                   "expected atom, number, or '(', got '" + t.text + "'");
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

KinematicExpr parse_kinematic(std::string_view text) { return KinematicParser(text).parse(); }

}  // namespace chiralkit
